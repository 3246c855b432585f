//! Canonical forms and isomorphism for small graphs.
//!
//! The canonical form is the minimum upper-triangle adjacency code over the
//! leaves of an individualisation-refinement search tree. Branching skips
//! vertices that are twins of an already-explored vertex in the same cell,
//! since swapping twins is an automorphism that fixes the partition.

use super::Graph;

/// Largest vertex count a [`CanonicalForm`] can encode.
pub const MAX_CANON_N: usize = 16;

/// Isomorphism-invariant key: equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub code: u128,
}

impl CanonicalForm {
    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        Graph::from_pair_bits(self.n as usize, self.code)
    }
}

fn pair_code(masks: &[u64], perm: &[usize]) -> u128 {
    // perm[v] = new label of v
    let n = masks.len();
    let mut inv = vec![0usize; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u128;
    let mut idx = 0;
    for i in 0..n {
        let row = masks[inv[i]];
        for j in i + 1..n {
            if row >> inv[j] & 1 == 1 {
                code |= 1 << idx;
            }
            idx += 1;
        }
    }
    code
}

/// Refines an ordered partition to an equitable one.
fn refine(masks: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let before = cells.len();
        let cell_masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = cell_masks
                        .iter()
                        .map(|&cm| (masks[v] & cm).count_ones())
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        *cells = next;
        if cells.len() == before {
            return;
        }
    }
}

fn search(masks: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; masks.len()];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let code = pair_code(masks, &perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm));
        }
        return;
    };
    let mut explored: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        let twin_of_explored = explored.iter().any(|&u| {
            let bu = 1u64 << u;
            let bv = 1u64 << v;
            masks[u] & !bv == masks[v] & !bu
        });
        if twin_of_explored {
            continue;
        }
        explored.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        refine(masks, &mut next);
        search(masks, next, best);
    }
}

/// Canonical form together with a canonical labelling (`perm[v]` = position of `v`).
pub fn canonical_labelling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CANON_N, "canonical form supports at most {MAX_CANON_N} vertices");
    if n == 0 {
        return (CanonicalForm { n: 0, code: 0 }, Vec::new());
    }
    let masks = g.adjacency_masks();
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(&masks, &mut cells);
    let mut best = None;
    search(&masks, cells, &mut best);
    let (code, perm) = best.expect("search visits at least one leaf");
    (CanonicalForm { n: n as u8, code }, perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labelling(g).0
}

/// Minimum code over every vertex permutation. Exponential; a test oracle for `n <= 8`.
pub fn brute_force_canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 10);
    let masks = g.adjacency_masks();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = pair_code(&masks, &perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(pair_code(&masks, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    CanonicalForm { n: n as u8, code: best }
}

/// An isomorphism `f` from `g` to `h` (edge `uv` in `g` iff `f(u)f(v)` in `h`).
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (cg, pg) = canonical_labelling(g);
    let (ch, ph) = canonical_labelling(h);
    if cg != ch {
        return None;
    }
    let mut inv_h = vec![0; h.n()];
    for (v, &p) in ph.iter().enumerate() {
        inv_h[p] = v;
    }
    Some(pg.iter().map(|&p| inv_h[p]).collect())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

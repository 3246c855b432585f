use super::{is_free, is_induced_subgraph, known, Atom, Pattern};
use crate::graph::Graph;

/// `S_{h,i,j}`: centre 0, then legs of `h`, `i` and `j` vertices in turn,
/// each leg listed outwards from the centre.
pub fn subdivided_claw(h: usize, i: usize, j: usize) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [h, i, j] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, &edges).unwrap()
}

/// `true` iff every component is a path or a subdivided claw, i.e. a tree
/// with maximum degree at most 3 and at most one vertex of degree 3.
pub fn is_in_s(g: &Graph) -> bool {
    g.components().iter().all(|c| {
        let verts = c.to_vec();
        let degs: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
        let edges = degs.iter().sum::<usize>() / 2;
        edges + 1 == verts.len()
            && degs.iter().all(|&d| d <= 3)
            && degs.iter().filter(|&&d| d == 3).count() <= 1
    })
}

/// Every graph of class S on `1..=max_n` vertices, one per isomorphism
/// class, as a disjoint union of paths and subdivided claws.
pub fn class_s_graphs(max_n: usize) -> Vec<(Pattern, Graph)> {
    let mut kinds: Vec<(usize, Atom)> = (1..=max_n).map(|r| (r, Atom::Path(r))).collect();
    for h in 1..=max_n {
        for i in h..=max_n {
            for j in i..=max_n {
                if 1 + h + i + j <= max_n {
                    kinds.push((1 + h + i + j, Atom::Claw(h, i, j)));
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    multisets(&kinds, 0, max_n, &mut chosen, &mut out);
    out
}

fn multisets(
    kinds: &[(usize, Atom)],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<(Pattern, Graph)>,
) {
    if !chosen.is_empty() {
        let mut terms: Vec<(usize, Atom)> = Vec::new();
        for &k in chosen.iter() {
            match terms.last_mut() {
                Some((m, a)) if *a == kinds[k].1 => *m += 1,
                _ => terms.push((1, kinds[k].1)),
            }
        }
        let p = Pattern { terms, complemented: false };
        let g = p.instantiate().expect("valid by construction");
        out.push((p, g));
    }
    for k in from..kinds.len() {
        if kinds[k].0 <= budget {
            chosen.push(k);
            multisets(kinds, k, budget - kinds[k].0, chosen, out);
            chosen.pop();
        }
    }
}

#[derive(Clone, Debug)]
pub struct UsefulReport {
    pub checked: usize,
    /// A graph of class S on which the two sides of the equivalence differ,
    /// with the values of (forbidden-free, induced in a listed graph).
    pub counterexample: Option<(Pattern, bool, bool)>,
}

impl UsefulReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// For every graph `H` of class S on at most `max_n` vertices, checks that
/// `H` is `(K1,3+P1, 2P2, 3P1+P2, S1,1,2)`-free exactly when `H` is an
/// induced subgraph of `K1,3`, `P1+P4`, `2P1+P3` or an edgeless graph.
pub fn lemma_useful_check(max_n: usize) -> UsefulReport {
    let forbidden: Vec<Graph> = ["K1,3+P1", "2P2", "3P1+P2", "S1,1,2"].map(known).to_vec();
    let hosts: Vec<Graph> = ["K1,3", "P1+P4", "2P1+P3"].map(known).to_vec();
    let mut checked = 0;
    for (p, g) in class_s_graphs(max_n) {
        checked += 1;
        let free = is_free(&g, &forbidden);
        let listed = g.edge_count() == 0 || hosts.iter().any(|host| is_induced_subgraph(&g, host));
        if free != listed {
            return UsefulReport { checked, counterexample: Some((p, free, listed)) };
        }
    }
    UsefulReport { checked, counterexample: None }
}

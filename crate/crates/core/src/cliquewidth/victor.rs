//! Certificates for graphs free of `2P1+P3` and its complement whose vertex
//! set splits into at most three cliques and at most three independent sets.
//!
//! The pipeline deletes a few vertices so that every pair of blocks becomes
//! complete, anti-complete, a matching or a co-matching, flips the complete
//! and co-matching pairs and every clique, certifies the remaining graph of
//! maximum degree 2 directly, and then undoes every step.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{contains_induced, known};

use super::builders::degree2_expression;
use super::certificate::{lift_add_vertex, lift_typed_flip, WidthCertificate};

/// Largest order accepted by [`find_mixed_partition`].
pub const MAX_PARTITION_N: usize = 12;

/// Width bound for [`victor_pipeline`] over every input: at most 66
/// deletions, a flip of six block types on a width-4 certificate (width at
/// most 48), and `k -> 2k + 1` for each re-added vertex.
pub const VICTOR_WIDTH_BOUND: u128 = 49 * (1u128 << 66) - 1;

/// Vertex deletions allowed by the reductions: three per side for each of
/// the nine clique and independent-set pairs, one per side for each of the
/// six pairs of like blocks.
pub const VICTOR_MAX_DELETIONS: usize = 2 * 3 * 3 * 3 + 2 * 2 * 3;

/// Width bound after `d` deletions: `49 * 2^d - 1`.
pub fn victor_width_bound(d: usize) -> u128 {
    49 * (1u128 << d) - 1
}

/// A partition of the vertices into clique blocks and independent blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedPartition {
    pub cliques: Vec<VertexSet>,
    pub indeps: Vec<VertexSet>,
}

impl MixedPartition {
    /// Blocks are pairwise disjoint, cover `V(g)`, and are cliques or
    /// independent sets as declared.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new(g.n());
        for b in self.cliques.iter().chain(&self.indeps) {
            if b.universe() != g.n() || !b.is_disjoint(&seen) {
                return false;
            }
            seen.union_with(b);
        }
        seen.len() == g.n()
            && self.cliques.iter().all(|c| g.is_clique(c))
            && self.indeps.iter().all(|i| g.is_independent(i))
    }
}

/// The lexicographically first assignment of vertices `0, 1, ...` to at
/// most `max_cliques` clique blocks followed by at most `max_indep`
/// independent blocks. Empty blocks are dropped.
pub fn find_mixed_partition(g: &Graph, max_cliques: usize, max_indep: usize) -> Result<Option<MixedPartition>> {
    let n = g.n();
    if n > MAX_PARTITION_N {
        return Err(Error::Budget { size: n, budget: MAX_PARTITION_N });
    }
    let mut blocks = vec![VertexSet::new(n); max_cliques + max_indep];
    if !assign(g, 0, max_cliques, &mut blocks) {
        return Ok(None);
    }
    let (c, i) = blocks.split_at(max_cliques);
    let keep = |bs: &[VertexSet]| bs.iter().filter(|b| !b.is_empty()).cloned().collect();
    Ok(Some(MixedPartition { cliques: keep(c), indeps: keep(i) }))
}

fn assign(g: &Graph, v: usize, max_cliques: usize, blocks: &mut [VertexSet]) -> bool {
    if v == g.n() {
        return true;
    }
    let nbrs = g.neighbors(v);
    for b in 0..blocks.len() {
        let is_clique = b < max_cliques;
        // Blocks of one kind are interchangeable: open only the first empty one.
        let first_of_kind = if is_clique { 0 } else { max_cliques };
        if blocks[b].is_empty() && blocks[first_of_kind..b].iter().any(|x| x.is_empty()) {
            continue;
        }
        let fits = if is_clique { blocks[b].is_subset(nbrs) } else { blocks[b].is_disjoint(nbrs) };
        if fits {
            blocks[b].insert(v);
            if assign(g, v + 1, max_cliques, blocks) {
                return true;
            }
            blocks[b].remove(v);
        }
    }
    false
}

/// How the edges between two disjoint sets look.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockRelation {
    Complete,
    AntiComplete,
    /// Every vertex has at most one neighbour on the other side.
    Matching,
    /// Every vertex has at most one non-neighbour on the other side.
    CoMatching,
}

impl BlockRelation {
    pub fn holds(self, g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
        let each = |a: &VertexSet, b: &VertexSet, ok: &dyn Fn(usize) -> bool| {
            a.iter().all(|u| ok(g.neighbors(u).intersection_len(b)))
        };
        let both = |ok: &dyn Fn(usize, usize) -> bool| {
            each(x, y, &|d| ok(d, y.len())) && each(y, x, &|d| ok(d, x.len()))
        };
        match self {
            BlockRelation::Complete => both(&|d, s| d == s),
            BlockRelation::AntiComplete => both(&|d, _| d == 0),
            BlockRelation::Matching => both(&|d, _| d <= 1),
            BlockRelation::CoMatching => both(&|d, s| d + 1 >= s),
        }
    }
}

/// Vertices removed from two sets so that the rest satisfy `relation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub from_x: VertexSet,
    pub from_y: VertexSet,
    pub relation: BlockRelation,
}

impl Deletion {
    pub fn len(&self) -> usize {
        self.from_x.len() + self.from_y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The smallest deletion of at most three vertices from each of `x` and `y`
/// after which they are complete or anti-complete. Ties go to the
/// lexicographically smallest set of deleted vertices; anti-complete is
/// reported when both hold.
pub fn comp_anti_deletion(g: &Graph, x: &VertexSet, y: &VertexSet) -> Option<Deletion> {
    smallest_deletion(g, x, y, 3, &[BlockRelation::AntiComplete, BlockRelation::Complete])
}

/// The smallest deletion of at most one vertex from each of `x` and `y`
/// after which the edges between them form a matching or a co-matching.
/// Ties as in [`comp_anti_deletion`]; matching is reported when both hold.
pub fn matching_comatching_deletion(g: &Graph, x: &VertexSet, y: &VertexSet) -> Option<Deletion> {
    smallest_deletion(g, x, y, 1, &[BlockRelation::Matching, BlockRelation::CoMatching])
}

fn smallest_deletion(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    per_side: usize,
    relations: &[BlockRelation],
) -> Option<Deletion> {
    let dx = small_subsets(&x.to_vec(), per_side);
    let dy = small_subsets(&y.to_vec(), per_side);
    let mut candidates: Vec<(usize, Vec<usize>, usize, usize)> = Vec::new();
    for (i, a) in dx.iter().enumerate() {
        for (j, b) in dy.iter().enumerate() {
            let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
            all.sort_unstable();
            candidates.push((all.len(), all, i, j));
        }
    }
    candidates.sort();
    let n = g.n();
    candidates.into_iter().find_map(|(_, _, i, j)| {
        let from_x = VertexSet::from_iter(n, dx[i].iter().copied());
        let from_y = VertexSet::from_iter(n, dy[j].iter().copied());
        let (rx, ry) = (x.difference(&from_x), y.difference(&from_y));
        relations
            .iter()
            .find(|r| r.holds(g, &rx, &ry))
            .map(|&relation| Deletion { from_x: from_x.clone(), from_y: from_y.clone(), relation })
    })
}

/// Subsets of `items` with at most `k` elements.
fn small_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![(Vec::new(), 0usize)];
    for _ in 0..k {
        let mut next = Vec::new();
        for (s, from) in frontier {
            for i in from..items.len() {
                let mut t: Vec<usize> = s.clone();
                t.push(items[i]);
                out.push(t.clone());
                next.push((t, i + 1));
            }
        }
        frontier = next;
    }
    out
}

/// The result of [`victor_pipeline`].
#[derive(Clone, Debug)]
pub struct VictorOutcome {
    pub certificate: WidthCertificate,
    /// Deleted vertices in the order they were removed.
    pub deleted: Vec<usize>,
    /// [`victor_width_bound`] for this number of deletions.
    pub bound: u128,
}

/// A certificate for `g` built by reductions to maximum degree 2.
///
/// Fails if `g` contains `2P1+P3` or its complement (with the witness) or
/// if `part` has more than three blocks of a kind or is not a valid
/// partition.
pub fn victor_pipeline(g: &Graph, part: &MixedPartition) -> Result<VictorOutcome> {
    for name in ["2P1+P3", "co-2P1+P3"] {
        if let Some(witness) = contains_induced(g, &known(name)) {
            return Err(Error::ContainsPattern { pattern: name.into(), witness });
        }
    }
    if part.cliques.len() > 3 || part.indeps.len() > 3 {
        return Err(Error::Precondition("more than three blocks of a kind".into()));
    }
    if !part.is_valid(g) {
        return Err(Error::Precondition("not a partition into cliques and independent sets".into()));
    }
    let n = g.n();
    let pad = |bs: &[VertexSet]| {
        let mut v = bs.to_vec();
        v.resize(3, VertexSet::new(n));
        v
    };
    // Types 0..3 are the cliques, 3..6 the independent sets.
    let mut blocks: Vec<VertexSet> = pad(&part.cliques);
    blocks.extend(pad(&part.indeps));
    let mut deleted = Vec::new();
    let mut remove = |blocks: &mut [VertexSet], d: &Deletion| {
        for v in d.from_x.iter().chain(d.from_y.iter()) {
            deleted.push(v);
            for b in blocks.iter_mut() {
                b.remove(v);
            }
        }
    };
    for i in 0..3 {
        for j in 3..6 {
            let d = comp_anti_deletion(g, &blocks[i], &blocks[j]).ok_or_else(|| {
                Error::Precondition(format!("no complete or anti-complete reduction for blocks {i} and {j}"))
            })?;
            remove(&mut blocks, &d);
        }
    }
    let like_pairs = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    for &(i, j) in &like_pairs {
        let d = matching_comatching_deletion(g, &blocks[i], &blocks[j]).ok_or_else(|| {
            Error::Precondition(format!("no matching or co-matching reduction for blocks {i} and {j}"))
        })?;
        remove(&mut blocks, &d);
    }

    let mut flip = vec![vec![false; 6]; 6];
    for i in 0..3 {
        flip[i][i] = true;
        for j in 3..6 {
            let f = !BlockRelation::AntiComplete.holds(g, &blocks[i], &blocks[j]);
            flip[i][j] = f;
            flip[j][i] = f;
        }
    }
    for &(i, j) in &like_pairs {
        let f = !BlockRelation::Matching.holds(g, &blocks[i], &blocks[j]);
        flip[i][j] = f;
        flip[j][i] = f;
    }

    let alive: Vec<usize> = (0..n).filter(|v| !deleted.contains(v)).collect();
    let core = g.induced_by_order(&alive);
    let types: Vec<usize> = alive.iter().map(|&v| blocks.iter().position(|b| b.contains(v)).unwrap()).collect();
    let mut reduced = core.clone();
    for a in 0..alive.len() {
        for b in a + 1..alive.len() {
            if flip[types[a]][types[b]] {
                reduced.toggle_edge_unchecked(a, b);
            }
        }
    }
    let base = degree2_expression(&reduced).map_err(|e| {
        Error::Precondition(format!("reduced graph is not of maximum degree 2: {e}"))
    })?;
    let mut cert = lift_typed_flip(&base, &types, &flip)?;
    debug_assert_eq!(cert.graph(), &core);

    let mut present: Vec<usize> = alive;
    for &v in deleted.iter().rev() {
        let pos = present.partition_point(|&w| w < v);
        present.insert(pos, v);
        let m = present.len();
        let nbrs = VertexSet::from_iter(m, (0..m).filter(|&i| g.has_edge(present[i], v)));
        cert = lift_add_vertex(&cert, pos, &nbrs)?;
    }
    debug_assert_eq!(cert.graph(), g);
    let bound = victor_width_bound(deleted.len());
    assert!(deleted.len() <= VICTOR_MAX_DELETIONS);
    assert!(cert.width() as u128 <= bound, "pipeline exceeded its width bound");
    Ok(VictorOutcome { certificate: cert, deleted, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn constants() {
        assert_eq!(VICTOR_MAX_DELETIONS, 66);
        assert_eq!(victor_width_bound(0), 48);
        assert_eq!(victor_width_bound(VICTOR_MAX_DELETIONS), VICTOR_WIDTH_BOUND);
    }

    #[test]
    fn partition_examples() {
        let c5 = cycle(5);
        let p = find_mixed_partition(&c5, 3, 3).unwrap().unwrap();
        assert!(p.is_valid(&c5));
        assert_eq!(p.cliques, vec![set(5, &[0, 1]), set(5, &[2, 3]), set(5, &[4])]);
        assert_eq!(find_mixed_partition(&complete(7), 0, 3).unwrap(), None);
        let three = Graph::empty(3);
        assert_eq!(
            find_mixed_partition(&three, 0, 1).unwrap(),
            Some(MixedPartition { cliques: vec![], indeps: vec![set(3, &[0, 1, 2])] })
        );
        assert!(find_mixed_partition(&Graph::empty(13), 3, 3).is_err());
    }

    #[test]
    fn relations() {
        let k2 = complete(2);
        let (a, b) = (set(2, &[0]), set(2, &[1]));
        assert!(BlockRelation::Complete.holds(&k2, &a, &b));
        assert!(BlockRelation::Matching.holds(&k2, &a, &b));
        assert!(!BlockRelation::AntiComplete.holds(&k2, &a, &b));
        let p4 = path(4);
        let (x, y) = (set(4, &[0, 2]), set(4, &[1, 3]));
        assert!(!BlockRelation::Matching.holds(&p4, &x, &y));
        assert!(BlockRelation::CoMatching.holds(&p4, &x, &y));
    }

    #[test]
    fn deletion_examples() {
        let p4 = path(4);
        let d = comp_anti_deletion(&p4, &set(4, &[0, 2]), &set(4, &[1, 3])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.from_x, set(4, &[0]));
        assert_eq!(d.relation, BlockRelation::Complete);
        let d = matching_comatching_deletion(&p4, &set(4, &[0, 2]), &set(4, &[1, 3])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.relation, BlockRelation::CoMatching);
    }

    #[test]
    fn pipeline_examples() {
        let k3 = complete(3);
        let one = MixedPartition { cliques: vec![VertexSet::full(3)], indeps: vec![] };
        let out = victor_pipeline(&k3, &one).unwrap();
        assert!(out.deleted.is_empty());
        assert_eq!(out.certificate.graph(), &k3);

        let c5 = cycle(5);
        let part = MixedPartition { cliques: vec![set(5, &[0, 1])], indeps: vec![set(5, &[2, 4]), set(5, &[3])] };
        let out = victor_pipeline(&c5, &part).unwrap();
        assert!(out.certificate.verify());
        assert_eq!(out.certificate.graph(), &c5);
        assert!(out.certificate.width() as u128 <= out.bound);

        let bad = MixedPartition { cliques: vec![set(5, &[0, 2])], indeps: vec![set(5, &[1, 3, 4])] };
        assert!(victor_pipeline(&c5, &bad).is_err());
        assert!(matches!(
            victor_pipeline(&known("2P1+P3"), &MixedPartition { cliques: vec![], indeps: vec![] }),
            Err(Error::ContainsPattern { .. })
        ));
    }
}

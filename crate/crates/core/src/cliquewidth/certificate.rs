use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::expr::{evaluate, width, KExpression};
use super::lift::{add_vertex, flip_width_bound, typed_flip};
use super::tree::Tree;

/// An expression together with the graph it builds.
///
/// The `i`-th `Vertex` leaf of `expr` (left to right) creates vertex
/// `leaves[i]` of `graph`, so the certificate pins down the graph exactly,
/// not only up to isomorphism. The graph on no vertices has no expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthCertificate {
    graph: Graph,
    expr: Option<KExpression>,
    leaves: Vec<usize>,
    width: usize,
}

impl WidthCertificate {
    /// Checks that `expr` evaluates to `graph` under `leaves`.
    pub fn new(graph: Graph, expr: KExpression, leaves: Vec<usize>) -> Result<Self> {
        Tree::from_expression(&expr, &leaves, &graph)?;
        let width = width(&expr);
        Ok(WidthCertificate { graph, expr: Some(expr), leaves, width })
    }

    /// Uses the identity leaf map.
    pub fn for_expression(expr: KExpression) -> Result<Self> {
        let graph = evaluate(&expr)?.graph;
        let leaves = (0..graph.n()).collect();
        Self::new(graph, expr, leaves)
    }

    pub fn empty() -> Self {
        WidthCertificate { graph: Graph::empty(0), expr: None, leaves: Vec::new(), width: 0 }
    }

    pub(crate) fn from_tree(graph: Graph, tree: Option<&Tree>) -> Self {
        let Some(tree) = tree else {
            assert_eq!(graph.n(), 0, "only the empty graph has no tree");
            return Self::empty();
        };
        let (expr, leaves) = tree.to_expression();
        let built = evaluate(&expr).expect("trees emit valid expressions").graph;
        assert!(built.permute(&leaves) == graph, "tree does not build the certified graph");
        let width = width(&expr);
        WidthCertificate { graph, expr: Some(expr), leaves, width }
    }

    pub(crate) fn tree(&self) -> Option<Tree> {
        self.expr.as_ref().map(|e| {
            Tree::from_expression(e, &self.leaves, &self.graph).expect("certificates are checked on creation")
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn expr(&self) -> Option<&KExpression> {
        self.expr.as_ref()
    }

    pub fn leaves(&self) -> &[usize] {
        &self.leaves
    }

    /// Distinct labels used; 0 only for the empty graph.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Re-evaluates the expression and compares with the graph.
    pub fn verify(&self) -> bool {
        match &self.expr {
            None => self.graph.n() == 0,
            Some(e) => evaluate(e).is_ok_and(|lg| {
                lg.graph.n() == self.leaves.len() && lg.graph.permute(&self.leaves) == self.graph
            }) && width(e) == self.width,
        }
    }
}

/// A certificate for the graph obtained by inserting a vertex at position
/// `v` with neighbourhood `neighbors`, given in the ids of the new graph.
/// Existing vertices `w >= v` move to `w + 1`.
///
/// Width at most `2 * width(cert) + 1`.
pub fn lift_add_vertex(cert: &WidthCertificate, v: usize, neighbors: &VertexSet) -> Result<WidthCertificate> {
    let n = cert.graph.n();
    if v > n {
        return Err(Error::VertexOutOfRange { vertex: v, n: n + 1 });
    }
    if neighbors.universe() != n + 1 {
        return Err(Error::Precondition(format!(
            "neighbour set has universe {}, expected {}",
            neighbors.universe(),
            n + 1
        )));
    }
    if neighbors.contains(v) {
        return Err(Error::LoopEdge(v));
    }
    let shift = |w: usize| if w >= v { w + 1 } else { w };
    let perm: Vec<usize> = (0..n).map(shift).collect();
    let mut target = cert.graph.disjoint_union(&Graph::empty(1)).permute(
        &perm.iter().copied().chain([v]).collect::<Vec<_>>(),
    );
    for u in neighbors.iter() {
        target.add_edge_unchecked(u, v);
    }
    let tree = add_vertex(cert.tree().as_ref(), &cert.graph, v, neighbors);
    let out = WidthCertificate::from_tree(target, Some(&tree));
    assert!(out.width <= 2 * cert.width + 1, "vertex insertion exceeded 2k+1");
    Ok(out)
}

/// A certificate for the graph in which `uv` is flipped exactly when
/// `flip[types[u]][types[v]]` holds. `flip` must be symmetric.
///
/// Width at most `(u + 2a) * width(cert)` where `a` counts the types that
/// occur and take part in some flip and `u` counts the other types that
/// occur.
pub fn lift_typed_flip(cert: &WidthCertificate, types: &[usize], flip: &[Vec<bool>]) -> Result<WidthCertificate> {
    let n = cert.graph.n();
    if types.len() != n {
        return Err(Error::Precondition(format!("{} types for {n} vertices", types.len())));
    }
    let t = flip.len();
    if flip.iter().any(|row| row.len() != t) || types.iter().any(|&ty| ty >= t) {
        return Err(Error::Precondition("flip table does not cover every type".into()));
    }
    if (0..t).any(|a| (0..t).any(|b| flip[a][b] != flip[b][a])) {
        return Err(Error::Precondition("flip table is not symmetric".into()));
    }
    let mut target = cert.graph.clone();
    for u in 0..n {
        for w in u + 1..n {
            if flip[types[u]][types[w]] {
                target.toggle_edge_unchecked(u, w);
            }
        }
    }
    let Some(tree) = cert.tree() else {
        return Ok(WidthCertificate::empty());
    };
    let flipped = typed_flip(&tree, &cert.graph, types, flip);
    let out = WidthCertificate::from_tree(target, Some(&flipped));
    let bound = flip_width_bound(cert.width, types, flip);
    assert!(out.width <= bound, "typed flip exceeded its width bound {bound}");
    Ok(out)
}

/// Complements the subgraph induced by `s`.
///
/// Width at most `2 * width(cert)` when `s` is empty or everything, and at
/// most `3 * width(cert)` otherwise.
pub fn lift_subgraph_complementation(cert: &WidthCertificate, s: &VertexSet) -> Result<WidthCertificate> {
    cert.graph.check_set(s)?;
    let types: Vec<usize> = (0..cert.graph.n()).map(|v| s.contains(v) as usize).collect();
    let flip = vec![vec![false, false], vec![false, true]];
    lift_typed_flip(cert, &types, &flip)
}

/// Complements the edges between disjoint sets `s` and `t`.
///
/// Width at most `5 * width(cert)`.
pub fn lift_bipartite_complementation(
    cert: &WidthCertificate,
    s: &VertexSet,
    t: &VertexSet,
) -> Result<WidthCertificate> {
    cert.graph.check_set(s)?;
    cert.graph.check_set(t)?;
    if let Some(v) = s.intersection(t).first() {
        return Err(Error::Overlap(v));
    }
    let types: Vec<usize> = (0..cert.graph.n())
        .map(|v| if s.contains(v) { 1 } else if t.contains(v) { 2 } else { 0 })
        .collect();
    let mut flip = vec![vec![false; 3]; 3];
    flip[1][2] = true;
    flip[2][1] = true;
    lift_typed_flip(cert, &types, &flip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquewidth::expr::tests::p4_expression;
    use crate::graph::{complete, cycle, edgeless, is_isomorphic, path, star};
    use proptest::prelude::*;

    fn k_expression(n: u32) -> KExpression {
        let mut e = KExpression::vertex(1);
        for _ in 1..n {
            e = KExpression::rename(2, 1, KExpression::join(1, 2, KExpression::union(e, KExpression::vertex(2))));
        }
        e
    }

    fn edgeless_expression(n: usize) -> KExpression {
        let mut e = KExpression::vertex(1);
        for _ in 1..n {
            e = KExpression::union(e, KExpression::vertex(1));
        }
        e
    }

    #[test]
    fn certificate_checks_its_graph() {
        let c = WidthCertificate::for_expression(p4_expression()).unwrap();
        assert_eq!(c.graph(), &path(4));
        assert_eq!(c.width(), 3);
        assert!(c.verify());
        assert!(WidthCertificate::new(cycle(4), p4_expression(), vec![0, 1, 2, 3]).is_err());
        assert!(WidthCertificate::empty().verify());
    }

    #[test]
    fn add_vertex_examples() {
        let k3 = WidthCertificate::for_expression(k_expression(3)).unwrap();
        let out = lift_add_vertex(&k3, 3, &VertexSet::new(4)).unwrap();
        assert_eq!(out.graph(), &complete(3).disjoint_union(&edgeless(1)));
        assert!(out.width() <= 3 && out.verify());

        let s4 = WidthCertificate::for_expression(edgeless_expression(4)).unwrap();
        let out = lift_add_vertex(&s4, 0, &VertexSet::from_iter(5, 1..5)).unwrap();
        assert_eq!(out.graph(), &star(4));
        assert!(out.verify());

        let out = lift_add_vertex(&WidthCertificate::empty(), 0, &VertexSet::new(1)).unwrap();
        assert_eq!(out.graph(), &edgeless(1));
        assert_eq!(out.width(), 1);

        assert!(lift_add_vertex(&k3, 1, &VertexSet::from_iter(4, [1])).is_err());
        assert!(lift_add_vertex(&k3, 5, &VertexSet::new(4)).is_err());
    }

    #[test]
    fn complementation_examples() {
        let k3 = WidthCertificate::for_expression(k_expression(3)).unwrap();
        let out = lift_subgraph_complementation(&k3, &VertexSet::full(3)).unwrap();
        assert_eq!(out.graph(), &edgeless(3));
        assert!(out.width() <= 4);
        let same = lift_subgraph_complementation(&k3, &VertexSet::new(3)).unwrap();
        assert_eq!(same.graph(), k3.graph());

        let c5 = cycle(5);
        let tree_c5 = WidthCertificate::new(c5.clone(), cycle_expression(), (0..5).collect()).unwrap();
        let out = lift_subgraph_complementation(&tree_c5, &VertexSet::full(5)).unwrap();
        assert!(is_isomorphic(out.graph(), &c5));
        assert!(out.width() <= 2 * tree_c5.width());
    }

    /// `C5` as `0-1-2-3-4-0`, four labels.
    fn cycle_expression() -> KExpression {
        use KExpression as K;
        let mut e = K::join(1, 2, K::union(K::vertex(1), K::vertex(2)));
        for _ in 0..3 {
            e = K::rename(4, 2, K::rename(2, 3, K::join(2, 4, K::union(e, K::vertex(4)))));
        }
        K::join(1, 2, e)
    }

    #[test]
    fn bipartite_examples() {
        let two_p2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let c = WidthCertificate::new(
            two_p2.clone(),
            KExpression::union(k_expression(2), k_expression(2)),
            (0..4).collect(),
        )
        .unwrap();
        let out = lift_bipartite_complementation(&c, &VertexSet::from_iter(4, [0, 1]), &VertexSet::from_iter(4, [2, 3]))
            .unwrap();
        assert_eq!(out.graph(), &complete(4));
        assert!(out.width() <= 5 * c.width());
        let same = lift_bipartite_complementation(&c, &VertexSet::from_iter(4, [0]), &VertexSet::new(4)).unwrap();
        assert_eq!(same.graph(), &two_p2);

        let k2 = WidthCertificate::for_expression(k_expression(2)).unwrap();
        let out = lift_bipartite_complementation(&k2, &VertexSet::from_iter(2, [0]), &VertexSet::from_iter(2, [1]))
            .unwrap();
        assert_eq!(out.graph(), &edgeless(2));
        assert!(lift_bipartite_complementation(&k2, &VertexSet::full(2), &VertexSet::full(2)).is_err());
    }

    /// A random graph together with a certificate built by inserting its
    /// vertices one at a time.
    fn arb_certified() -> impl Strategy<Value = (Graph, u64)> {
        (1usize..8, any::<u128>(), any::<u64>()).prop_map(|(n, bits, extra)| (Graph::from_pair_bits(n, bits), extra))
    }

    fn certify(g: &Graph) -> WidthCertificate {
        let mut cert = WidthCertificate::empty();
        for v in 0..g.n() {
            let sub = g.induced_by_order(&(0..=v).collect::<Vec<_>>());
            let nbrs = sub.neighbors(v).clone();
            cert = lift_add_vertex(&cert, v, &nbrs).unwrap();
            assert_eq!(cert.graph(), &sub);
        }
        cert
    }

    proptest! {
        #[test]
        fn lifts_build_exact_targets((g, extra) in arb_certified()) {
            let n = g.n();
            let cert = certify(&g);
            prop_assert!(cert.verify());
            let s = VertexSet::from_mask(n, extra & ((1 << n) - 1));
            let t = VertexSet::from_mask(n, (extra >> 8) & ((1 << n) - 1)).difference(&s);
            let k = cert.width();

            let out = lift_subgraph_complementation(&cert, &s).unwrap();
            prop_assert_eq!(out.graph(), &g.subgraph_complementation(&s).unwrap());
            let factor = if s.is_empty() || s.len() == n { 2 } else { 3 };
            prop_assert!(out.width() <= factor * k);

            let out = lift_bipartite_complementation(&cert, &s, &t).unwrap();
            prop_assert_eq!(out.graph(), &g.bipartite_complementation(&s, &t).unwrap());
            prop_assert!(out.width() <= 5 * k);

            let v = (extra >> 16) as usize % (n + 1);
            let nbrs = VertexSet::from_mask(n + 1, (extra >> 24) & ((1 << (n + 1)) - 1)).difference(&VertexSet::from_iter(n + 1, [v]));
            let out = lift_add_vertex(&cert, v, &nbrs).unwrap();
            prop_assert!(out.verify());
            prop_assert_eq!(out.graph().delete_vertex(v).unwrap(), g.clone());
            prop_assert_eq!(out.graph().neighbors(v), &nbrs);
            prop_assert!(out.width() <= 2 * k + 1);
        }
    }
}

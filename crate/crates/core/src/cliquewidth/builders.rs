//! Direct constructions for cographs and graphs of maximum degree 2.

use crate::error::{Error, Result};
use crate::graph::{path, Graph, VertexSet};
use crate::patterns::contains_induced;

use super::certificate::WidthCertificate;
use super::expr::KExpression as K;

/// A certificate of width at most 2 for a `P4`-free graph, following its
/// cotree. Fails with an induced `P4` otherwise.
pub fn cograph_expression(g: &Graph) -> Result<WidthCertificate> {
    if let Some(witness) = contains_induced(g, &path(4)) {
        return Err(Error::ContainsPattern { pattern: "P4".into(), witness });
    }
    if g.n() == 0 {
        return Ok(WidthCertificate::empty());
    }
    let mut leaves = Vec::new();
    let e = cotree(g, &g.vertices(), &mut leaves);
    WidthCertificate::new(g.clone(), e, leaves)
}

/// Every vertex of the result has label 1.
fn cotree(g: &Graph, x: &VertexSet, leaves: &mut Vec<usize>) -> K {
    if x.len() == 1 {
        leaves.push(x.first().unwrap());
        return K::vertex(1);
    }
    let parts = parts_within(g, x, false);
    if parts.len() > 1 {
        return parts
            .iter()
            .map(|p| cotree(g, p, leaves))
            .reduce(K::union)
            .unwrap();
    }
    // A P4-free graph on two or more vertices is disconnected or has a
    // disconnected complement.
    let co = parts_within(g, x, true);
    debug_assert!(co.len() > 1);
    let mut parts = co.iter();
    let mut e = cotree(g, parts.next().unwrap(), leaves);
    for p in parts {
        let next = K::rename(1, 2, cotree(g, p, leaves));
        e = K::rename(2, 1, K::join(1, 2, K::union(e, next)));
    }
    e
}

/// Components of `g[x]`, or of its complement with `co`.
fn parts_within(g: &Graph, x: &VertexSet, co: bool) -> Vec<VertexSet> {
    let mut left = x.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut part = VertexSet::from_iter(g.n(), [start]);
        let mut frontier = vec![start];
        left.remove(start);
        while let Some(u) = frontier.pop() {
            let reach = if co { left.difference(g.neighbors(u)) } else { left.intersection(g.neighbors(u)) };
            for w in reach.iter() {
                left.remove(w);
                part.insert(w);
                frontier.push(w);
            }
        }
        out.push(part);
    }
    out
}

/// A certificate of width at most 4 for a graph of maximum degree at most
/// 2. Paths use at most 3 labels and cycles 4.
pub fn degree2_expression(g: &Graph) -> Result<WidthCertificate> {
    let d = g.max_degree();
    if d > 2 {
        return Err(Error::DegreeTooLarge(d));
    }
    if g.n() == 0 {
        return Ok(WidthCertificate::empty());
    }
    let mut leaves = Vec::new();
    let e = parts_within(g, &g.vertices(), false)
        .iter()
        .map(|c| component(g, c, &mut leaves))
        .reduce(K::union)
        .unwrap();
    WidthCertificate::new(g.clone(), e, leaves)
}

/// Path or cycle on `c`, every vertex ending with label 1.
///
/// Label 2 marks the current end of the path, 3 the vertex being attached,
/// and 4 the start of a cycle until it is closed.
fn component(g: &Graph, c: &VertexSet, leaves: &mut Vec<usize>) -> K {
    let first = c.first().unwrap();
    if c.len() == 1 {
        leaves.push(first);
        return K::vertex(1);
    }
    let is_cycle = c.iter().all(|v| g.degree(v) == 2);
    let start = if is_cycle { first } else { c.iter().find(|&v| g.degree(v) == 1).unwrap() };
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(next) = g.neighbors(cur).iter().find(|&w| Some(w) != prev && w != start) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    debug_assert_eq!(order.len(), c.len());
    leaves.extend(&order);
    let (mut e, rest) = if is_cycle {
        (K::join(4, 2, K::union(K::vertex(4), K::vertex(2))), &order[2..])
    } else {
        (K::vertex(2), &order[1..])
    };
    for _ in rest {
        e = K::rename(3, 2, K::rename(2, 1, K::join(2, 3, K::union(e, K::vertex(3)))));
    }
    if is_cycle {
        e = K::rename(4, 1, K::rename(2, 1, K::join(2, 4, e)));
    } else {
        e = K::rename(2, 1, e);
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless, enumerate_hereditary};
    use crate::patterns::is_free;

    #[test]
    fn cograph_examples() {
        let k3 = cograph_expression(&complete(3)).unwrap();
        assert_eq!(k3.width(), 2);
        let c4 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap().complement();
        assert_eq!(cograph_expression(&c4).unwrap().width(), 2);
        match cograph_expression(&path(4)) {
            Err(Error::ContainsPattern { witness, .. }) => assert_eq!(witness, VertexSet::full(4)),
            other => panic!("{other:?}"),
        }
        assert_eq!(cograph_expression(&edgeless(3)).unwrap().width(), 1);
    }

    #[test]
    fn every_small_cograph_is_certified() {
        for g in enumerate_hereditary(7, |g| is_free(g, &[path(4)])).unwrap() {
            let c = cograph_expression(&g).unwrap();
            assert!(c.verify() && c.width() <= 2);
        }
    }

    #[test]
    fn degree2_examples() {
        let c6 = degree2_expression(&cycle(6)).unwrap();
        assert!(c6.width() <= 4 && c6.verify());
        assert!(degree2_expression(&path(10)).unwrap().width() <= 3);
        assert_eq!(degree2_expression(&edgeless(3)).unwrap().width(), 1);
        assert_eq!(degree2_expression(&cycle(3)).unwrap().graph(), &complete(3));
        assert_eq!(degree2_expression(&complete(4)), Err(Error::DegreeTooLarge(3)));
        let mixed = cycle(4).disjoint_union(&path(3)).disjoint_union(&edgeless(1));
        assert!(degree2_expression(&mixed).unwrap().verify());
    }

    #[test]
    fn every_small_degree2_graph_is_certified() {
        for g in enumerate_hereditary(7, |g| g.max_degree() <= 2).unwrap() {
            let c = degree2_expression(&g).unwrap();
            assert!(c.verify() && c.width() <= 4);
        }
    }
}

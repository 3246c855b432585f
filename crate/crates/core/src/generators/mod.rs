//! Walls, subdivisions, the three wall-based constructions of unbounded
//! clique-width, and freeness reports for them.

mod wall;

use std::fmt;

pub use wall::{wall, Wall};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::patterns::{contains_induced, Atom, Pattern};

/// A graph with every edge replaced by a path through `k` new vertices.
///
/// Original vertices keep their ids. The new vertices on the `j`-th edge
/// `uv` (in [`Graph::edges`] order, `u < v`) get ids `n + j*k ..`, in order
/// from `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    pub k: usize,
    /// For each vertex, the original edge it subdivides, if any.
    pub origin: Vec<Option<(usize, usize)>>,
}

pub fn subdivide_all(g: &Graph, k: usize) -> Subdivision {
    let n = g.n();
    let original = g.edges();
    let total = n + original.len() * k;
    let mut edges = Vec::new();
    let mut origin = vec![None; n];
    for (j, &(u, v)) in original.iter().enumerate() {
        let mut prev = u;
        for t in 0..k {
            let w = n + j * k + t;
            origin.push(Some((u, v)));
            edges.push((prev, w));
            prev = w;
        }
        edges.push((prev, v));
    }
    let graph = Graph::new(total, &edges).expect("subdivision edges are in range");
    Subdivision { graph, k, origin }
}

/// Vertex classes named in the constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Vertices of the original wall.
    V1,
    /// Subdividing vertices (of vertical edges, when `V3` is also used).
    V2,
    /// Subdividing vertices of horizontal edges.
    V3,
    /// The side of vertex 0 in the bipartition.
    A,
    B,
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A step applied to the subdivided wall, in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    /// Complements the subgraph induced by a class.
    Complement(VertexClass),
    /// Makes the neighbourhood of every vertex of the class a clique.
    CliqueNeighbourhoods(VertexClass),
    /// Deletes a class; later vertices shift down.
    Delete(VertexClass),
}

/// How a construction was built: wall height, subdivision level, the class
/// of every vertex of the subdivided wall, and the operations applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub height: usize,
    pub subdivision: usize,
    pub classes: Vec<VertexClass>,
    pub operations: Vec<Operation>,
}

impl ConstructionTrace {
    pub fn members(&self, class: VertexClass) -> VertexSet {
        VertexSet::from_iter(self.classes.len(), (0..self.classes.len()).filter(|&v| self.classes[v] == class))
    }

    /// Rebuilds the output graph from the wall.
    pub fn replay(&self) -> Result<Graph> {
        let mut g = subdivide_all(&wall(self.height)?.graph, self.subdivision).graph;
        let mut alive: Vec<usize> = (0..g.n()).collect();
        for &op in &self.operations {
            let class: Vec<usize> = (0..alive.len()).filter(|&i| self.classes[alive[i]] == op.class()).collect();
            let set = VertexSet::from_iter(g.n(), class.iter().copied());
            g = match op {
                Operation::Complement(_) => g.subgraph_complementation(&set)?,
                Operation::CliqueNeighbourhoods(_) => {
                    let mut h = g.clone();
                    for &v in &class {
                        let nbrs = g.neighbors(v).to_vec();
                        for (i, &a) in nbrs.iter().enumerate() {
                            for &b in &nbrs[i + 1..] {
                                h.add_edge_unchecked(a, b);
                            }
                        }
                    }
                    h
                }
                Operation::Delete(_) => {
                    alive = (0..alive.len()).filter(|i| !set.contains(*i)).map(|i| alive[i]).collect();
                    g.delete_vertices(&set)?
                }
            };
        }
        Ok(g)
    }

    /// `CLASS <vertex> <class>` for every vertex of the subdivided wall.
    pub fn class_lines(&self) -> String {
        self.classes.iter().enumerate().map(|(v, c)| format!("CLASS {v} {c}\n")).collect()
    }
}

impl Operation {
    fn class(self) -> VertexClass {
        match self {
            Operation::Complement(c) | Operation::CliqueNeighbourhoods(c) | Operation::Delete(c) => c,
        }
    }
}

/// The 1-subdivided wall with its three classes (original vertices,
/// vertical subdividers, horizontal subdividers) each complemented into a
/// clique.
pub fn thm5_graph(height: usize) -> Result<(Graph, ConstructionTrace)> {
    let w = wall(height)?;
    let s = subdivide_all(&w.graph, 1);
    let classes = s
        .origin
        .iter()
        .map(|o| match o {
            None => VertexClass::V1,
            Some((u, v)) if w.is_vertical(*u, *v) => VertexClass::V2,
            Some(_) => VertexClass::V3,
        })
        .collect();
    let operations = [VertexClass::V1, VertexClass::V2, VertexClass::V3].map(Operation::Complement).to_vec();
    finish(ConstructionTrace { height, subdivision: 1, classes, operations })
}

/// The 1-subdivided wall with the neighbourhood of every original vertex
/// made a clique, then the original vertices deleted. Output vertex `i` is
/// the `i`-th subdividing vertex.
pub fn thm6_graph(height: usize) -> Result<(Graph, ConstructionTrace)> {
    let s = subdivide_all(&wall(height)?.graph, 1);
    let classes = s.origin.iter().map(|o| if o.is_none() { VertexClass::V1 } else { VertexClass::V2 }).collect();
    let operations = vec![Operation::CliqueNeighbourhoods(VertexClass::V1), Operation::Delete(VertexClass::V1)];
    finish(ConstructionTrace { height, subdivision: 1, classes, operations })
}

/// The 2-subdivided wall with the side `A` of vertex 0 complemented. The
/// result is split with clique `A` and independent set `B`.
pub fn thm7_graph(height: usize) -> Result<(Graph, ConstructionTrace)> {
    let s = subdivide_all(&wall(height)?.graph, 2);
    let sides = s.graph.bipartition().expect("subdivided walls are bipartite");
    let classes = sides.iter().map(|&b| if b == sides[0] { VertexClass::A } else { VertexClass::B }).collect();
    finish(ConstructionTrace { height, subdivision: 2, classes, operations: vec![Operation::Complement(VertexClass::A)] })
}

fn finish(trace: ConstructionTrace) -> Result<(Graph, ConstructionTrace)> {
    Ok((trace.replay()?, trace))
}

fn atom(a: Atom) -> Pattern {
    Pattern { terms: vec![(1, a)], complemented: false }
}

fn parse(name: &str) -> Pattern {
    name.parse().unwrap_or_else(|e| panic!("built-in pattern {name}: {e}"))
}

fn x_patterns(ks: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Pattern> {
    ks.map(|k| atom(Atom::X(k)))
}

/// `4P1`, the complement of `3P1+P2`, `C5` and `X1..X10`.
pub fn thm5_claims() -> Vec<Pattern> {
    ["4P1", "co-3P1+P2", "C5"].map(parse).into_iter().chain(x_patterns(1..=10)).collect()
}

/// `C4`, `C5`, `K1,3`, `K4` and the complement of `2P1+P2`.
pub fn thm6_claims() -> Vec<Pattern> {
    ["C4", "C5", "K1,3", "K4", "co-2P1+P2"].map(parse).to_vec()
}

/// `C4`, `2P2`, `C5`, `X1`, `X2` and `X3`.
pub fn thm7_claims() -> Vec<Pattern> {
    ["C4", "2P2", "C5"].map(parse).into_iter().chain(x_patterns(1..=3)).collect()
}

/// Largest pattern accepted by [`freeness_report`].
pub const MAX_CLAIM_N: usize = 8;

/// One line per claimed pattern: the induced copy found, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub items: Vec<(Pattern, Option<VertexSet>)>,
}

impl FreenessReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|(_, w)| w.is_none())
    }
}

/// `ITEM <pattern> PASS` or `ITEM <pattern> FAIL <witness vertices>`.
impl fmt::Display for FreenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, w) in &self.items {
            match w {
                None => writeln!(f, "ITEM {p} PASS")?,
                Some(w) => writeln!(f, "ITEM {p} FAIL {w}")?,
            }
        }
        Ok(())
    }
}

pub fn freeness_report(g: &Graph, claimed: &[Pattern]) -> Result<FreenessReport> {
    use rayon::prelude::*;
    let graphs = claimed.iter().map(|p| p.instantiate()).collect::<Result<Vec<_>>>()?;
    if let Some(h) = graphs.iter().find(|h| h.n() > MAX_CLAIM_N) {
        return Err(Error::Budget { size: h.n(), budget: MAX_CLAIM_N });
    }
    let witnesses: Vec<Option<VertexSet>> = graphs.par_iter().map(|h| contains_induced(g, h)).collect();
    Ok(FreenessReport { items: claimed.iter().cloned().zip(witnesses).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::structure::all_split_partitions;

    #[test]
    fn subdivision_examples() {
        assert_eq!(subdivide_all(&complete(2), 1).graph, path(3).permute(&[0, 2, 1]));
        let c6 = subdivide_all(&cycle(3), 1).graph;
        assert!(crate::graph::is_isomorphic(&c6, &cycle(6)));
        assert_eq!(subdivide_all(&cycle(4), 0).graph, cycle(4));
        let w = wall(2).unwrap();
        assert_eq!(subdivide_all(&w.graph, 2).graph.girth(), Some(18));
        assert_eq!(subdivide_all(&w.graph, 1).graph.girth(), Some(12));
    }

    #[test]
    fn thm5_structure() {
        for h in [2, 3] {
            let (g, t) = thm5_graph(h).unwrap();
            let [v1, v2, v3] = [VertexClass::V1, VertexClass::V2, VertexClass::V3].map(|c| t.members(c));
            assert_eq!(v1.len() + v2.len() + v3.len(), g.n());
            assert!(g.is_clique(&v1) && g.is_clique(&v2) && g.is_clique(&v3));
            assert!(v2.iter().all(|v| g.neighbors(v).is_disjoint(&v3)));
            assert_eq!(t.replay().unwrap(), g);
        }
    }

    #[test]
    fn thm7_structure() {
        for h in [2, 3] {
            let (g, t) = thm7_graph(h).unwrap();
            let (a, b) = (t.members(VertexClass::A), t.members(VertexClass::B));
            assert!(g.is_clique(&a) && g.is_independent(&b));
            assert!(b.iter().all(|v| !a.is_subset(g.neighbors(v))));
            assert!(a.iter().all(|v| !g.neighbors(v).is_disjoint(&b)));
        }
        let (g, t) = thm7_graph(2).unwrap();
        let parts = all_split_partitions(&g);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].clique, t.members(VertexClass::A).to_vec());
    }

    #[test]
    fn reports() {
        let r = freeness_report(&cycle(4), &[parse("C4")]).unwrap();
        assert!(!r.passed());
        assert_eq!(r.to_string(), "ITEM C4 FAIL 0 1 2 3\n");
        let (g, _) = thm5_graph(2).unwrap();
        assert!(freeness_report(&g, &thm5_claims()).unwrap().passed());
        let (g, _) = thm7_graph(2).unwrap();
        assert!(freeness_report(&g, &thm7_claims()).unwrap().passed());
        assert!(freeness_report(&g, &[parse("P9")]).is_err());
    }

    #[test]
    fn trace_lines() {
        let (_, t) = thm6_graph(2).unwrap();
        let lines = t.class_lines();
        assert!(lines.starts_with("CLASS 0 V1\n"));
        assert_eq!(lines.lines().count(), 16 + 19);
    }
}

//! Simple undirected graphs on the dense vertex range `0..n`.
//!
//! Every operation returns a new graph; vertices are always renumbered densely,
//! preserving ascending order of the surviving original indices.

mod canon;
mod enumerate;
pub mod io;
mod vertex_set;

pub use canon::{brute_force_canonical_form, canonical_form, MAX_CANON_N, find_isomorphism, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_graphs, enumerate_hereditary, MAX_ENUMERATION_N};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Adjacency from an upper-triangle bitstring, pairs ordered (0,1),(0,2),..,(1,2),..
    pub fn from_pair_bits(n: usize, bits: u128) -> Self {
        let mut g = Self::empty(n);
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> idx & 1 == 1 {
                    g.add_edge_unchecked(u, v);
                }
                idx += 1;
            }
        }
        g
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub(crate) fn toggle_edge_unchecked(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge_unchecked(u, v);
        } else {
            self.add_edge_unchecked(u, v);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() <= self.n {
            return Ok(());
        }
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// Re-homes a set onto this graph's universe after range checking.
    pub(crate) fn own_set(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(VertexSet::from_iter(self.n, s.iter()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbourhood masks, valid only for `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64");
        self.adj.iter().map(VertexSet::mask).collect()
    }

    pub fn from_adjacency_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let mut g = Self::empty(n);
        for (u, &m) in masks.iter().enumerate() {
            let mut m = m;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if v != u {
                    g.add_edge_unchecked(u, v);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].complement();
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(u + self.n, v + self.n);
        }
        g
    }

    /// The subgraph induced by `s`, relabelled by ascending original index.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let keep = s.to_vec();
        Ok(self.induced_by_order(&keep))
    }

    /// The subgraph induced by `order`, vertex `i` of the result being `order[i]`.
    pub fn induced_by_order(&self, order: &[usize]) -> Graph {
        let mut g = Self::empty(order.len());
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        let s = self.own_set(s)?;
        Ok(self.induced_by_order(&s.complement().to_vec()))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(self.induced_by_order(&keep))
    }

    /// Flips every adjacency with both ends in `s`.
    pub fn subgraph_complementation(&self, s: &VertexSet) -> Result<Graph> {
        let members = self.own_set(s)?.to_vec();
        let mut g = self.clone();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                g.toggle_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Flips every adjacency with one end in `s` and the other in `t`.
    pub fn bipartite_complementation(&self, s: &VertexSet, t: &VertexSet) -> Result<Graph> {
        let s = self.own_set(s)?;
        let t = self.own_set(t)?;
        if let Some(v) = s.intersection(&t).first() {
            return Err(Error::Overlap(v));
        }
        let mut g = self.clone();
        for u in s.iter() {
            for v in t.iter() {
                g.toggle_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for v in self.adj[u].iter() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        stack.push(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| {
            let mut rest = s.clone();
            rest.remove(u);
            rest.is_subset(&self.adj[u])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].is_disjoint(s))
    }

    /// A proper 2-colouring (`true` = side of vertex 0 of each component), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(true);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in self.adj[u].iter() {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Path `0 - 1 - ... - (r-1)`.
pub fn path(r: usize) -> Graph {
    let edges: Vec<_> = (1..r).map(|i| (i - 1, i)).collect();
    Graph::new(r, &edges).unwrap()
}

pub fn cycle(r: usize) -> Graph {
    assert!(r >= 3);
    let mut edges: Vec<_> = (1..r).map(|i| (i - 1, i)).collect();
    edges.push((0, r - 1));
    Graph::new(r, &edges).unwrap()
}

pub fn complete(r: usize) -> Graph {
    Graph::complete(r)
}

/// `K_{1,r}` with centre 0.
pub fn star(r: usize) -> Graph {
    let edges: Vec<_> = (1..=r).map(|i| (0, i)).collect();
    Graph::new(r + 1, &edges).unwrap()
}

pub fn edgeless(r: usize) -> Graph {
    Graph::empty(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    fn two_p2() -> Graph {
        Graph::new(4, &[(0, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn make_graph_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(Graph::new(1, &[]).unwrap().n(), 1);
        let all: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        assert_eq!(Graph::new(5, &all).unwrap(), complete(5));
        assert_eq!(Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(3).complement(), edgeless(3));
        assert!(is_isomorphic(&cycle(5).complement(), &cycle(5)));
        let g = Graph::new(6, &[(0, 1), (2, 5), (3, 4), (1, 5)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn disjoint_union_examples() {
        let p2 = path(2);
        let g = p2.disjoint_union(&p2);
        assert_eq!(g, two_p2());
        assert_eq!(g.components().len(), 2);
        let p1 = path(1);
        let five = (0..4).fold(p1.clone(), |acc, _| acc.disjoint_union(&p1));
        assert_eq!(five, edgeless(5));
        assert_eq!(g.disjoint_union(&Graph::empty(0)), g);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        for skip in 0..5 {
            let keep = set(5, &(0..5).filter(|&v| v != skip).collect::<Vec<_>>());
            let h = c5.induced_subgraph(&keep).unwrap();
            assert!(is_isomorphic(&h, &path(4)));
        }
        assert_eq!(c5.induced_subgraph(&c5.vertices()).unwrap(), c5);
        assert_eq!(complete(5).induced_subgraph(&set(5, &[0, 1, 2])).unwrap(), complete(3));
        assert!(c5.induced_subgraph(&set(9, &[7])).is_err());
    }

    #[test]
    fn delete_vertices_examples() {
        let p4 = path(4);
        let end = p4.delete_vertices(&set(4, &[0])).unwrap();
        assert_eq!(end, path(3));
        let inner = p4.delete_vertices(&set(4, &[1])).unwrap();
        assert_eq!(inner, Graph::new(3, &[(1, 2)]).unwrap());
        assert_eq!(p4.delete_vertices(&VertexSet::new(4)).unwrap(), p4);
    }

    #[test]
    fn subgraph_complementation_examples() {
        let g = two_p2();
        let all = g.vertices();
        let c4 = g.subgraph_complementation(&all).unwrap();
        assert_eq!(c4, Graph::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap());
        assert!(is_isomorphic(&c4, &cycle(4)));
        assert_eq!(g.subgraph_complementation(&VertexSet::new(4)).unwrap(), g);
        let s = set(4, &[0, 2, 3]);
        assert_eq!(
            g.subgraph_complementation(&s).unwrap().subgraph_complementation(&s).unwrap(),
            g
        );
    }

    #[test]
    fn bipartite_complementation_examples() {
        let g = two_p2();
        let (s, t) = (set(4, &[0, 1]), set(4, &[2, 3]));
        assert_eq!(g.bipartite_complementation(&s, &t).unwrap(), complete(4));
        assert_eq!(g.bipartite_complementation(&s, &VertexSet::new(4)).unwrap(), g);
        let twice = g
            .bipartite_complementation(&s, &t)
            .and_then(|h| h.bipartite_complementation(&s, &t))
            .unwrap();
        assert_eq!(twice, g);
        assert_eq!(
            g.bipartite_complementation(&s, &set(4, &[1, 2])),
            Err(Error::Overlap(1))
        );
        let k2 = path(2);
        assert_eq!(
            k2.bipartite_complementation(&set(2, &[0]), &set(2, &[1])).unwrap(),
            edgeless(2)
        );
    }

    #[test]
    fn degree_and_components() {
        assert_eq!(cycle(5).max_degree(), 2);
        assert_eq!(star(3).max_degree(), 3);
        let comps = two_p2().components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn girth_and_bipartition() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(path(5).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
    }
}

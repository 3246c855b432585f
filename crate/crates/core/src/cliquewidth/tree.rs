//! Label-free form of an expression.
//!
//! Each inner node is a disjoint union. Its `groups` are the label classes
//! right after the union: every group holds at most one output class of each
//! child. `joins` pairs groups, and `out` lists the output classes of the
//! node as sets of groups (the renames). Leaves carry vertex ids of the
//! graph being built.
//!
//! Two facts hold for any tree that evaluates to a graph `G`, and every
//! transformation below relies on them:
//! - two vertices of one group coming from different children are
//!   non-adjacent in `G`;
//! - between two groups, the pairs that straddle the union are all edges or
//!   all non-edges, and if they are all edges then every pair between the
//!   two groups is an edge of `G`.
//!
//! Joins are therefore recomputed from `G` whenever a tree is built, so that
//! each pair's adjacency is settled at the node where its ends first meet.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::expr::KExpression;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tree {
    Leaf(usize),
    Node(Box<Node>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Node {
    pub left: Tree,
    pub right: Tree,
    pub groups: Vec<(Option<usize>, Option<usize>)>,
    pub joins: Vec<(usize, usize)>,
    pub out: Vec<Vec<usize>>,
}

impl Tree {
    /// Largest number of labels live at once; 1 for a single vertex.
    pub fn width(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(node) => node.groups.len().max(node.left.width()).max(node.right.width()),
        }
    }

    pub fn map_vertices(&mut self, f: &impl Fn(usize) -> usize) {
        match self {
            Tree::Leaf(v) => *v = f(*v),
            Tree::Node(node) => {
                node.left.map_vertices(f);
                node.right.map_vertices(f);
            }
        }
    }

    /// Output classes as vertex sets over `0..n`.
    pub fn classes(&self, n: usize) -> Vec<VertexSet> {
        match self {
            Tree::Leaf(v) => vec![VertexSet::from_iter(n, [*v])],
            Tree::Node(node) => {
                let lc = node.left.classes(n);
                let rc = node.right.classes(n);
                out_sets(&node.out, &side_sets(&node.groups, &lc, &rc, n), n)
            }
        }
    }

    /// Replaces every join list by the group pairs that have an edge of `g`
    /// straddling the union. Returns the output classes.
    pub fn recompute_joins(&mut self, g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        match self {
            Tree::Leaf(v) => vec![VertexSet::from_iter(n, [*v])],
            Tree::Node(node) => {
                let lc = node.left.recompute_joins(g);
                let rc = node.right.recompute_joins(g);
                let sides = side_sets(&node.groups, &lc, &rc, n);
                node.joins = (0..sides.len())
                    .flat_map(|a| (a + 1..sides.len()).map(move |b| (a, b)))
                    .filter(|&(a, b)| straddling_edge(g, &sides[a], &sides[b]))
                    .collect();
                out_sets(&node.out, &sides, n)
            }
        }
    }

    /// An equivalent expression using labels `1..=width()`, and the vertex
    /// created by each leaf in left-to-right order.
    pub fn to_expression(&self) -> (KExpression, Vec<usize>) {
        let k = self.width() as u32;
        let roots = match self {
            Tree::Leaf(_) => 1,
            Tree::Node(node) => node.out.len() as u32,
        };
        let dictated: Vec<u32> = (1..=roots).collect();
        let mut leaves = Vec::new();
        let e = emit(self, &dictated, k, &mut leaves);
        (e, leaves)
    }

    /// Converts an expression whose `i`-th leaf creates vertex `leaves[i]`
    /// of `g`, then recomputes joins. Fails unless the expression evaluates
    /// to exactly `g` under that leaf map.
    pub fn from_expression(e: &KExpression, leaves: &[usize], g: &Graph) -> Result<Tree> {
        let lg = super::expr::evaluate(e)?;
        if leaves.len() != lg.graph.n() || leaves.len() != g.n() {
            return Err(Error::Expression("leaf map does not match the graph".into()));
        }
        let mut seen = VertexSet::new(g.n());
        for &v in leaves {
            if v >= g.n() || seen.contains(v) {
                return Err(Error::Expression("leaf map is not a bijection".into()));
            }
            seen.insert(v);
        }
        if lg.graph.permute(leaves) != *g {
            return Err(Error::Expression("expression does not evaluate to the graph".into()));
        }
        let mut next = 0;
        let (mut t, _) = build(e, leaves, &mut next);
        t.recompute_joins(g);
        Ok(t)
    }
}

pub(crate) fn side_sets(
    groups: &[(Option<usize>, Option<usize>)],
    lc: &[VertexSet],
    rc: &[VertexSet],
    n: usize,
) -> Vec<(VertexSet, VertexSet)> {
    groups
        .iter()
        .map(|&(l, r)| {
            (
                l.map_or_else(|| VertexSet::new(n), |i| lc[i].clone()),
                r.map_or_else(|| VertexSet::new(n), |i| rc[i].clone()),
            )
        })
        .collect()
}

pub(crate) fn out_sets(out: &[Vec<usize>], sides: &[(VertexSet, VertexSet)], n: usize) -> Vec<VertexSet> {
    out.iter()
        .map(|gs| {
            let mut s = VertexSet::new(n);
            for &gi in gs {
                s.union_with(&sides[gi].0);
                s.union_with(&sides[gi].1);
            }
            s
        })
        .collect()
}

pub(crate) fn any_edge(g: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    a.iter().any(|u| !g.neighbors(u).is_disjoint(b))
}

/// Some edge joins the left part of one group to the right part of the other.
pub(crate) fn straddling_edge(g: &Graph, x: &(VertexSet, VertexSet), y: &(VertexSet, VertexSet)) -> bool {
    any_edge(g, &x.0, &y.1) || any_edge(g, &x.1, &y.0)
}

fn build(e: &KExpression, leaves: &[usize], next: &mut usize) -> (Tree, Vec<u32>) {
    match e {
        KExpression::Vertex(l) => {
            let v = leaves[*next];
            *next += 1;
            (Tree::Leaf(v), vec![*l])
        }
        KExpression::Union(a, b) => {
            let (ta, la) = build(a, leaves, next);
            let (tb, lb) = build(b, leaves, next);
            let mut labels: Vec<u32> = la.iter().chain(&lb).copied().collect();
            labels.sort_unstable();
            labels.dedup();
            let groups = labels
                .iter()
                .map(|l| (la.iter().position(|x| x == l), lb.iter().position(|x| x == l)))
                .collect();
            let out = (0..labels.len()).map(|i| vec![i]).collect();
            let node = Node { left: ta, right: tb, groups, joins: Vec::new(), out };
            (Tree::Node(Box::new(node)), labels)
        }
        KExpression::Join(_, _, inner) => build(inner, leaves, next),
        KExpression::Rename(i, j, inner) => {
            let (mut t, mut labels) = build(inner, leaves, next);
            let Some(pi) = labels.iter().position(|l| l == i) else {
                return (t, labels);
            };
            match labels.iter().position(|l| l == j) {
                Some(pj) if pj != pi => {
                    let Tree::Node(node) = &mut t else {
                        unreachable!("a single vertex has one label");
                    };
                    let moved = node.out.remove(pi);
                    labels.remove(pi);
                    let pj = if pj > pi { pj - 1 } else { pj };
                    node.out[pj].extend(moved);
                }
                Some(_) => {}
                None => labels[pi] = *j,
            }
            (t, labels)
        }
    }
}

fn emit(t: &Tree, dictated: &[u32], k: u32, leaves: &mut Vec<usize>) -> KExpression {
    match t {
        Tree::Leaf(v) => {
            leaves.push(*v);
            KExpression::Vertex(dictated[0])
        }
        Tree::Node(node) => {
            let mut fresh = (1..=k).filter(|l| !dictated.contains(l));
            let mut label = vec![0u32; node.groups.len()];
            let mut renames = Vec::new();
            for (o, gs) in node.out.iter().enumerate() {
                label[gs[0]] = dictated[o];
                for &gi in &gs[1..] {
                    label[gi] = fresh.next().expect("width covers every group");
                    renames.push((label[gi], dictated[o]));
                }
            }
            let child_labels = |pick: fn(&(Option<usize>, Option<usize>)) -> Option<usize>, count: usize| {
                let mut d = vec![0u32; count];
                for (gi, grp) in node.groups.iter().enumerate() {
                    if let Some(c) = pick(grp) {
                        d[c] = label[gi];
                    }
                }
                d
            };
            let lcount = node.groups.iter().filter_map(|g| g.0).count();
            let rcount = node.groups.iter().filter_map(|g| g.1).count();
            let ld = child_labels(|g| g.0, lcount);
            let rd = child_labels(|g| g.1, rcount);
            let mut e = KExpression::union(emit(&node.left, &ld, k, leaves), emit(&node.right, &rd, k, leaves));
            for &(a, b) in &node.joins {
                e = KExpression::join(label[a], label[b], e);
            }
            for (from, to) in renames {
                e = KExpression::rename(from, to, e);
            }
            e
        }
    }
}

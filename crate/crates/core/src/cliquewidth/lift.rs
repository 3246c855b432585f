//! Rewriting trees through vertex typing, adjacency flips and vertex insertion.

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexSet};

use super::tree::{out_sets, side_sets, straddling_edge, Node, Tree};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Both,
    Left,
    Right,
}

/// A tree for the graph whose pair `uv` is adjacent iff it is adjacent in
/// `g` exactly when `flip[types[u]][types[v]]` is false.
///
/// Every group is split by type. Types with a non-zero row in `flip` are
/// further split by side of the union, so a group that straddles the union
/// never needs a flip inside itself and joins between same-side parts can be
/// skipped. A node with groups `Q` becomes one with at most
/// `sum over Q of (unaffected types + 2 * affected types)` groups.
pub(crate) fn typed_flip(t: &Tree, g: &Graph, types: &[usize], flip: &[Vec<bool>]) -> Tree {
    let affected: Vec<bool> = flip.iter().map(|row| row.iter().any(|&f| f)).collect();
    flip_rec(t, g, types, flip, &affected).0
}

/// Returns the new tree, the original output classes as vertex sets, and
/// for each new output class its original class and type.
fn flip_rec(
    t: &Tree,
    g: &Graph,
    types: &[usize],
    flip: &[Vec<bool>],
    affected: &[bool],
) -> (Tree, Vec<VertexSet>, Vec<(usize, usize)>) {
    let n = g.n();
    let node = match t {
        Tree::Leaf(v) => {
            return (Tree::Leaf(*v), vec![VertexSet::from_iter(n, [*v])], vec![(0, types[*v])]);
        }
        Tree::Node(node) => node,
    };
    let (lt, lorig, lmeta) = flip_rec(&node.left, g, types, flip, affected);
    let (rt, rorig, rmeta) = flip_rec(&node.right, g, types, flip, affected);
    let sides = side_sets(&node.groups, &lorig, &rorig, n);

    let mut groups = Vec::new();
    let mut meta: Vec<(usize, usize, Side)> = Vec::new();
    for (gi, &(ol, or)) in node.groups.iter().enumerate() {
        let find = |m: &[(usize, usize)], o: Option<usize>, ty: usize| {
            o.and_then(|o| m.iter().position(|&x| x == (o, ty)))
        };
        let present: BTreeSet<usize> = lmeta
            .iter()
            .filter(|m| Some(m.0) == ol)
            .chain(rmeta.iter().filter(|m| Some(m.0) == or))
            .map(|m| m.1)
            .collect();
        for ty in present {
            let (l, r) = (find(&lmeta, ol, ty), find(&rmeta, or, ty));
            if affected[ty] {
                if l.is_some() {
                    groups.push((l, None));
                    meta.push((gi, ty, Side::Left));
                }
                if r.is_some() {
                    groups.push((None, r));
                    meta.push((gi, ty, Side::Right));
                }
            } else {
                groups.push((l, r));
                meta.push((gi, ty, Side::Both));
            }
        }
    }

    let q = node.groups.len();
    let mut adjacent = vec![vec![false; q]; q];
    for a in 0..q {
        for b in a + 1..q {
            let e = straddling_edge(g, &sides[a], &sides[b]);
            adjacent[a][b] = e;
            adjacent[b][a] = e;
        }
    }
    let mut joins = Vec::new();
    for x in 0..meta.len() {
        for y in x + 1..meta.len() {
            let (gx, tx, sx) = meta[x];
            let (gy, ty, sy) = meta[y];
            let join = if flip[tx][ty] {
                let straddle = matches!((sx, sy), (Side::Left, Side::Right) | (Side::Right, Side::Left));
                straddle && !adjacent[gx][gy]
            } else {
                adjacent[gx][gy]
            };
            if join {
                joins.push((x, y));
            }
        }
    }

    let mut out = Vec::new();
    let mut out_meta = Vec::new();
    for (o, gs) in node.out.iter().enumerate() {
        let present: BTreeSet<usize> =
            meta.iter().filter(|m| gs.contains(&m.0)).map(|m| m.1).collect();
        for ty in present {
            let members: Vec<usize> =
                (0..meta.len()).filter(|&x| meta[x].1 == ty && gs.contains(&meta[x].0)).collect();
            out.push(members);
            out_meta.push((o, ty));
        }
    }
    let orig_out = out_sets(&node.out, &sides, n);
    let new = Node { left: lt, right: rt, groups, joins, out };
    (Tree::Node(Box::new(new)), orig_out, out_meta)
}

/// Upper bound on the width of [`typed_flip`] output: `(u + 2a) * k` where
/// `u` and `a` count the unaffected and affected types that occur.
pub(crate) fn flip_width_bound(k: usize, types: &[usize], flip: &[Vec<bool>]) -> usize {
    let used: BTreeSet<usize> = types.iter().copied().collect();
    let factor: usize = used
        .iter()
        .map(|&ty| if flip[ty].iter().any(|&f| f) { 2 } else { 1 })
        .sum();
    factor.max(1) * k
}

/// A tree for `g` with vertex `index` inserted with neighbourhood `nbrs`
/// (ids of the larger graph), given a tree `t` for `g`.
///
/// Classes are split by adjacency to the new vertex, which is then added at
/// a new root, so the width is at most `2 * width(t) + 1`.
pub(crate) fn add_vertex(t: Option<&Tree>, g: &Graph, index: usize, nbrs: &VertexSet) -> Tree {
    let Some(t) = t else {
        return Tree::Leaf(index);
    };
    let shift = |w: usize| if w >= index { w + 1 } else { w };
    let types: Vec<usize> = (0..g.n()).map(|w| nbrs.contains(shift(w)) as usize).collect();
    let no_flip = vec![vec![false; 2]; 2];
    let mut refined = typed_flip(t, g, &types, &no_flip);
    refined.map_vertices(&shift);
    let classes = refined.classes(g.n() + 1);
    let k = classes.len();
    let mut groups: Vec<(Option<usize>, Option<usize>)> = (0..k).map(|c| (Some(c), None)).collect();
    groups.push((None, Some(0)));
    let joins = (0..k)
        .filter(|&c| classes[c].first().is_some_and(|w| nbrs.contains(w)))
        .map(|c| (c, k))
        .collect();
    let node = Node {
        left: refined,
        right: Tree::Leaf(index),
        groups,
        joins,
        out: vec![(0..=k).collect()],
    };
    Tree::Node(Box::new(node))
}

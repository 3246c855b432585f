//! Exact clique-width by dynamic programming over vertex subsets.
//!
//! A state is a subset `X` with a partition `P` of `X` into at most `k`
//! classes, each uniform toward `V \ X` (its vertices see the same outside
//! vertices). `(X, P)` is reachable when some tree of width at most `k`
//! builds `G[X]` with output classes `P`. A state for `X` is formed from
//! states for a split `X1 + X2` by pairing classes across the split into
//! groups, checking that joins between groups can produce exactly the edges
//! of `G` between `X1` and `X2`, and merging groups with equal outside
//! neighbourhoods in every possible way.
//!
//! Full partitions are kept rather than just the coarsest one: merging two
//! classes early can force a later join to add an edge inside one side.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::certificate::WidthCertificate;
use super::tree::{Node, Tree};

/// Largest order accepted by [`exact_cliquewidth`].
pub const MAX_EXACT_N: usize = 10;

/// The clique-width of `g` and a certificate of that width.
///
/// Widths `1, 2, ...` are tried in turn, up to `max_width` when given;
/// past it the result is [`Error::WidthExceeded`]. The graph on no vertices
/// has width 0.
pub fn exact_cliquewidth(g: &Graph, max_width: Option<usize>) -> Result<(usize, WidthCertificate)> {
    let n = g.n();
    if n > MAX_EXACT_N {
        return Err(Error::Budget { size: n, budget: MAX_EXACT_N });
    }
    if n == 0 {
        return Ok((0, WidthCertificate::empty()));
    }
    let limit = max_width.unwrap_or(n).min(n);
    for k in 1..=limit {
        if let Some(mut tree) = Solver::new(g, k).run() {
            tree.recompute_joins(g);
            return Ok((k, WidthCertificate::from_tree(g.clone(), Some(&tree))));
        }
    }
    Err(Error::WidthExceeded { lower_bound: limit + 1 })
}

/// The clique-width of `g`.
pub fn cliquewidth(g: &Graph) -> Result<usize> {
    exact_cliquewidth(g, None).map(|(k, _)| k)
}

/// Classes as sorted bitmasks.
type Partition = Vec<u32>;

enum Back {
    Leaf(usize),
    Split {
        x1: u32,
        i1: usize,
        i2: usize,
        groups: Vec<(Option<usize>, Option<usize>)>,
        out: Vec<Vec<usize>>,
    },
}

struct Solver {
    n: usize,
    k: usize,
    nbr: Vec<u32>,
    states: Vec<Vec<(Partition, Back)>>,
}

impl Solver {
    fn new(g: &Graph, k: usize) -> Self {
        let n = g.n();
        let nbr = (0..n).map(|v| g.neighbors(v).mask() as u32).collect();
        Solver { n, k, nbr, states: Vec::new() }
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    fn neighbourhood(&self, set: u32) -> u32 {
        bits(set).fold(0, |acc, v| acc | self.nbr[v])
    }

    /// Outside neighbourhood of a class known to be uniform toward `outside`.
    fn signature(&self, class: u32, outside: u32) -> u32 {
        self.nbr[class.trailing_zeros() as usize] & outside
    }

    fn run(mut self) -> Option<Tree> {
        let full = self.full();
        self.states = (0..=full).map(|_| Vec::new()).collect();
        for x in 1..=full {
            if x.count_ones() == 1 {
                let v = x.trailing_zeros() as usize;
                self.states[x as usize].push((vec![x], Back::Leaf(v)));
                if x == full {
                    return Some(Tree::Leaf(v));
                }
                continue;
            }
            let found = self.fill(x, x == full);
            if x == full && found {
                return Some(self.rebuild(full, 0));
            }
        }
        None
    }

    /// Computes the states of `x`; with `any` it stops at the first one.
    fn fill(&mut self, x: u32, any: bool) -> bool {
        let outside = self.full() & !x;
        let low = x & x.wrapping_neg();
        let rest = x & !low;
        let mut seen: HashMap<Partition, ()> = HashMap::new();
        let mut found = Vec::new();
        // Enumerate X1 = low + (proper subset of rest).
        let mut sub = 0u32;
        'splits: loop {
            let x1 = low | sub;
            let x2 = x & !x1;
            if x2 != 0 {
                let (s1, s2) = (&self.states[x1 as usize], &self.states[x2 as usize]);
                for (i1, (p1, _)) in s1.iter().enumerate() {
                    for (i2, (p2, _)) in s2.iter().enumerate() {
                        self.combine(p1, p2, outside, &mut |groups, out, part| {
                            if seen.insert(part.clone(), ()).is_none() {
                                found.push((part, Back::Split { x1, i1, i2, groups: groups.to_vec(), out }));
                            }
                            !any
                        });
                        if any && !found.is_empty() {
                            break 'splits;
                        }
                    }
                }
            }
            if sub == rest {
                break;
            }
            sub = (sub.wrapping_sub(rest)) & rest;
        }
        let nonempty = !found.is_empty();
        self.states[x as usize] = found;
        nonempty
    }

    /// Calls `emit(groups, out, partition)` for every state obtainable from
    /// `p1` and `p2`; stops early when `emit` returns false.
    fn combine(
        &self,
        p1: &[u32],
        p2: &[u32],
        outside: u32,
        emit: &mut dyn FnMut(&[(Option<usize>, Option<usize>)], Vec<Vec<usize>>, Partition) -> bool,
    ) -> bool {
        let mut partner = vec![None; p1.len()];
        let mut used = vec![false; p2.len()];
        self.pairings(p1, p2, outside, 0, &mut partner, &mut used, emit)
    }

    #[allow(clippy::too_many_arguments)]
    fn pairings(
        &self,
        p1: &[u32],
        p2: &[u32],
        outside: u32,
        i: usize,
        partner: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        emit: &mut dyn FnMut(&[(Option<usize>, Option<usize>)], Vec<Vec<usize>>, Partition) -> bool,
    ) -> bool {
        let matched = partner.iter().flatten().count();
        // Unpaired classes so far plus every class still to place.
        let lower = p1.len() + p2.len() - matched - (p1.len() - i).min(p2.len() - matched);
        if lower > self.k {
            return true;
        }
        if i == p1.len() {
            return self.finish(p1, p2, outside, partner, used, emit);
        }
        partner[i] = None;
        if !self.pairings(p1, p2, outside, i + 1, partner, used, emit) {
            return false;
        }
        for j in 0..p2.len() {
            if used[j]
                || self.neighbourhood(p1[i]) & p2[j] != 0
                || self.signature(p1[i], outside) != self.signature(p2[j], outside)
            {
                continue;
            }
            partner[i] = Some(j);
            used[j] = true;
            let go = self.pairings(p1, p2, outside, i + 1, partner, used, emit);
            used[j] = false;
            partner[i] = None;
            if !go {
                return false;
            }
        }
        true
    }

    fn finish(
        &self,
        p1: &[u32],
        p2: &[u32],
        outside: u32,
        partner: &[Option<usize>],
        used: &[bool],
        emit: &mut dyn FnMut(&[(Option<usize>, Option<usize>)], Vec<Vec<usize>>, Partition) -> bool,
    ) -> bool {
        let mut groups: Vec<(Option<usize>, Option<usize>)> =
            (0..p1.len()).map(|i| (Some(i), partner[i])).collect();
        groups.extend((0..p2.len()).filter(|&j| !used[j]).map(|j| (None, Some(j))));
        if groups.len() > self.k {
            return true;
        }
        let side = |g: &(Option<usize>, Option<usize>)| {
            (g.0.map_or(0, |i| p1[i]), g.1.map_or(0, |j| p2[j]))
        };
        let sets: Vec<(u32, u32)> = groups.iter().map(side).collect();
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                let (la, ra) = sets[a];
                let (lb, rb) = sets[b];
                let straddle = self.neighbourhood(la) & rb != 0 || self.neighbourhood(ra) & lb != 0;
                if straddle && !bits(la | ra).all(|u| self.nbr[u] & (lb | rb) == lb | rb) {
                    return true;
                }
            }
        }
        let whole: Vec<u32> = sets.iter().map(|&(l, r)| l | r).collect();
        if outside == 0 {
            let out = vec![(0..whole.len()).collect()];
            return emit(&groups, out, vec![whole.iter().fold(0, |a, b| a | b)]);
        }
        // Groups with equal outside neighbourhoods may be merged in any way.
        let mut buckets: Vec<(u32, Vec<usize>)> = Vec::new();
        for (gi, &w) in whole.iter().enumerate() {
            let s = self.signature(w, outside);
            match buckets.iter_mut().find(|b| b.0 == s) {
                Some(b) => b.1.push(gi),
                None => buckets.push((s, vec![gi])),
            }
        }
        let bucket_parts: Vec<Vec<Vec<Vec<usize>>>> = buckets.iter().map(|b| set_partitions(&b.1)).collect();
        let mut choice = vec![0usize; bucket_parts.len()];
        loop {
            let out: Vec<Vec<usize>> =
                choice.iter().enumerate().flat_map(|(b, &c)| bucket_parts[b][c].clone()).collect();
            let mut part: Partition =
                out.iter().map(|gs| gs.iter().fold(0, |acc, &gi| acc | whole[gi])).collect();
            part.sort_unstable();
            if !emit(&groups, out, part) {
                return false;
            }
            let mut b = 0;
            loop {
                if b == choice.len() {
                    return true;
                }
                choice[b] += 1;
                if choice[b] < bucket_parts[b].len() {
                    break;
                }
                choice[b] = 0;
                b += 1;
            }
        }
    }

    fn rebuild(&self, x: u32, idx: usize) -> Tree {
        match &self.states[x as usize][idx].1 {
            Back::Leaf(v) => Tree::Leaf(*v),
            Back::Split { x1, i1, i2, groups, out } => {
                let x2 = x & !x1;
                let p1 = &self.states[*x1 as usize][*i1].0;
                let p2 = &self.states[x2 as usize][*i2].0;
                let left = self.rebuild(*x1, *i1);
                let right = self.rebuild(x2, *i2);
                // Child trees list classes in their own out order; map the
                // stored partition indices onto it.
                let lmap = class_order(&left, p1, self.n);
                let rmap = class_order(&right, p2, self.n);
                let groups = groups.iter().map(|&(l, r)| (l.map(|i| lmap[i]), r.map(|j| rmap[j]))).collect();
                Tree::Node(Box::new(Node { left, right, groups, joins: Vec::new(), out: out.clone() }))
            }
        }
    }
}

/// For each class of `part`, its position among the output classes of `t`.
fn class_order(t: &Tree, part: &[u32], n: usize) -> Vec<usize> {
    let classes: Vec<u32> = t.classes(n).iter().map(|c| c.mask() as u32).collect();
    part.iter().map(|c| classes.iter().position(|d| d == c).expect("same classes")).collect()
}

fn bits(mut x: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let v = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(v)
    })
}

/// Every set partition of `items`, blocks in order of first element.
fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        let mut alone = vec![vec![first]];
        alone.extend(p.iter().cloned());
        out.push(alone);
        for b in 0..p.len() {
            let mut q = p.clone();
            q[b].insert(0, first);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquewidth::expr::evaluate;
    use std::collections::HashSet;

    use crate::graph::{canonical_form, complete, cycle, edgeless, enumerate_graphs, path, CanonicalForm, Graph};

    #[test]
    fn small_values() {
        assert_eq!(cliquewidth(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(cliquewidth(&edgeless(4)).unwrap(), 1);
        assert_eq!(cliquewidth(&edgeless(1)).unwrap(), 1);
        assert_eq!(cliquewidth(&complete(5)).unwrap(), 2);
        assert_eq!(cliquewidth(&complete(2)).unwrap(), 2);
        assert_eq!(cliquewidth(&path(4)).unwrap(), 3);
        assert_eq!(cliquewidth(&cycle(5)).unwrap(), 3);
        assert_eq!(cliquewidth(&cycle(6)).unwrap(), 3);
    }

    #[test]
    fn certificates_and_budget() {
        let (k, cert) = exact_cliquewidth(&cycle(5), None).unwrap();
        assert_eq!(cert.width(), k);
        assert!(cert.verify());
        assert_eq!(exact_cliquewidth(&path(4), Some(2)), Err(Error::WidthExceeded { lower_bound: 3 }));
        assert!(exact_cliquewidth(&edgeless(11), None).is_err());
        assert_eq!(set_partitions(&[0, 1, 2]).len(), 5);
    }

    /// Graphs on `n` vertices buildable with `k` labels, by closing labelled
    /// graphs under all four operations. A labelled graph is adjacency masks
    /// plus labels renamed in order of first use.
    fn buildable(n: usize, k: u8) -> HashSet<CanonicalForm> {
        fn normal(l: &[u8]) -> Vec<u8> {
            let mut map = [u8::MAX; 8];
            let mut next = 0;
            l.iter()
                .map(|&x| {
                    if map[x as usize] == u8::MAX {
                        map[x as usize] = next;
                        next += 1;
                    }
                    map[x as usize]
                })
                .collect()
        }
        type State = (Vec<u64>, Vec<u8>);
        let mut by_size: Vec<HashSet<State>> = vec![HashSet::new(); n + 1];
        by_size[1].insert((vec![0], vec![0]));
        for size in 2..=n {
            let mut seen = HashSet::new();
            for a in size.div_ceil(2)..size {
                for (ga, la) in &by_size[a] {
                    for (gb, lb) in &by_size[size - a] {
                        // Every injective renaming of the right part's labels.
                        let used = *lb.iter().max().unwrap() as usize + 1;
                        let mut maps = vec![Vec::new()];
                        for _ in 0..used {
                            let mut longer = Vec::new();
                            for m in &maps {
                                for x in (0..k).filter(|x| !m.contains(x)) {
                                    let mut m: Vec<u8> = m.clone();
                                    m.push(x);
                                    longer.push(m);
                                }
                            }
                            maps = longer;
                        }
                        for m in maps {
                            let mut g = ga.clone();
                            g.extend(gb.iter().map(|&row| row << a));
                            let mut l = la.clone();
                            l.extend(lb.iter().map(|&x| m[x as usize]));
                            let mut stack = vec![(g, l)];
                            while let Some((g, l)) = stack.pop() {
                                if !seen.insert((g.clone(), normal(&l))) {
                                    continue;
                                }
                                for i in 0..k {
                                    for j in (0..k).filter(|&j| j != i) {
                                        let mut h = g.clone();
                                        for u in (0..size).filter(|&u| l[u] == i) {
                                            for v in (0..size).filter(|&v| l[v] == j) {
                                                h[u] |= 1 << v;
                                                h[v] |= 1 << u;
                                            }
                                        }
                                        stack.push((h, l.clone()));
                                        let r = l.iter().map(|&x| if x == i { j } else { x }).collect();
                                        stack.push((g.clone(), r));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            by_size[size] = seen;
        }
        by_size[n].iter().map(|(g, _)| canonical_form(&Graph::from_adjacency_masks(g))).collect()
    }

    #[test]
    fn matches_expression_closure_up_to_six() {
        for n in 1..=6 {
            let within: Vec<HashSet<CanonicalForm>> = (1..=3).map(|k| buildable(n, k)).collect();
            for g in enumerate_graphs(n).unwrap() {
                let (k, cert) = exact_cliquewidth(&g, None).unwrap();
                let c = canonical_form(&g);
                let oracle = within.iter().position(|s| s.contains(&c)).map_or(4, |i| i + 1);
                assert_eq!(k, oracle, "{g:?}");
                assert!(cert.verify());
                assert_eq!(&evaluate(cert.expr().unwrap()).unwrap().graph.permute(cert.leaves()), &g);
            }
        }
    }
}

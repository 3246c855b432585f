use crate::graph::{Graph, VertexSet};

/// A partition of the vertex set into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub indep: Vec<usize>,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        let (Ok(c), Ok(i)) = (
            VertexSet::try_from_iter(n, self.clique.iter().copied()),
            VertexSet::try_from_iter(n, self.indep.iter().copied()),
        ) else {
            return false;
        };
        c.len() == self.clique.len()
            && i.len() == self.indep.len()
            && c.is_disjoint(&i)
            && c.len() + i.len() == n
            && g.is_clique(&c)
            && g.is_independent(&i)
    }

    fn from_clique(clique: &VertexSet) -> SplitPartition {
        SplitPartition {
            clique: clique.to_vec(),
            indep: clique.complement().to_vec(),
        }
    }
}

/// One split partition found by the degree-sequence test: with degrees
/// sorted decreasingly and `m = max{i : d_i >= i - 1}`, the graph is split
/// iff the `m` largest degrees sum to `m(m-1)` plus the remaining degrees,
/// and then the `m` vertices of largest degree form the clique side.
fn degree_partition(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| d[i - 1] + 1 >= i).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let rest: usize = d[m..].iter().sum();
    (top == m * m.saturating_sub(1) + rest).then(|| VertexSet::from_iter(n, order[..m].iter().copied()))
}

/// Every split partition, sorted. Any two clique sides differ by at most one
/// vertex in each direction (a clique meets an independent set in at most
/// one vertex), so all of them are one swap away from any single one.
pub fn all_split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let Some(base) = degree_partition(g) else {
        return Vec::new();
    };
    let outside = base.complement();
    let mut found = std::collections::BTreeSet::new();
    let drops: Vec<Option<usize>> = std::iter::once(None).chain(base.iter().map(Some)).collect();
    let adds: Vec<Option<usize>> = std::iter::once(None).chain(outside.iter().map(Some)).collect();
    for &a in &drops {
        for &b in &adds {
            let mut c = base.clone();
            if let Some(a) = a {
                c.remove(a);
            }
            if let Some(b) = b {
                c.insert(b);
            }
            if g.is_clique(&c) && g.is_independent(&c.complement()) {
                found.insert(SplitPartition::from_clique(&c));
            }
        }
    }
    found.into_iter().collect()
}

/// The split partition whose sorted clique side is lexicographically
/// smallest, or `None` if the graph is not split.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    all_split_partitions(g).into_iter().min_by(|a, b| a.clique.cmp(&b.clique))
}

use std::collections::BTreeSet;

use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_graphs`]; order 9 has 274668 classes.
pub const MAX_ENUMERATION_N: usize = 9;

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_hereditary(n, |_| true)
}

/// Representatives of every isomorphism class on `n` vertices that satisfies
/// a hereditary predicate (closed under vertex deletion).
///
/// Classes are grown one vertex at a time from the accepted classes on one
/// fewer vertex, so the predicate prunes the whole search, not just the output.
pub fn enumerate_hereditary<P>(n: usize, keep: P) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    if n > MAX_ENUMERATION_N {
        return Err(Error::Budget {
            size: n,
            budget: MAX_ENUMERATION_N,
        });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for m in 1..=n {
        level = extend(&level, m, &keep);
    }
    Ok(level)
}

fn extend<P>(prev: &[Graph], m: usize, keep: &P) -> Vec<Graph>
where
    P: Fn(&Graph) -> bool + Sync,
{
    use rayon::prelude::*;
    let found: Vec<BTreeSet<CanonicalForm>> = prev
        .par_iter()
        .map(|g| {
            let mut local = BTreeSet::new();
            let masks = g.adjacency_masks();
            for nbrs in 0u64..1 << (m - 1) {
                let mut rows: Vec<u64> = masks.clone();
                for (u, row) in rows.iter_mut().enumerate() {
                    if nbrs >> u & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                rows.push(nbrs);
                let h = Graph::from_adjacency_masks(&rows);
                if keep(&h) {
                    local.insert(canonical_form(&h));
                }
            }
            local
        })
        .collect();
    let all: BTreeSet<CanonicalForm> = found.into_iter().flatten().collect();
    all.into_iter().map(|c| c.to_graph()).collect()
}

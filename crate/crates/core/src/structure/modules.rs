use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the exhaustive module search.
pub const MAX_MODULE_SEARCH_N: usize = 20;

/// `true` iff no vertex outside `s` has both a neighbour and a non-neighbour in `s`.
pub fn is_module(g: &Graph, s: &VertexSet) -> bool {
    (0..g.n())
        .filter(|&x| !s.contains(x))
        .all(|x| !distinguishes(g, x, s))
}

fn distinguishes(g: &Graph, x: usize, s: &VertexSet) -> bool {
    let inside = g.neighbors(x).intersection_len(s);
    inside != 0 && inside != s.len()
}

/// The first module `1 < |X| < n` in order of increasing size, then
/// increasing bitmask. Exhaustive over subsets.
pub fn find_nontrivial_module(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > MAX_MODULE_SEARCH_N {
        return Err(Error::Budget { size: n, budget: MAX_MODULE_SEARCH_N });
    }
    let masks: Vec<u64> = g.adjacency_masks();
    for size in 2..n {
        let mut s: u64 = (1 << size) - 1;
        while s < 1 << n {
            let mut outside = !s & ((1u64 << n) - 1);
            let mut ok = true;
            while outside != 0 {
                let x = outside.trailing_zeros() as usize;
                outside &= outside - 1;
                let hit = masks[x] & s;
                if hit != 0 && hit != s {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some(VertexSet::from_mask(n, s)));
            }
            // next subset of the same size (Gosper's hack)
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    Ok(None)
}

/// `true` iff every module is trivial. Exhaustive.
pub fn is_prime(g: &Graph) -> Result<bool> {
    Ok(find_nontrivial_module(g)?.is_none())
}

/// The smallest module containing `seed`: repeatedly absorbs distinguishing vertices.
pub fn module_closure(g: &Graph, seed: &VertexSet) -> VertexSet {
    let mut s = seed.clone();
    loop {
        let grow: Vec<usize> = (0..g.n())
            .filter(|&x| !s.contains(x) && distinguishes(g, x, &s))
            .collect();
        if grow.is_empty() {
            return s;
        }
        for x in grow {
            s.insert(x);
        }
    }
}

/// Primality via pair closures: for `n >= 3`, a graph is prime iff the
/// closure of every pair of vertices is the whole vertex set.
pub fn is_prime_by_closure(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|u| {
        (u + 1..n).all(|v| module_closure(g, &VertexSet::from_iter(n, [u, v])).len() == n)
    })
}

/// The maximal proper modules of a graph that is connected, co-connected
/// and has at least two vertices. They partition the vertex set and each is
/// the union of the proper pair closures through one of its vertices.
/// Ordered by smallest member.
pub fn maximal_modules(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut assigned = VertexSet::new(n);
    let mut out = Vec::new();
    for v in 0..n {
        if assigned.contains(v) {
            continue;
        }
        let mut m = VertexSet::from_iter(n, [v]);
        for w in 0..n {
            if w != v {
                let c = module_closure(g, &VertexSet::from_iter(n, [v, w]));
                if c.len() < n {
                    m.union_with(&c);
                }
            }
        }
        assigned.union_with(&m);
        out.push(m);
    }
    out
}

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, find_isomorphism, Graph};

/// Largest order accepted by [`enumerate_self_complementary`].
pub const MAX_SELF_COMP_N: usize = 9;

/// A complementing permutation of `g` (an isomorphism from `g` to its
/// complement), if one exists.
pub fn is_self_complementary(g: &Graph) -> Option<Vec<usize>> {
    find_isomorphism(g, &g.complement())
}

/// Every complementing permutation of `g`, in lexicographic order.
pub fn complementing_permutations(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    if 4 * g.edge_count() != n * n.saturating_sub(1) {
        return out;
    }
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, u: usize, f: &mut [usize], used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = g.n();
        if u == n {
            out.push(f.to_vec());
            return;
        }
        for t in 0..n {
            if used[t] || g.degree(t) != n - 1 - g.degree(u) {
                continue;
            }
            if (0..u).all(|w| g.has_edge(u, w) != g.has_edge(t, f[w])) {
                f[u] = t;
                used[t] = true;
                go(g, u + 1, f, used, out);
                used[t] = false;
            }
        }
        f[u] = usize::MAX;
    }
    go(g, 0, &mut f, &mut used, &mut out);
    out
}

/// One representative per isomorphism class of self-complementary graphs on
/// `n` vertices, ordered by canonical form.
///
/// Every cycle of a complementing permutation has length divisible by 4,
/// apart from at most one fixed vertex. For each such cycle type a fixed
/// permutation `s` is laid out on consecutive vertices; the graphs it
/// complements are exactly those whose pair orbits under `s` alternate
/// between edge and non-edge, so each orbit contributes one free bit.
pub fn enumerate_self_complementary(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_SELF_COMP_N {
        return Err(Error::Budget { size: n, budget: MAX_SELF_COMP_N });
    }
    if n % 4 >= 2 {
        return Ok(Vec::new());
    }
    let mut found = BTreeSet::new();
    for cycle_type in multiples_of_four_partitions(n - n % 4, n - n % 4) {
        let sigma = layout(n, &cycle_type);
        let orbits = pair_orbits(&sigma);
        for bits in 0u64..1 << orbits.len() {
            let mut g = Graph::empty(n);
            for (k, orbit) in orbits.iter().enumerate() {
                for (t, &(u, v)) in orbit.iter().enumerate() {
                    if (bits >> k & 1 == 1) != (t % 2 == 1) {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
            found.insert(canonical_form(&g));
        }
    }
    Ok(found.into_iter().map(|c| c.to_graph()).collect())
}

/// Partitions of `total` into multiples of 4, parts non-increasing and at most `max`.
fn multiples_of_four_partitions(total: usize, max: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut part = max.min(total) / 4 * 4;
    while part >= 4 {
        for mut rest in multiples_of_four_partitions(total - part, part) {
            rest.insert(0, part);
            out.push(rest);
        }
        part -= 4;
    }
    out
}

/// Cycles on consecutive vertices; a leftover vertex is fixed.
fn layout(n: usize, cycle_type: &[usize]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in cycle_type {
        for i in 0..len {
            sigma[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    sigma
}

/// Orbits of unordered pairs under `sigma`, each listed along the action.
fn pair_orbits(sigma: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n = sigma.len();
    let norm = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let mut seen = vec![vec![false; n]; n];
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[u][v] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut p = (u, v);
            while !seen[p.0][p.1] {
                seen[p.0][p.1] = true;
                orbit.push(p);
                p = norm(sigma[p.0], sigma[p.1]);
            }
            assert!(orbit.len() % 2 == 0, "odd pair orbit under a complementing cycle type");
            out.push(orbit);
        }
    }
    out
}

use crate::error::{Error, Result};

/// Largest side accepted by [`bipartite_ramsey_check`].
pub const MAX_RAMSEY_N: usize = 6;

/// A red/blue colouring of `K_{n,n}`: bit `c` of `rows[r]` is set when the
/// edge from left vertex `r` to right vertex `c` is red.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Colouring {
    /// `true` if some `k` left and `l` right vertices (or `l` left and `k`
    /// right) span a single colour.
    pub fn has_monochromatic(&self, k: usize, l: usize) -> bool {
        let full = (1u64 << self.n) - 1;
        let blue: Vec<u64> = self.rows.iter().map(|r| !r & full).collect();
        [&self.rows, &blue].iter().any(|rows| {
            has_biclique(rows, k, l) || has_biclique(rows, l, k)
        })
    }
}

/// `k` rows whose common columns number at least `l`.
fn has_biclique(rows: &[u64], k: usize, l: usize) -> bool {
    fn go(rows: &[u64], from: usize, left: usize, common: u64, l: usize) -> bool {
        if (common.count_ones() as usize) < l {
            return false;
        }
        if left == 0 {
            return true;
        }
        (from..rows.len()).any(|r| go(rows, r + 1, left - 1, common & rows[r], l))
    }
    go(rows, 0, k, !0, l)
}

/// `Ok(None)` iff every red/blue colouring of `K_{n,n}` contains a
/// monochromatic `K_{k,l}`; otherwise a colouring avoiding one.
///
/// Rows are chosen in non-decreasing order (row permutations preserve the
/// property) and a branch is cut as soon as the chosen rows already contain
/// a monochromatic copy.
pub fn bipartite_ramsey_check(k: usize, l: usize, n: usize) -> Result<Option<Colouring>> {
    if n > MAX_RAMSEY_N {
        return Err(Error::Budget { size: n, budget: MAX_RAMSEY_N });
    }
    let mut rows = Vec::with_capacity(n);
    Ok(search(k, l, n, 0, &mut rows).map(|rows| Colouring { n, rows }))
}

fn search(k: usize, l: usize, n: usize, min_row: u64, rows: &mut Vec<u64>) -> Option<Vec<u64>> {
    let partial = Colouring { n, rows: rows.clone() };
    if partial.has_monochromatic(k, l) {
        return None;
    }
    if rows.len() == n {
        return Some(rows.clone());
    }
    for row in min_row..1 << n {
        rows.push(row);
        let found = search(k, l, n, row, rows);
        rows.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every colouring, with no symmetry reduction.
    fn brute_force_holds(k: usize, l: usize, n: usize) -> bool {
        (0u64..1 << (n * n)).all(|bits| {
            let rows = (0..n).map(|r| bits >> (r * n) & ((1 << n) - 1)).collect();
            Colouring { n, rows }.has_monochromatic(k, l)
        })
    }

    #[test]
    fn rb22_is_five() {
        assert_eq!(bipartite_ramsey_check(2, 2, 5).unwrap(), None);
        let w = bipartite_ramsey_check(2, 2, 4).unwrap().unwrap();
        assert!(!w.has_monochromatic(2, 2));
        assert_eq!(bipartite_ramsey_check(1, 1, 1).unwrap(), None);
    }

    #[test]
    fn agrees_with_brute_force() {
        for n in 1..=4 {
            for (k, l) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)] {
                let fast = bipartite_ramsey_check(k, l, n).unwrap().is_none();
                assert_eq!(fast, brute_force_holds(k, l, n), "k={k} l={l} n={n}");
            }
        }
    }

    #[test]
    fn budget() {
        assert!(bipartite_ramsey_check(2, 2, 7).is_err());
    }
}

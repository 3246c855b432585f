use crate::graph::{Graph, VertexSet};

/// A vertex set of `g` inducing a copy of `h`, if any.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<VertexSet> {
    induced_embedding(g, h).map(|m| VertexSet::from_iter(g.n(), m))
}

/// `true` iff `h` is isomorphic to an induced subgraph of `g`.
pub fn is_induced_subgraph(h: &Graph, g: &Graph) -> bool {
    induced_embedding(g, h).is_some()
}

/// `true` iff `g` contains none of `hs` as an induced subgraph.
pub fn is_free(g: &Graph, hs: &[Graph]) -> bool {
    hs.iter().all(|h| induced_embedding(g, h).is_none())
}

/// An injective map `m` (`m[i]` = image of vertex `i` of `h`) such that
/// `ij` is an edge of `h` iff `m[i]m[j]` is an edge of `g`.
///
/// Backtracks over `h` in a connectivity-first order; candidate sets are
/// bitset intersections of the (non-)neighbourhoods of already mapped
/// vertices, filtered by degree and co-degree. Dense hosts are searched in
/// the complement, which has the same embeddings.
pub fn induced_embedding(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let (n, k) = (g.n(), h.n());
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    if 4 * g.edge_count() > n * (n - 1) {
        return Matcher::new(&g.complement(), &h.complement()).run();
    }
    Matcher::new(g, h).run()
}

struct Matcher {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    non_adj: Vec<u64>,
    deg: Vec<usize>,
    /// `order[i]` is the `h` vertex placed at depth `i`.
    order: Vec<usize>,
    /// For depth `i`: every earlier depth with the required adjacency. Rows
    /// are loop-free, so intersecting them also enforces injectivity.
    back: Vec<Vec<(usize, bool)>>,
    need_deg: Vec<usize>,
    need_codeg: Vec<usize>,
}

impl Matcher {
    fn new(g: &Graph, h: &Graph) -> Self {
        let n = g.n();
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        let mut non_adj = vec![0u64; n * words];
        let full = VertexSet::full(n);
        for v in 0..n {
            let row = g.neighbors(v).words();
            let mut non = full.difference(g.neighbors(v));
            non.remove(v);
            adj[v * words..(v + 1) * words].copy_from_slice(row);
            non_adj[v * words..(v + 1) * words].copy_from_slice(non.words());
        }
        let deg = (0..n).map(|v| g.degree(v)).collect();

        let k = h.n();
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        for _ in 0..k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                    (links, h.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let back = (0..k)
            .map(|i| (0..i).map(|j| (j, h.has_edge(order[i], order[j]))).collect())
            .collect();
        let need_deg = order.iter().map(|&v| h.degree(v)).collect();
        let need_codeg = order.iter().map(|&v| k - 1 - h.degree(v)).collect();
        Matcher { n, words, adj, non_adj, deg, order, back, need_deg, need_codeg }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let k = self.order.len();
        let mut image = vec![0usize; k];
        let mut cands = vec![0u64; k * self.words];
        if !self.extend(0, &mut image, &mut cands) {
            return None;
        }
        let mut m = vec![0; k];
        for (i, &v) in self.order.iter().enumerate() {
            m[v] = image[i];
        }
        Some(m)
    }

    /// `cands` holds one candidate bitset per remaining depth.
    fn extend(&self, depth: usize, image: &mut [usize], cands: &mut [u64]) -> bool {
        if depth == image.len() {
            return true;
        }
        let w = self.words;
        let (cand, deeper) = cands.split_at_mut(w);
        cand.fill(!0);
        let rem = self.n % 64;
        if rem != 0 {
            cand[w - 1] &= (1u64 << rem) - 1;
        }
        for &(j, edge) in &self.back[depth] {
            let u = image[j];
            let src = if edge { &self.adj } else { &self.non_adj };
            for (c, s) in cand.iter_mut().zip(&src[u * w..(u + 1) * w]) {
                *c &= s;
            }
        }
        for wi in 0..w {
            let mut bits = cand[wi];
            while bits != 0 {
                let v = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.deg[v] < self.need_deg[depth]
                    || self.n - 1 - self.deg[v] < self.need_codeg[depth]
                {
                    continue;
                }
                image[depth] = v;
                if self.extend(depth + 1, image, deeper) {
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, enumerate_graphs, is_isomorphic, path};
    use crate::patterns::{bull, named};

    /// Every `|h|`-subset of `g`, tested by isomorphism.
    fn naive(g: &Graph, h: &Graph) -> bool {
        let (n, k) = (g.n(), h.n());
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .any(|s| {
                let sub = g.induced_subgraph(&VertexSet::from_mask(n, s as u64)).unwrap();
                is_isomorphic(&sub, h)
            })
    }

    fn check_embedding(g: &Graph, h: &Graph, m: &[usize]) {
        let mut seen = std::collections::HashSet::new();
        for i in 0..h.n() {
            assert!(seen.insert(m[i]));
            for j in 0..i {
                assert_eq!(h.has_edge(i, j), g.has_edge(m[i], m[j]));
            }
        }
    }

    #[test]
    fn examples() {
        let w = contains_induced(&cycle(5), &path(4)).unwrap();
        assert_eq!(w.len(), 4);
        assert!(contains_induced(&complete(5), &Graph::empty(2)).is_none());
        assert!(contains_induced(&bull(), &cycle(4)).is_none());
        assert!(is_free(&cycle(5), &[named("2P2").unwrap(), cycle(4)]));
        assert!(!is_free(&named("2P2").unwrap(), &[named("2P2").unwrap()]));
        assert!(is_free(&Graph::empty(5), &[complete(2)]));
        assert!(contains_induced(&path(3), &Graph::empty(0)).unwrap().is_empty());
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let hosts: Vec<Graph> = (0..=6).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
        let patterns: Vec<Graph> = (1..=5).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
        for g in &hosts {
            for h in &patterns {
                let fast = induced_embedding(g, h);
                assert_eq!(fast.is_some(), naive(g, h), "{g:?} {h:?}");
                if let Some(m) = fast {
                    check_embedding(g, h, &m);
                }
            }
        }
    }

    #[test]
    fn disconnected_patterns_are_injective() {
        let g = named("P3").unwrap();
        assert!(contains_induced(&g, &Graph::empty(3)).is_none());
        assert!(contains_induced(&named("P1+P3").unwrap(), &named("2P1").unwrap()).is_some());
        let host = named("3P2").unwrap();
        let m = induced_embedding(&host, &named("3P2").unwrap()).unwrap();
        check_embedding(&host, &named("3P2").unwrap(), &m);
    }

    #[test]
    fn large_sparse_and_dense_hosts() {
        let c = cycle(200);
        assert!(contains_induced(&c, &path(8)).is_some());
        assert!(contains_induced(&c, &cycle(5)).is_none());
        assert!(contains_induced(&c.complement(), &path(8).complement()).is_some());
        assert!(contains_induced(&complete(70), &path(3)).is_none());
    }
}

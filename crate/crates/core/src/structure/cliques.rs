use crate::graph::{Graph, VertexSet};

/// A maximum clique, found by Bron–Kerbosch with pivoting. Among maximum
/// cliques the first one reached is returned, which is deterministic.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut best = VertexSet::new(n);
    let mut r = VertexSet::new(n);
    expand(g, &mut r, VertexSet::full(n), VertexSet::new(n), &mut best);
    best
}

fn expand(g: &Graph, r: &mut VertexSet, mut p: VertexSet, mut x: VertexSet, best: &mut VertexSet) {
    if p.is_empty() {
        if x.is_empty() && r.len() > best.len() {
            *best = r.clone();
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (g.neighbors(u).intersection_len(&p), std::cmp::Reverse(u)))
        .unwrap();
    for v in p.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        r.insert(v);
        expand(g, r, p.intersection(nv), x.intersection(nv), best);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, enumerate_graphs};
    use crate::patterns::x_graphs;

    fn brute_force_omega(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .map(|s| VertexSet::from_mask(n, s))
            .filter(|s| g.is_clique(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(independence_number(&cycle(5)), 2);
        assert_eq!(clique_number(&Graph::empty(0)), 0);
        for x in x_graphs() {
            assert_eq!(clique_number(x), brute_force_omega(x));
        }
    }

    #[test]
    fn agrees_with_brute_force_and_duality() {
        for n in 0..=6 {
            for g in enumerate_graphs(n).unwrap() {
                let w = clique_number(&g);
                assert_eq!(w, brute_force_omega(&g));
                assert!(g.is_clique(&maximum_clique(&g)));
                assert_eq!(w, independence_number(&g.complement()));
            }
        }
    }
}

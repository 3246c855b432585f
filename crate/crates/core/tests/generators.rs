use cwlab::generators::{
    freeness_report, subdivide_all, thm5_claims, thm5_graph, thm6_claims, thm6_graph, thm7_claims, thm7_graph,
    wall, VertexClass,
};
use cwlab::graph::Graph;
use cwlab::patterns::{is_free, named};
use proptest::prelude::*;

#[test]
fn claimed_freeness_at_heights_two_and_three() {
    for h in [2, 3] {
        let (g5, _) = thm5_graph(h).unwrap();
        let r = freeness_report(&g5, &thm5_claims()).unwrap();
        assert!(r.passed(), "thm5 height {h}:\n{r}");
        let (g6, _) = thm6_graph(h).unwrap();
        let r = freeness_report(&g6, &thm6_claims()).unwrap();
        assert!(r.passed(), "thm6 height {h}:\n{r}");
        let (g7, _) = thm7_graph(h).unwrap();
        let r = freeness_report(&g7, &thm7_claims()).unwrap();
        assert!(r.passed(), "thm7 height {h}:\n{r}");
    }
}

#[test]
fn subdivided_walls() {
    for h in [2, 3] {
        let w = wall(h).unwrap().graph;
        assert_eq!(subdivide_all(&w, 1).graph.girth(), Some(12));
        let two = subdivide_all(&w, 2).graph;
        assert!(is_free(&two, &[named("C4").unwrap(), named("C8").unwrap()]));
        let (g6, _) = thm6_graph(h).unwrap();
        assert!(cwlab::structure::clique_number(&g6) <= 3);
    }
}

#[test]
fn thm5_classes() {
    let (g, t) = thm5_graph(3).unwrap();
    let v1 = t.members(VertexClass::V1);
    // Original vertices see at most one vertical and two horizontal subdividers.
    for v in v1.iter() {
        let out = g.neighbors(v).difference(&v1);
        assert!(out.intersection_len(&t.members(VertexClass::V2)) <= 1);
        assert!(out.intersection_len(&t.members(VertexClass::V3)) <= 2);
    }
}

fn arb_small_graph() -> impl Strategy<Value = Graph> {
    (1usize..7, any::<u128>()).prop_map(|(n, bits)| Graph::from_pair_bits(n, bits))
}

proptest! {
    #[test]
    fn subdividing_multiplies_cycle_lengths(g in arb_small_graph(), k in 0usize..3) {
        let s = subdivide_all(&g, k);
        prop_assert_eq!(s.graph.n(), g.n() + k * g.edge_count());
        prop_assert_eq!(s.graph.edge_count(), (k + 1) * g.edge_count());
        prop_assert_eq!(s.graph.girth(), g.girth().map(|c| c * (k + 1)));
    }
}

#[test]
fn traces_replay_exactly() {
    for h in [2, 3, 4] {
        for (g, t) in [thm5_graph(h).unwrap(), thm6_graph(h).unwrap(), thm7_graph(h).unwrap()] {
            assert_eq!(t.replay().unwrap(), g);
        }
    }
}

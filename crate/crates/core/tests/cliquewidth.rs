use cwlab::cliquewidth::{
    cliquewidth, cograph_expression, cw_via_primes, degree2_expression, evaluate, exact_cliquewidth,
    find_mixed_partition, lift_add_vertex, lift_subgraph_complementation, victor_pipeline, KExpression,
    WidthCertificate,
};
use cwlab::graph::{enumerate_graphs, path, Graph, VertexSet};
use cwlab::patterns::{contains_induced, is_free, named};
use proptest::prelude::*;
use rayon::prelude::*;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(|k| enumerate_graphs(k).unwrap()).collect()
}

#[test]
fn complement_at_most_doubles_width_up_to_seven() {
    graphs_up_to(7).par_iter().for_each(|g| {
        let (k, _) = exact_cliquewidth(g, None).unwrap();
        assert!(cliquewidth(&g.complement()).unwrap() <= 2 * k, "{g:?}");
    });
}

#[test]
fn bounded_families_up_to_seven() {
    graphs_up_to(7).par_iter().for_each(|g| {
        let k = cliquewidth(g).unwrap();
        if g.max_degree() <= 2 {
            assert!(k <= 4);
            assert!(degree2_expression(g).unwrap().width() <= 4);
        }
        if is_free(g, &[path(4)]) {
            assert!(k <= 2);
            assert!(cograph_expression(g).unwrap().verify());
        }
        assert_eq!(cw_via_primes(g).unwrap(), k, "{g:?}");
    });
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u128>()).prop_map(|(n, bits)| Graph::from_pair_bits(n, bits))
}

fn arb_expression() -> impl Strategy<Value = KExpression> {
    let leaf = (1u32..5).prop_map(KExpression::vertex);
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| KExpression::union(a, b)),
            (1u32..5, 1u32..5, inner.clone())
                .prop_filter("distinct labels", |(i, j, _)| i != j)
                .prop_map(|(i, j, e)| KExpression::join(i, j, e)),
            (1u32..5, 1u32..5, inner).prop_map(|(i, j, e)| KExpression::rename(i, j, e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_certificates_are_exact(g in arb_graph(9)) {
        let (k, cert) = exact_cliquewidth(&g, None).unwrap();
        prop_assert!(cert.verify());
        prop_assert_eq!(cert.graph(), &g);
        prop_assert_eq!(cert.width(), k);
        prop_assert!(cliquewidth(&g.complement()).unwrap() <= 2 * k);
    }

    #[test]
    fn expressions_are_never_narrower_than_the_exact_width(e in arb_expression()) {
        let lg = evaluate(&e).unwrap();
        prop_assert_eq!(lg.graph.n(), e.vertex_count());
        let cert = WidthCertificate::for_expression(e.clone()).unwrap();
        prop_assert!(cliquewidth(&lg.graph).unwrap() <= cert.width());
        let full = lift_subgraph_complementation(&cert, &VertexSet::full(lg.graph.n())).unwrap();
        prop_assert_eq!(full.graph(), &lg.graph.complement());
        prop_assert!(full.width() <= 2 * cert.width());
        let grown = lift_add_vertex(&cert, 0, &VertexSet::full(lg.graph.n() + 1).difference(&VertexSet::from_iter(lg.graph.n() + 1, [0]))).unwrap();
        prop_assert!(grown.verify());
        prop_assert!(grown.width() <= 2 * cert.width() + 1);
    }

    #[test]
    fn pipeline_certifies_free_graphs(g in arb_graph(12)) {
        // Delete a vertex of some forbidden subgraph until none is left.
        let hs = [named("2P1+P3").unwrap(), named("co-2P1+P3").unwrap()];
        let mut g = g;
        while let Some(w) = hs.iter().find_map(|h| contains_induced(&g, h)) {
            g = g.delete_vertex(w.first().unwrap()).unwrap();
        }
        prop_assert!(is_free(&g, &hs));
        if let Some(part) = find_mixed_partition(&g, 3, 3).unwrap() {
            prop_assert!(part.is_valid(&g));
            let out = victor_pipeline(&g, &part).unwrap();
            prop_assert_eq!(out.certificate.graph(), &g);
            prop_assert!(out.certificate.verify());
            prop_assert!(out.certificate.width() as u128 <= out.bound);
        }
    }
}

mod common;

use common::Oracle;
use corona_indices::graph::{random_graph, read_edge_list, write_edge_list};
use corona_indices::indices::{
    first_zagreb_edge_form, first_zagreb_vertex_form, forgotten_edge_form, forgotten_vertex_form,
};
use corona_indices::products::{
    self, corona_join, predicted_degree_corona_join, predicted_degree_sdvj, subdivision_vertex_join,
};
use corona_indices::{evaluate, graph_params, index, Graph, IndexKind, ProvenanceTag, Variant};
use proptest::prelude::*;

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(n, p, seed).unwrap())
}

fn arb_factor(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(n, p, seed).unwrap())
}

fn arb_permuted(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn handshake(g in arb_graph(25)) {
        prop_assert_eq!(g.degrees().total(), 2 * g.size());
        let adj = g.adjacency();
        for (v, nbrs) in adj.iter().enumerate() {
            prop_assert_eq!(g.degree(v), nbrs.len());
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(25)) {
        prop_assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn random_graph_is_pure(n in 0usize..20, p in 0.0..=1.0f64, seed in any::<u64>()) {
        prop_assert_eq!(random_graph(n, p, seed).unwrap(), random_graph(n, p, seed).unwrap());
    }

    #[test]
    fn dual_forms_and_cross_index_identities(g in arb_graph(30)) {
        let m1v: i128 = first_zagreb_vertex_form(&g).unwrap();
        let m1e: i128 = first_zagreb_edge_form(&g).unwrap();
        let fv: i128 = forgotten_vertex_form(&g).unwrap();
        let fe: i128 = forgotten_edge_form(&g).unwrap();
        prop_assert_eq!(m1v, m1e);
        prop_assert_eq!(fv, fe);
        let p = graph_params::<i128>(&g).unwrap();
        prop_assert_eq!(p.hyper_zagreb, p.forgotten + 2 * p.zagreb2);
        prop_assert_eq!(p.reduced_zagreb2, p.zagreb2 - p.zagreb1 + g.size() as i128);
        let o = Oracle::of_graph(&g);
        prop_assert_eq!(
            (o.m1(), o.m2(), o.f(), o.hm1(), o.rm2()),
            (p.zagreb1, p.zagreb2, p.forgotten, p.hyper_zagreb, p.reduced_zagreb2)
        );
    }

    #[test]
    fn indices_survive_relabelling((g, perm) in arb_permuted(20)) {
        let h = g.relabel(&perm).unwrap();
        for kind in IndexKind::ALL {
            prop_assert_eq!(index::<i128>(kind, &g).unwrap(), index::<i128>(kind, &h).unwrap());
        }
    }

    #[test]
    fn corona_join_degrees_follow_the_lemma(g1 in arb_factor(8), g2 in arb_graph(8)) {
        let product = corona_join(&g1, &g2);
        let (n1, n2) = (g1.order(), g2.order());
        prop_assert_eq!(product.graph.order(), n1 + n1 * n2);
        prop_assert_eq!(product.graph.size(), g1.size() + n1 * g2.size() + n1 * n1 * n2);
        let mut predicted_total = 0;
        for (v, tag) in product.provenance.iter() {
            let d = predicted_degree_corona_join(tag, &g1, &g2).unwrap();
            prop_assert_eq!(product.graph.degree(v), d, "vertex {} {:?}", v, tag);
            predicted_total += d;
        }
        prop_assert_eq!(predicted_total, 2 * product.graph.size());
    }

    #[test]
    fn sdvj_degrees_follow_the_lemma(g1 in arb_graph(8), g2 in arb_graph(8)) {
        let product = subdivision_vertex_join(&g1, &g2);
        let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
        prop_assert_eq!(product.graph.order(), n1 + m1 + n2);
        prop_assert_eq!(product.graph.size(), 2 * m1 + g2.size() + m1 * n2);
        let mut predicted_total = 0;
        for (v, tag) in product.provenance.iter() {
            let d = predicted_degree_sdvj(tag, &g1, &g2).unwrap();
            prop_assert_eq!(product.graph.degree(v), d, "vertex {} {:?}", v, tag);
            predicted_total += d;
        }
        prop_assert_eq!(predicted_total, 2 * product.graph.size());
    }

    #[test]
    fn provenance_is_a_bijection(g1 in arb_graph(6), g2 in arb_graph(6)) {
        let cj = corona_join(&g1, &g2);
        prop_assert_eq!(cj.provenance.len(), cj.graph.order());
        let mut expected: Vec<ProvenanceTag> = (0..g1.order()).map(ProvenanceTag::Factor1).collect();
        for copy in 0..g1.order() {
            expected.extend((0..g2.order()).map(|vertex| ProvenanceTag::Factor2Copy { copy, vertex }));
        }
        prop_assert_eq!(&cj.provenance.0, &expected);

        let sd = subdivision_vertex_join(&g1, &g2);
        let mut expected: Vec<ProvenanceTag> = (0..g1.order()).map(ProvenanceTag::Factor1).collect();
        expected.extend((0..g1.size()).map(ProvenanceTag::Subdivision));
        expected.extend((0..g2.order()).map(|vertex| ProvenanceTag::Factor2Copy { copy: 0, vertex }));
        prop_assert_eq!(&sd.provenance.0, &expected);
    }

    #[test]
    fn subdivision_preserves_original_degrees(g in arb_graph(15)) {
        let s = products::subdivision(&g);
        prop_assert_eq!(s.graph.order(), g.order() + g.size());
        prop_assert_eq!(s.graph.size(), 2 * g.size());
        for (v, tag) in s.provenance.iter() {
            match tag {
                ProvenanceTag::Factor1(u) => prop_assert_eq!(s.graph.degree(v), g.degree(u)),
                ProvenanceTag::Subdivision(_) => prop_assert_eq!(s.graph.degree(v), 2),
                ProvenanceTag::Factor2Copy { .. } => prop_assert!(false, "no G2 in S(G)"),
            }
        }
    }

    #[test]
    fn closed_forms_match_the_oracle(g1 in arb_factor(7), g2 in arb_graph(7)) {
        let (p1, p2) = (graph_params::<i128>(&g1).unwrap(), graph_params::<i128>(&g2).unwrap());
        let cj = Oracle::corona_join(&g1, &g2);
        let sd = Oracle::sdvj(&g1, &g2);
        let expected = [
            (Variant::CoronaJoin, [cj.f(), cj.hm1(), cj.rm2()]),
            (Variant::SubdivisionVertexJoin, [sd.f(), sd.hm1(), sd.rm2()]),
        ];
        for (variant, values) in expected {
            for (kind, want) in [IndexKind::F, IndexKind::HM1, IndexKind::RM2].into_iter().zip(values) {
                prop_assert_eq!(evaluate(kind, variant, &p1, &p2).unwrap(), want, "{} {}", kind, variant);
            }
        }
    }

    #[test]
    fn scalar_types_agree(g1 in arb_factor(6), g2 in arb_graph(6)) {
        let big = (graph_params::<corona_indices::BigInt>(&g1).unwrap(), graph_params(&g2).unwrap());
        let wide = (graph_params::<i128>(&g1).unwrap(), graph_params(&g2).unwrap());
        let narrow = (graph_params::<i64>(&g1).unwrap(), graph_params(&g2).unwrap());
        for variant in Variant::ALL {
            for kind in [IndexKind::F, IndexKind::HM1, IndexKind::RM2] {
                let b = evaluate(kind, variant, &big.0, &big.1).unwrap();
                let w = evaluate(kind, variant, &wide.0, &wide.1).unwrap();
                let n = evaluate(kind, variant, &narrow.0, &narrow.1).unwrap();
                prop_assert_eq!(b.clone(), w.into());
                prop_assert_eq!(b, n.into());
            }
        }
    }
}

#[test]
fn edge_list_round_trip_with_arbitrary_edge_order() {
    // reversed edge order, swapped endpoints and comments still read back to the same graph
    let g = random_graph(12, 0.4, 5).unwrap();
    let mut lines: Vec<String> = g
        .edges()
        .iter()
        .rev()
        .map(|&(u, v)| format!("{v} {u}"))
        .collect();
    lines.insert(0, format!("{} {}", g.order(), g.size()));
    lines.insert(1, "# reversed".into());
    assert_eq!(read_edge_list(&lines.join("\n")).unwrap(), g);
}

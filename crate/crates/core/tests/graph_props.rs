mod common;

use proptest::prelude::*;
use randmis::{Graph, GraphSpec, Prng, VertexSet};

use common::gen;

#[test]
fn generated_graphs_are_simple_and_symmetric() {
    let mut rng = Prng::new(2024);
    for _ in 0..1000 {
        let n = (rng.next_u64() % 40) as usize;
        let p = (rng.next_u64() % 1001) as f64 / 1000.0;
        let g = Graph::generate(&GraphSpec::new(n, p, rng.next_u64())).unwrap();
        for u in 0..n {
            assert!(!g.has_edge(u, u));
            assert!(g.degree(u) < n.max(1));
            for v in 0..n {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }
}

#[test]
fn generation_is_a_pure_function_of_the_spec() {
    for seed in 0..20 {
        let spec = GraphSpec::new(70, 0.3, seed);
        assert_eq!(
            Graph::generate(&spec).unwrap(),
            Graph::generate(&spec).unwrap()
        );
    }
    assert_ne!(gen(70, 0.3, 1), gen(70, 0.3, 2));
}

#[test]
fn mean_edge_count_matches_model() {
    let trials = 500;
    let total: usize = (0..trials).map(|s| gen(100, 0.5, s).edge_count()).sum();
    let mean = total as f64 / trials as f64;
    let expected = 0.5 * 4950.0;
    let sigma = (4950.0f64 * 0.25).sqrt();
    let stderr = sigma / (trials as f64).sqrt();
    assert!(
        (mean - expected).abs() <= 3.0 * stderr,
        "mean {mean}, expected {expected} +- {}",
        3.0 * stderr
    );
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..24, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, s)| gen(n, p, s))
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph()) {
        prop_assert_eq!(g.induced(&g.vertices()).unwrap(), g);
    }

    #[test]
    fn induced_keeps_exactly_inner_edges(g in arb_graph(), mask in any::<u32>()) {
        let members: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        let s = VertexSet::new(members.clone()).unwrap();
        let sub = g.induced(&s).unwrap();
        prop_assert!(sub.edge_count() <= g.edge_count());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                prop_assert_eq!(sub.has_edge(i, j), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn closed_neighborhood_deletion_matches_induced(g in arb_graph(), pick in any::<usize>()) {
        prop_assume!(g.n() > 0);
        let v = pick % g.n();
        let (sub, map) = g.delete_closed_neighborhood(v).unwrap();
        let rest: Vec<usize> = (0..g.n()).filter(|&u| u != v && !g.has_edge(u, v)).collect();
        prop_assert_eq!(&map, &rest);
        prop_assert_eq!(sub, g.induced(&VertexSet::new(rest).unwrap()).unwrap());
    }
}

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wheelnet::bounds::wirelength_lower_bound;
use wheelnet::embedding::{embed_random, EmbeddingMap, Rim};
use wheelnet::hamiltonian::{
    find_hamiltonian_cycle, is_f_fault_hamiltonian, is_f_fault_traceable, is_hamiltonian_walk,
    path_from_2fault_hamiltonian, Budget, Verdict,
};
use wheelnet::oracle::{exact_congestion, exact_dilation, exact_wirelength, OracleConfig};
use wheelnet::{all_pairs_distances, evaluate, families, radius_diameter, shells, status_and_median, Graph};

/// Connected graph on `n` vertices: a random spanning tree plus extra edges.
fn connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let parents: Vec<_> = (2..=n).map(|v| 1..v).collect();
        let pairs = n * (n - 1) / 2;
        (Just(n), parents, prop::collection::vec(any::<bool>(), pairs)).prop_map(|(n, parents, extra)| {
            let mut edges = BTreeSet::new();
            for (i, p) in parents.into_iter().enumerate() {
                edges.insert((p, i + 2));
            }
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if extra[k] && k % 3 == 0 {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn exhaustive() -> OracleConfig {
    OracleConfig {
        prune: false,
        ..OracleConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_form_a_metric(g in connected_graph(1, 12)) {
        let d = all_pairs_distances(&g);
        for u in g.vertices() {
            prop_assert_eq!(d.get(u, u), Some(0));
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                for w in g.vertices() {
                    prop_assert!(d.get(u, w).unwrap() <= d.get(u, v).unwrap() + d.get(v, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn radius_and_diameter(g in connected_graph(1, 14)) {
        let (r, d) = radius_diameter(&g).unwrap();
        prop_assert!(r <= d && d <= 2 * r);
    }

    #[test]
    fn shells_weigh_to_status(g in connected_graph(1, 14), pick in any::<prop::sample::Index>()) {
        let dist = all_pairs_distances(&g);
        let c = pick.index(g.order()) + 1;
        let s = shells(&g, c).unwrap();
        prop_assert_eq!(s.weighted_sum(), dist.status(c).unwrap());
        prop_assert_eq!(s.sizes().iter().sum::<usize>() + 1, g.order());
        let m = status_and_median(&g).unwrap();
        prop_assert!(m.medians.iter().all(|&u| dist.status(u) == Some(m.delta)));
        prop_assert!(g.vertices().all(|u| dist.status(u).unwrap() >= m.delta));
    }

    #[test]
    fn double_counting(guest in connected_graph(2, 10), seed in any::<u64>()) {
        let host = families::cycle(guest.order().max(3)).unwrap();
        prop_assume!(host.order() == guest.order());
        let emb = embed_random(&guest, &host, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let m = evaluate(&emb);
        prop_assert_eq!(m.dilation_sum(), m.wirelength);
        prop_assert_eq!(m.congestion_sum(), m.wirelength);
    }

    #[test]
    fn json_round_trips(g in connected_graph(1, 10), h in connected_graph(1, 10), seed in any::<u64>()) {
        let back = Graph::from_json(&g.to_json()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assume!(g.order() == h.order());
        let emb = embed_random(&g, &h, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let text = emb.to_json().to_string();
        let again = EmbeddingMap::from_json(g.clone(), h.clone(), &text).unwrap();
        prop_assert_eq!(again.vmap(), emb.vmap());
        prop_assert_eq!(again.routes(), emb.routes());
    }

    #[test]
    fn zero_faults_is_hamiltonicity(g in connected_graph(3, 8)) {
        let r = is_f_fault_hamiltonian(&g, 0, Budget::UNLIMITED);
        prop_assert_eq!(r.holds(), find_hamiltonian_cycle(&g).is_some());
        if let Some(w) = &r.witness {
            prop_assert!(is_hamiltonian_walk(&g, w, true));
        }
    }

    #[test]
    fn fault_tolerance_is_monotone(g in connected_graph(4, 7)) {
        for f in 0..2 {
            if is_f_fault_hamiltonian(&g, f + 1, Budget::UNLIMITED).holds() {
                prop_assert!(is_f_fault_hamiltonian(&g, f, Budget::UNLIMITED).holds());
            }
            if is_f_fault_traceable(&g, f + 1, Budget::UNLIMITED).holds() {
                prop_assert!(is_f_fault_traceable(&g, f, Budget::UNLIMITED).holds());
            }
        }
    }

    #[test]
    fn two_fault_hamiltonian_graphs_are_traceable(g in connected_graph(3, 7)) {
        match path_from_2fault_hamiltonian(&g, Budget::UNLIMITED) {
            Ok(p) => prop_assert!(is_hamiltonian_walk(&g, &p.path, false)),
            Err(_) => prop_assert_eq!(is_f_fault_hamiltonian(&g, 2, Budget::UNLIMITED).verdict, Verdict::Fails),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pruning_preserves_optimum(g in connected_graph(2, 6), h in connected_graph(2, 6)) {
        prop_assume!(g.order() == h.order());
        let pruned = OracleConfig::default();
        let full = exhaustive();
        let a = exact_dilation(&g, &h, &pruned).unwrap();
        let b = exact_dilation(&g, &h, &full).unwrap();
        prop_assert_eq!((a.optimum, &a.witness_vmap), (b.optimum, &b.witness_vmap));
        let a = exact_wirelength(&g, &h, &pruned).unwrap();
        let b = exact_wirelength(&g, &h, &full).unwrap();
        prop_assert_eq!((a.optimum, &a.witness_vmap), (b.optimum, &b.witness_vmap));
        let a = exact_congestion(&g, &h, &pruned).unwrap();
        let b = exact_congestion(&g, &h, &full).unwrap();
        prop_assert_eq!(a.optimum, b.optimum);
    }

    #[test]
    fn oracle_beats_any_embedding(g in connected_graph(2, 7), h in connected_graph(2, 7), seed in any::<u64>()) {
        prop_assume!(g.order() == h.order());
        let m = evaluate(&embed_random(&g, &h, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap());
        let cfg = OracleConfig::default();
        prop_assert!(exact_dilation(&g, &h, &cfg).unwrap().optimum <= m.max_dilation);
        prop_assert!(exact_wirelength(&g, &h, &cfg).unwrap().optimum <= m.wirelength);
        prop_assert!(exact_congestion(&g, &h, &cfg).unwrap().optimum <= m.max_congestion);
    }

    /// Equality in the wirelength bound holds exactly when some median
    /// leaves a hamiltonian remainder, checked against the exact optimum.
    #[test]
    fn wirelength_sharpness_matches_oracle(h in connected_graph(4, 7)) {
        let n = h.order();
        for (rim, guest) in [(Rim::Cycle, families::wheel(n).unwrap()), (Rim::Path, families::fan(n).unwrap())] {
            let report = wirelength_lower_bound(rim, &h, Budget::UNLIMITED).unwrap();
            let optimum = exact_wirelength(&guest, &h, &OracleConfig::default()).unwrap().optimum;
            prop_assert!(optimum >= report.bound);
            prop_assert_eq!(report.sharp, Some(optimum == report.bound));
        }
    }
}

use proptest::prelude::*;
use tough_ham::generate::{random, random_cograph, random_complete_multipartite};
use tough_ham::graph::{Edge, Graph};
use tough_ham::ham::{dirac_cycle, ham_cycle_forced, multipartite_ham_path, multipartite_path_feasible, HamOutcome, OracleLimits};
use tough_ham::metrics::{connectivity, independence, scattering};
use tough_ham::recognition::multipartite_decompose;
use tough_ham_oracles as naive;

fn limits() -> OracleLimits {
    OracleLimits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_agrees_with_dynamic_programming(seed in any::<u64>(), n in 3usize..=10, p in 0.2f64..0.9) {
        let g = random(n, p, seed).unwrap();
        match ham_cycle_forced(&g, &[], &limits()).unwrap() {
            HamOutcome::Cycle(c) => {
                prop_assert!(c.check(&g).is_ok());
                prop_assert!(naive::is_hamiltonian(&g));
            }
            HamOutcome::Infeasible => prop_assert!(!naive::is_hamiltonian(&g)),
        }
    }

    #[test]
    fn forced_edges_are_used(seed in any::<u64>(), n in 4usize..=10) {
        let g = random(n, 0.7, seed).unwrap();
        let forced: Vec<Edge> = g.edges().filter(|e| e.u % 3 == 0 && e.v == e.u + 1).collect();
        if let HamOutcome::Cycle(c) = ham_cycle_forced(&g, &forced, &limits()).unwrap() {
            prop_assert!(c.check(&g).is_ok());
            prop_assert!(forced.iter().all(|&e| c.contains_edge(e)));
        }
    }

    #[test]
    fn dense_enough_graphs_have_cycles_through_independent_edges(seed in any::<u64>(), n in 4usize..=12) {
        let g = random(n, 0.8, seed).unwrap();
        let mut forced: Vec<Edge> = Vec::new();
        for e in g.edges() {
            if forced.iter().all(|f| f.is_independent_of(&e)) && forced.len() < 2 {
                forced.push(e);
            }
        }
        let kappa = connectivity(&g).value;
        let alpha = independence(&g, 64).unwrap().len();
        if kappa >= forced.len() + alpha {
            prop_assert!(matches!(ham_cycle_forced(&g, &forced, &limits()).unwrap(), HamOutcome::Cycle(_)));
        }
    }

    #[test]
    fn cographs_are_hamiltonian_connected_iff_scattering_negative(seed in any::<u64>(), n in 1usize..=9) {
        let g = random_cograph(n, seed);
        prop_assert!(!naive::contains_induced(&g, &naive::path4()));
        let s = scattering(&g, 24).unwrap().value();
        prop_assert_eq!(naive::is_hamiltonian_connected(&g), s.is_none_or(|s| s < 0));
    }

    #[test]
    fn multipartite_paths_match_brute_force(seed in any::<u64>(), n in 1usize..=8) {
        let g = random_complete_multipartite(n, seed);
        let m = multipartite_decompose(&g).unwrap();
        for x in 0..n {
            for y in 0..n {
                let exists = naive::has_ham_path(&g, x, y);
                prop_assert_eq!(multipartite_path_feasible(&m, x, y), exists);
                let path = multipartite_ham_path(&g, &m, x, y);
                prop_assert_eq!(path.is_some(), exists);
                if let Some(p) = path {
                    prop_assert!(p.check(&g).is_ok());
                    prop_assert_eq!(p.ends(), (x, y));
                    prop_assert_eq!(p.order.len(), n);
                }
            }
        }
    }
}

#[test]
fn rotation_extension_on_dense_graphs() {
    for seed in 0..100u64 {
        let n = 3 + (seed as usize * 7) % 60;
        let mut g = random(n, 0.5, seed).unwrap();
        // top up degrees to n/2
        for a in 0..n {
            let mut b = 0;
            while 2 * g.degree(a) < n {
                if b != a && !g.has_edge(a, b) {
                    g.add_edge(a, b).unwrap();
                }
                b += 1;
            }
        }
        let c = dirac_cycle(&g).unwrap();
        assert!(c.check(&g).is_ok(), "n = {n}");
    }
    assert!(dirac_cycle(&Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()).is_err());
}

use proptest::prelude::*;
use tough_ham::generate::{random, random_cograph, random_complete_multipartite, random_in_class};
use tough_ham::graph::Graph;
use tough_ham::metrics::{connectivity, independence, scattering, toughness, verify_tough, ToughnessVerdict};
use tough_ham::rational::Rational;
use tough_ham_oracles as naive;

fn agree(g: &Graph) {
    let tau = toughness(g, 24).unwrap();
    assert_eq!(tau.value().cloned(), naive::toughness(g), "toughness of {g:?}");
    if let tough_ham::metrics::Toughness::Finite { value, witness } = &tau {
        assert_eq!(witness.ratio(), *value);
        assert!(witness.is_valid_for(g, &value.add(&Rational::new(1, 1000))));
    }
    let s = scattering(g, 24).unwrap();
    assert_eq!(s.value(), naive::scattering(g), "scattering of {g:?}");
    if let tough_ham::metrics::Scattering::Finite(set) = &s {
        assert!(set.is_valid_for(g));
    }
    let k = connectivity(g);
    assert_eq!(k.value, naive::connectivity(g), "connectivity of {g:?}");
    if let Some(cut) = &k.cutset {
        assert_eq!(cut.len(), k.value);
        assert!(g.component_count(cut) >= 2);
    }
    let a = independence(g, 64).unwrap();
    assert!(g.is_independent(&a));
    assert_eq!(a.len(), naive::independence(g), "independence of {g:?}");
}

#[test]
fn small_corpus_agrees() {
    for seed in 0..120u64 {
        let n = 1 + (seed % 8) as usize;
        agree(&random(n, 0.3 + 0.1 * (seed % 5) as f64, seed).unwrap());
        agree(&random_in_class(n, 0.4, seed).unwrap());
        agree(&random_cograph(n, seed));
        agree(&random_complete_multipartite(n, seed));
    }
}

#[test]
fn verify_tough_matches_the_minimum_ratio() {
    for seed in 0..60u64 {
        let g = random(8, 0.6, seed).unwrap();
        let tau = naive::toughness(&g);
        for t in [Rational::new(1, 2), Rational::integer(1), Rational::new(3, 2), Rational::integer(2)] {
            let verdict = verify_tough(&g, &t, 24).unwrap();
            let tough = tau.as_ref().is_none_or(|v| *v >= t);
            match verdict {
                ToughnessVerdict::Tough => assert!(tough),
                ToughnessVerdict::Violated(w) => {
                    assert!(!tough);
                    assert!(w.is_valid_for(&g, &t));
                }
            }
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        g.add_edge(a, b).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn metrics_agree_with_enumeration(g in arb_graph(8)) {
        agree(&g);
    }
}

use proptest::prelude::*;
use tough_ham::generate::{case1_synthetic, complete_split_join, random, random_in_class, Case1Profile};
use tough_ham::graph::Graph;
use tough_ham::metrics::{verify_tough, ToughnessVerdict};
use tough_ham::pipeline::{
    check_certificate, format_certificate, parse_record, run_theorem, Certificate, PipelineError, Record, RunConfig,
};
use tough_ham::rational::Rational;
use tough_ham::recognition::{find_induced, Pattern};

fn sound(g: &Graph, cfg: &RunConfig) -> Option<Certificate> {
    let run = run_theorem(g, cfg);
    let cert = match run.outcome {
        Ok(c) => c,
        Err(PipelineError::OutsideRegime { .. }) if !cfg.in_proven_regime() => return None,
        Err(e) => panic!("{e} on {g:?}"),
    };
    assert!(check_certificate(g, &cert, &cfg.t).passed() || cert.kind() == "oracle_limit", "{cert:?} on {g:?}");
    let line = format_certificate(0, &cert, &cfg.t);
    let Record::Certificate { certificate, .. } = parse_record(&line).unwrap() else { panic!("{line}") };
    assert_eq!(certificate, cert);
    Some(cert)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_get_valid_certificates(seed in any::<u64>(), n in 3usize..=12, p in 0.2f64..1.0) {
        let g = random(n, p, seed).unwrap();
        for t in [Rational::new(9, 4), Rational::integer(11)] {
            sound(&g, &RunConfig::with_t(t));
        }
    }

    #[test]
    fn class_members_get_valid_certificates(seed in any::<u64>(), n in 3usize..=12) {
        let g = random_in_class(n, 0.5, seed).unwrap();
        sound(&g, &RunConfig::with_t(Rational::new(3, 2)));
    }
}

#[test]
fn tough_class_members_never_get_witnesses() {
    let cfg = RunConfig::default();
    for (clique, independent) in [(3, 0), (11, 1), (22, 2), (24, 1), (30, 2)] {
        let g = complete_split_join(clique, independent);
        assert!(find_induced(&g, Pattern::TwoP2P1).is_none());
        let tough = matches!(verify_tough(&g, &cfg.t, 24), Ok(ToughnessVerdict::Tough));
        let cert = sound(&g, &cfg).unwrap();
        if tough {
            assert_eq!(cert.kind(), "hamilton_cycle", "K{clique} + {independent}");
        }
    }
}

#[test]
fn synthetic_instances_run_end_to_end() {
    for (i, profile) in Case1Profile::ALL.into_iter().enumerate() {
        for seed in 0..4 {
            let inst = case1_synthetic(profile, 10 * i as u64 + seed);
            sound(&inst.graph, &RunConfig::with_t(inst.t.clone())).unwrap();
        }
    }
}

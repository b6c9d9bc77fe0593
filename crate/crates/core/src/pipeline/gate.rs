use super::witness::{resolve, Backing, Candidate};
use super::{limit, n_over_t1, RunConfig, StepResult, Trace};
use crate::graph::Graph;
use crate::ham::{dirac_cycle, ham_cycle_forced, CycleCert, HamOutcome};
use crate::metrics::independence;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateOutcome {
    Cycle(CycleCert),
    /// `δ ≤ n/(t+1) − 1`; the facts `δ ≥ 2t` and `α ≤ n/(t+1)` were checked.
    Proceed,
}

/// A `t`-tough graph with `δ > n/(t+1) − 1` is Hamiltonian. When the bound
/// holds the cycle is built by rotation-extension if `δ ≥ n/2` and by
/// exhaustive search otherwise; a failed search means `g` is not `t`-tough.
pub fn min_degree_gate(g: &Graph, cfg: &RunConfig, trace: &mut Trace) -> StepResult<GateOutcome> {
    const STAGE: &str = "min_degree_gate";
    let n = g.n();
    let (v_min, delta) = g.min_degree().expect("nonempty graph");
    let bound = n_over_t1(1, n, &cfg.t);
    let threshold = bound.sub(&Rational::integer(1));
    let fired = Rational::from_usize(delta) > threshold;
    trace.record(
        "gate",
        vec![("delta", delta.to_string()), ("threshold", threshold.to_string()), ("fired", fired.to_string())],
    );
    if fired {
        if 2 * delta >= n {
            let c = dirac_cycle(g).map_err(|e| super::internal(STAGE, e.to_string()))?;
            trace.record("gate_cycle", vec![("method", "rotation_extension".into())]);
            return Ok(GateOutcome::Cycle(c));
        }
        return match ham_cycle_forced(g, &[], &cfg.oracle) {
            Ok(HamOutcome::Cycle(c)) => {
                trace.record("gate_cycle", vec![("method", "exhaustive".into())]);
                Ok(GateOutcome::Cycle(c))
            }
            Ok(HamOutcome::Infeasible) => Err(resolve(g, cfg, trace, STAGE, Vec::new(), Backing::Proven)),
            Err(e) => Err(limit(STAGE, e)),
        };
    }

    // a t-tough noncomplete graph has κ ≥ 2t, so δ ≥ 2t
    let two_t = cfg.t.mul_usize(2);
    if Rational::from_usize(delta) < two_t {
        trace.record("gate_facts", vec![("delta_at_least_2t", "false".into())]);
        let cand = vec![Candidate::Cutset(g.row(v_min).clone())];
        return Err(resolve(g, cfg, trace, STAGE, cand, Backing::Proven));
    }
    // removing the complement of an independent set I leaves |I| components
    let alpha = independence(g, cfg.independence_cap).map_err(|e| limit(STAGE, e))?;
    if Rational::from_usize(alpha.len()) > bound {
        trace.record(
            "gate_facts",
            vec![("delta_at_least_2t", "true".into()), ("alpha_bounded", "false".into())],
        );
        let cand = vec![Candidate::Cutset(alpha.complement())];
        return Err(resolve(g, cfg, trace, STAGE, cand, Backing::Proven));
    }
    trace.record(
        "gate_facts",
        vec![
            ("delta_at_least_2t", "true".into()),
            ("alpha", alpha.len().to_string()),
            ("alpha_bound", bound.to_string()),
            ("alpha_bounded", "true".into()),
        ],
    );
    Ok(GateOutcome::Proceed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{check_certificate, Stop};

    #[test]
    fn complete_graph_fires() {
        let mut trace = Trace::default();
        let k5 = Graph::complete(5);
        let out = min_degree_gate(&k5, &RunConfig::default(), &mut trace).unwrap();
        let GateOutcome::Cycle(c) = out else { panic!() };
        assert!(c.check(&k5).is_ok());
    }

    #[test]
    fn low_degree_passes_or_yields_witness() {
        // C8 with t = 11: δ = 2 ≤ 8/12 − 1 is false, so the gate fires and
        // the exhaustive search finds the cycle
        let c8 = Graph::from_edges(8, (0..8).map(|i| (i, (i + 1) % 8))).unwrap();
        let mut trace = Trace::default();
        assert!(matches!(min_degree_gate(&c8, &RunConfig::default(), &mut trace), Ok(GateOutcome::Cycle(_))));

        // a 40-cycle: δ = 2 ≤ 40/12 − 1, so the gate passes through to the
        // δ ≥ 2t check, which fails with the neighbourhood of vertex 0
        let c40 = Graph::from_edges(40, (0..40).map(|i| (i, (i + 1) % 40))).unwrap();
        let cfg = RunConfig::default();
        let Err(Stop::Done(cert)) = min_degree_gate(&c40, &cfg, &mut trace) else { panic!() };
        assert!(check_certificate(&c40, &cert, &cfg.t).passed());
    }
}

use super::{internal, limit, Certificate, PipelineError, RunConfig, Stop, Trace};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::metrics::{verify_tough, ToughnessVerdict, ToughnessWitness};
use crate::recognition::{find_induced, InducedWitness, Pattern};

/// A witness proposed by the argument of a failed step.
#[derive(Debug, Clone)]
pub(crate) enum Candidate {
    Cutset(VertexSet),
    /// Five vertices in `2P2 ∪ P1` pattern order: edge, edge, isolated.
    Forbidden([Vertex; 5]),
}

/// How the failure of a step relates to the proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Backing {
    /// The step cannot fail on a `t`-tough graph in the class.
    Proven,
    /// Only proven for larger `t`; failure on a `t`-tough graph is reported
    /// as [`PipelineError::OutsideRegime`].
    Conditional,
}

/// Turns a failed step into a certificate.
///
/// The step's own candidates are validated first. If none holds, the graph
/// is searched for an induced `2P2 ∪ P1` and then for any toughness violator
/// exhaustively (within the toughness cap).
pub(crate) fn resolve(
    g: &Graph,
    cfg: &RunConfig,
    trace: &mut Trace,
    stage: &'static str,
    candidates: Vec<Candidate>,
    backing: Backing,
) -> Stop {
    for cand in candidates {
        let cert = match cand {
            Candidate::Cutset(s) => ToughnessWitness::from_cutset(g, s)
                .filter(|w| w.ratio() < cfg.t)
                .map(Certificate::Toughness),
            Candidate::Forbidden(vs) => {
                let w = InducedWitness { vertices: vs.to_vec(), pattern: Pattern::TwoP2P1 };
                w.is_valid_in(g).then_some(Certificate::Forbidden(w))
            }
        };
        if let Some(cert) = cert {
            trace.record("witness", vec![("step", stage.into()), ("source", "replay".into())]);
            return Stop::Done(cert);
        }
    }
    if let Some(w) = find_induced(g, Pattern::TwoP2P1) {
        trace.record("witness", vec![("step", stage.into()), ("source", "pattern_search".into())]);
        return Stop::Done(Certificate::Forbidden(w));
    }
    match verify_tough(g, &cfg.t, cfg.toughness_cap) {
        Ok(ToughnessVerdict::Violated(w)) => {
            trace.record("witness", vec![("step", stage.into()), ("source", "exhaustive".into())]);
            Stop::Done(Certificate::Toughness(w))
        }
        Ok(ToughnessVerdict::Tough) => match backing {
            Backing::Proven => internal(stage, format!("step failed on a {}-tough graph", cfg.t)),
            Backing::Conditional if cfg.in_proven_regime() => {
                internal(stage, format!("step failed on a {}-tough graph", cfg.t))
            }
            Backing::Conditional => {
                trace.record("witness", vec![("step", stage.into()), ("source", "none".into())]);
                Stop::Failed(PipelineError::OutsideRegime { stage, t: cfg.t.clone() })
            }
        },
        Err(e) => limit(stage, e),
    }
}

/// `V \ I` for an independent set `I`, after greedily enlarging `I` by
/// increasing id: removing it isolates every vertex of `I`.
pub(crate) fn independent_complement(g: &Graph, independent: &VertexSet) -> VertexSet {
    let mut i = independent.clone();
    for v in g.vertices().iter() {
        if !i.contains(v) && g.row(v).is_disjoint(&i) {
            i.insert(v);
        }
    }
    i.complement()
}

/// An edge `ab` inside `part` with neither end adjacent to any of `avoid`.
pub(crate) fn edge_avoiding(g: &Graph, part: &VertexSet, avoid: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let mut free = part.clone();
    for &x in avoid {
        free.difference_with(g.row(x));
        free.remove(x);
    }
    free.iter().find_map(|a| g.row(a).intersection(&free).iter().find(|&b| b > a).map(|b| (a, b)))
}

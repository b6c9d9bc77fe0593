//! The certifying engine.
//!
//! [`run_theorem`] decides, for a graph on at least three vertices, between
//! a Hamilton cycle and a certificate that the graph is not in the class
//! (an induced `2P2 ∪ P1` or a cutset with `|S| / c(G - S) < t`). The steps:
//!
//! 1. freeness check;
//! 2. [`min_degree_gate`]: high minimum degree gives a cycle directly;
//! 3. [`find_case1_edge`]: an edge with a small joint neighbourhood leads to
//!    [`case1_decompose`], [`build_path_cover`] and [`case1_finish`];
//! 4. otherwise [`case2_run`].
//!
//! Every step can be called on its own. A step that cannot continue returns
//! [`Stop`], carrying either a certificate or an error.

mod case1;
mod case2;
mod certificate;
mod format;
mod gate;
mod trace;
mod witness;

use thiserror::Error;

pub use case1::{
    build_path_cover, case1_decompose, case1_finish, find_case1_edge, Decomposition, PathCover,
};
pub use case2::{case2_decompose, case2_run};
pub use certificate::{check_certificate, CheckVerdict, Certificate};
pub use format::{format_certificate, format_error, format_trace, parse_record, FormatError, Record};
pub use gate::{min_degree_gate, GateOutcome};
pub use trace::{Trace, TraceRecord, Verbosity};

use crate::graph::{Edge, Graph, InducedSubgraph};
use crate::ham::{ham_cycle_forced, HamError, HamOutcome, OracleLimits};
use crate::metrics::{connectivity, independence, MetricsError, DEFAULT_INDEPENDENCE_CAP, DEFAULT_TOUGHNESS_CAP};
use crate::rational::Rational;
use crate::recognition::{find_induced, Pattern};

/// Smallest `t` for which every step is backed by a proof.
pub const PROVEN_T: i64 = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub t: Rational,
    /// Vertex cap for exhaustive toughness and scattering enumeration.
    pub toughness_cap: usize,
    /// Vertex cap for the independence branch-and-bound.
    pub independence_cap: usize,
    pub oracle: OracleLimits,
    /// Recorded in the trace; the pipeline itself is deterministic.
    pub seed: u64,
    pub verbosity: Verbosity,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            t: Rational::integer(PROVEN_T),
            toughness_cap: DEFAULT_TOUGHNESS_CAP,
            independence_cap: DEFAULT_INDEPENDENCE_CAP,
            oracle: OracleLimits { cap: 64, node_budget: 20_000_000 },
            seed: 0,
            verbosity: Verbosity::Stages,
        }
    }
}

impl RunConfig {
    pub fn with_t(t: Rational) -> RunConfig {
        RunConfig { t, ..RunConfig::default() }
    }

    pub fn validate(&self) -> Result<(), PipelineError> {
        if !self.t.is_positive() {
            return Err(PipelineError::Usage(format!("t must be positive, got {}", self.t)));
        }
        if self.toughness_cap == 0 || self.independence_cap == 0 || self.oracle.cap == 0 || self.oracle.node_budget == 0 {
            return Err(PipelineError::Usage("caps must be positive".into()));
        }
        Ok(())
    }

    /// Whether `t` is at least the proven threshold.
    pub fn in_proven_regime(&self) -> bool {
        self.t.cmp(&Rational::integer(PROVEN_T)).is_ge()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("usage: {0}")]
    Usage(String),
    /// A step failed where a proof says it cannot; indicates a bug.
    #[error("internal error at {stage}: {detail}")]
    Internal { stage: &'static str, detail: String },
    /// A step failed on a graph verified to be `t`-tough, with `t` below the
    /// proven threshold. Neither a cycle nor a witness is available.
    #[error("{stage}: step failed on a {t}-tough graph below the proven threshold")]
    OutsideRegime { stage: &'static str, t: Rational },
}

/// Why a step did not hand its result to the next one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stop {
    Done(Certificate),
    Failed(PipelineError),
}

impl From<PipelineError> for Stop {
    fn from(e: PipelineError) -> Self {
        Stop::Failed(e)
    }
}

pub type StepResult<T> = Result<T, Stop>;

pub(crate) fn internal(stage: &'static str, detail: impl Into<String>) -> Stop {
    Stop::Failed(PipelineError::Internal { stage, detail: detail.into() })
}

pub(crate) fn limit(stage: &str, what: impl std::fmt::Display) -> Stop {
    Stop::Done(Certificate::OracleLimit { stage: format!("{stage}: {what}") })
}

pub(crate) fn metrics_limit(stage: &str) -> impl Fn(MetricsError) -> Stop + '_ {
    move |e| limit(stage, e)
}

/// A full run: the certificate (or error) and the trace that led to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub outcome: Result<Certificate, PipelineError>,
    pub trace: Trace,
}

/// Runs the whole pipeline on `g`.
pub fn run_theorem(g: &Graph, cfg: &RunConfig) -> Run {
    let mut trace = Trace::new(cfg.verbosity);
    let outcome = match dispatch(g, cfg, &mut trace) {
        Ok(cert) | Err(Stop::Done(cert)) => Ok(cert),
        Err(Stop::Failed(e)) => Err(e),
    };
    let summary = match &outcome {
        Ok(c) => c.kind().to_string(),
        Err(e) => format!("error: {e}"),
    };
    trace.record("result", vec![("outcome", summary)]);
    Run { outcome, trace }
}

fn dispatch(g: &Graph, cfg: &RunConfig, trace: &mut Trace) -> StepResult<Certificate> {
    cfg.validate()?;
    let n = g.n();
    if n < 3 {
        return Err(PipelineError::Usage(format!("graph has {n} vertices; at least 3 are required")).into());
    }
    trace.record(
        "start",
        vec![
            ("n", n.to_string()),
            ("t", cfg.t.to_string()),
            ("regime", if cfg.in_proven_regime() { "proven" } else { "outside_proven_regime" }.into()),
            ("seed", cfg.seed.to_string()),
        ],
    );

    if let Some(w) = find_induced(g, Pattern::TwoP2P1) {
        trace.record("freeness", vec![("free", "false".into())]);
        return Ok(Certificate::Forbidden(w));
    }
    trace.record("freeness", vec![("free", "true".into())]);

    if let GateOutcome::Cycle(c) = min_degree_gate(g, cfg, trace)? {
        return Ok(Certificate::HamiltonCycle(c));
    }

    if let Some(edge) = find_case1_edge(g) {
        let dec = case1_decompose(g, edge, cfg, trace)?;
        let cover = build_path_cover(g, &dec, cfg, trace)?;
        let cycle = case1_finish(g, &dec, &cover, cfg, trace)?;
        return Ok(Certificate::HamiltonCycle(cycle));
    }
    Ok(Certificate::HamiltonCycle(case2_run(g, cfg, trace)?))
}

/// `k·n/(t+1)` as an exact rational.
pub(crate) fn n_over_t1(k: usize, n: usize, t: &Rational) -> Rational {
    Rational::from_usize(k * n).div(&t.add(&Rational::integer(1)))
}

/// `G₂*`: `g2` plus every edge of `forced` (given in `g2`'s parent ids).
pub fn augment(g2: &InducedSubgraph, forced: &[Edge]) -> Result<(Graph, Vec<Edge>), String> {
    let mut star = g2.graph.clone();
    let mut local = Vec::with_capacity(forced.len());
    for e in forced {
        let (Some(a), Some(b)) = (g2.local(e.u), g2.local(e.v)) else {
            return Err(format!("forced edge {}-{} leaves the subgraph", e.u, e.v));
        };
        star.add_edge(a, b).map_err(|e| e.to_string())?;
        local.push(Edge::new(a, b).map_err(|e| e.to_string())?);
    }
    Ok((star, local))
}

/// Inputs to the cycle-through-edges condition `κ ≥ |L| + α` on `G₂*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedCycleCondition {
    pub kappa: usize,
    pub alpha: usize,
    pub forced: usize,
}

impl ForcedCycleCondition {
    pub fn holds(&self) -> bool {
        self.kappa >= self.forced + self.alpha
    }
}

pub(crate) fn forced_cycle_condition(
    star: &Graph,
    forced: usize,
    cfg: &RunConfig,
    stage: &'static str,
) -> StepResult<(ForcedCycleCondition, Option<crate::graph::VertexSet>, crate::graph::VertexSet)> {
    let kappa = connectivity(star);
    let alpha = independence(star, cfg.independence_cap).map_err(metrics_limit(stage))?;
    let cond = ForcedCycleCondition { kappa: kappa.value, alpha: alpha.len(), forced };
    Ok((cond, kappa.cutset, alpha))
}

/// Cycle of `star` through `forced` (local ids), for a graph already known
/// to satisfy `κ ≥ |L| + α`.
pub(crate) fn forced_cycle(
    star: &Graph,
    forced: &[Edge],
    cfg: &RunConfig,
    stage: &'static str,
) -> StepResult<crate::ham::CycleCert> {
    match ham_cycle_forced(star, forced, &cfg.oracle) {
        Ok(HamOutcome::Cycle(c)) => Ok(c),
        Ok(HamOutcome::Infeasible) => {
            Err(internal(stage, "no cycle through the forced edges although kappa >= |L| + alpha"))
        }
        Err(HamError::OracleLimit { detail, .. }) => Err(limit(stage, detail)),
        Err(e) => Err(internal(stage, e.to_string())),
    }
}

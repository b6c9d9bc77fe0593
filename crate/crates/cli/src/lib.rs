//! Batch commands behind the `tough-ham` binary. Each command reads its
//! inputs, writes line records to the given writer and returns the process
//! exit code.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;
use tough_ham::generate::{generate, GenKind, GenerateError};
use tough_ham::graph::Graph;
use tough_ham::graph6::{parse_graph6, Graph6Error};
use tough_ham::ham::OracleLimits;
use tough_ham::metrics::{
    connectivity, independence, scattering, toughness, MetricsError, DEFAULT_INDEPENDENCE_CAP, DEFAULT_TOUGHNESS_CAP,
};
use tough_ham::pipeline::{
    check_certificate, format_certificate, format_error, format_trace, parse_record, run_theorem, Certificate,
    CheckVerdict, FormatError, PipelineError, Record, RunConfig, Verbosity,
};
use tough_ham::rational::Rational;

pub const EXIT_OK: u8 = 0;
/// A certificate failed its check, or a run ended without a certificate.
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_ORACLE_LIMIT: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}:{line}: {source}")]
    Graph6 { path: PathBuf, line: usize, source: Graph6Error },
    #[error("{path}:{line}: {source}")]
    Record { path: PathBuf, line: usize, source: FormatError },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Output(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

/// One graph per non-blank line.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, CliError> {
    read(path)?
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|source| CliError::Graph6 { path: path.into(), line: i + 1, source }))
        .collect()
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub t: Rational,
    pub cap_toughness: usize,
    pub cap_oracle: usize,
    pub seed: u64,
    pub trace: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        let cfg = RunConfig::default();
        RunOptions {
            t: cfg.t,
            cap_toughness: cfg.toughness_cap,
            cap_oracle: cfg.oracle.cap,
            seed: 0,
            trace: true,
        }
    }
}

impl RunOptions {
    pub fn config(&self) -> Result<RunConfig, CliError> {
        if self.cap_oracle > 128 {
            return Err(CliError::Usage(format!("--cap-oracle is at most 128, got {}", self.cap_oracle)));
        }
        let cfg = RunConfig {
            t: self.t.clone(),
            toughness_cap: self.cap_toughness,
            independence_cap: DEFAULT_INDEPENDENCE_CAP,
            oracle: OracleLimits { cap: self.cap_oracle, ..RunConfig::default().oracle },
            seed: self.seed,
            verbosity: if self.trace { Verbosity::Stages } else { Verbosity::Off },
        };
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

/// Runs the pipeline on every graph of `input`, in parallel, writing records
/// in input order.
pub fn cmd_run(input: &Path, opts: &RunOptions, out: &mut dyn Write) -> Result<u8, CliError> {
    let cfg = opts.config()?;
    let graphs = read_graphs(input)?;
    let results: Vec<(Vec<String>, u8)> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let run = run_theorem(g, &cfg);
            let mut lines: Vec<String> = run.trace.records.iter().map(|r| format_trace(i, r)).collect();
            let code = match &run.outcome {
                Ok(cert) => {
                    lines.push(format_certificate(i, cert, &cfg.t));
                    if matches!(cert, Certificate::OracleLimit { .. }) {
                        EXIT_ORACLE_LIMIT
                    } else {
                        EXIT_OK
                    }
                }
                Err(e) => {
                    lines.push(format_error(i, &e.to_string()));
                    if matches!(e, PipelineError::Usage(_)) {
                        EXIT_USAGE
                    } else {
                        EXIT_FAIL
                    }
                }
            };
            (lines, code)
        })
        .collect();
    let mut exit = EXIT_OK;
    for (lines, code) in results {
        for l in lines {
            writeln!(out, "{l}")?;
        }
        exit = worst(exit, code);
    }
    Ok(exit)
}

/// Orders exit codes by severity: usage, check failure, oracle limit, ok.
fn worst(a: u8, b: u8) -> u8 {
    let rank = |c| match c {
        EXIT_USAGE => 3,
        EXIT_FAIL => 2,
        EXIT_ORACLE_LIMIT => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

/// Checks every certificate record of `certs` against the graph it names.
/// Trace records are skipped; error records and graphs left without a
/// certificate count as failures.
pub fn cmd_check(graph: &Path, certs: &Path, out: &mut dyn Write) -> Result<u8, CliError> {
    let graphs = read_graphs(graph)?;
    let text = read(certs)?;
    let mut covered = vec![false; graphs.len()];
    let mut exit = EXIT_OK;
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let record =
            parse_record(line).map_err(|source| CliError::Record { path: certs.into(), line: i + 1, source })?;
        let (idx, verdict, kind) = match record {
            Record::Trace { .. } => continue,
            Record::Error { graph, message } => (graph, CheckVerdict::Fail(format!("run error: {message}")), "error"),
            Record::Certificate { graph, t, certificate } => {
                let Some(g) = graphs.get(graph) else {
                    let (path, count) = (certs.display(), graphs.len());
                    return Err(CliError::Usage(format!("{path}:{}: graph {graph} but only {count} graphs", i + 1)));
                };
                (graph, check_certificate(g, &certificate, &t), certificate.kind())
            }
        };
        if let Some(c) = covered.get_mut(idx) {
            *c = true;
        }
        let line = match &verdict {
            CheckVerdict::Pass => format!("check\tgraph={idx}\tkind={kind}\tverdict=pass"),
            CheckVerdict::Fail(why) => format!("check\tgraph={idx}\tkind={kind}\tverdict=fail\treason={why}"),
            CheckVerdict::Inconclusive(why) => {
                format!("check\tgraph={idx}\tkind={kind}\tverdict=inconclusive\treason={why}")
            }
        };
        writeln!(out, "{line}")?;
        if !verdict.passed() {
            exit = EXIT_FAIL;
        }
    }
    for (idx, _) in covered.iter().enumerate().filter(|(_, c)| !**c) {
        writeln!(out, "check\tgraph={idx}\tkind=none\tverdict=fail\treason=no certificate")?;
        exit = EXIT_FAIL;
    }
    Ok(exit)
}

fn show<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

/// `tau=... kappa=... alpha=... delta=... s=...` for one graph.
pub fn metrics_line(g: &Graph) -> Result<String, MetricsError> {
    let tau = toughness(g, DEFAULT_TOUGHNESS_CAP)?;
    let s = scattering(g, DEFAULT_TOUGHNESS_CAP)?;
    let kappa = connectivity(g).value;
    let alpha = independence(g, DEFAULT_INDEPENDENCE_CAP)?.len();
    let delta = g.min_degree().map_or(0, |(_, d)| d);
    Ok(format!("tau={} kappa={kappa} alpha={alpha} delta={delta} s={}", show(tau.value()), show(s.value())))
}

/// One metrics line per graph. Graphs beyond the exact solvers' caps get a
/// `limit` line and exit code 3.
pub fn cmd_metrics(input: &Path, out: &mut dyn Write) -> Result<u8, CliError> {
    let graphs = read_graphs(input)?;
    let lines: Vec<Result<String, MetricsError>> = graphs.par_iter().map(metrics_line).collect();
    let mut exit = EXIT_OK;
    for line in lines {
        match line {
            Ok(l) => writeln!(out, "{l}")?,
            Err(e) => {
                writeln!(out, "limit {e}")?;
                exit = EXIT_ORACLE_LIMIT;
            }
        }
    }
    Ok(exit)
}

/// Parses a comma-separated list of rationals such as `9/4,5,8,11`.
pub fn parse_t_grid(s: &str) -> Result<Vec<Rational>, CliError> {
    let grid: Vec<Rational> = s
        .split(',')
        .map(|x| x.parse::<Rational>().map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<_, _>>()?;
    if grid.is_empty() || grid.iter().any(|t| !t.is_positive()) {
        return Err(CliError::Usage(format!("t-grid {s:?} must list positive rationals")));
    }
    Ok(grid)
}

#[derive(Debug, Clone)]
pub struct SurveyOptions {
    pub t_grid: Vec<Rational>,
    pub gen: GenKind,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub cap_toughness: usize,
    pub cap_oracle: usize,
}

/// Outcome counts for one value of `t`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurveyRow {
    pub cycles: usize,
    pub toughness: usize,
    pub forbidden: usize,
    pub oracle_limit: usize,
    /// The run stopped without a certificate.
    pub unresolved: usize,
    /// Certificates rejected by the checker; always zero unless there is a bug.
    pub invalid: usize,
}

/// Graph `i` of the corpus is `generate(gen, n, seed + i)`; each is run at
/// every `t` of the grid. One table row per `t`.
pub fn cmd_survey(opts: &SurveyOptions, out: &mut dyn Write) -> Result<u8, CliError> {
    if opts.n < 3 {
        return Err(CliError::Usage(format!("--n must be at least 3, got {}", opts.n)));
    }
    let graphs: Vec<Graph> = (0..opts.count)
        .into_par_iter()
        .map(|i| generate(opts.gen, opts.n, opts.seed.wrapping_add(i as u64)))
        .collect::<Result<_, _>>()?;
    writeln!(out, "# survey gen={} n={} count={} seed={}", opts.gen, opts.n, opts.count, opts.seed)?;
    let mut exit = EXIT_OK;
    writeln!(out, "t\tgraphs\tcycle\ttoughness\tforbidden\toracle_limit\tunresolved\tinvalid")?;
    for t in &opts.t_grid {
        let base = RunOptions {
            t: t.clone(),
            cap_toughness: opts.cap_toughness,
            cap_oracle: opts.cap_oracle,
            seed: opts.seed,
            trace: false,
        };
        let cfg = base.config()?;
        let row = graphs
            .par_iter()
            .map(|g| {
                let mut row = SurveyRow::default();
                match run_theorem(g, &cfg).outcome {
                    Ok(cert) => {
                        if !check_certificate(g, &cert, t).passed() && !matches!(cert, Certificate::OracleLimit { .. }) {
                            row.invalid += 1;
                        }
                        match cert {
                            Certificate::HamiltonCycle(_) => row.cycles += 1,
                            Certificate::Toughness(_) => row.toughness += 1,
                            Certificate::Forbidden(_) => row.forbidden += 1,
                            Certificate::OracleLimit { .. } => row.oracle_limit += 1,
                        }
                    }
                    Err(_) => row.unresolved += 1,
                }
                row
            })
            .reduce(SurveyRow::default, |a, b| SurveyRow {
                cycles: a.cycles + b.cycles,
                toughness: a.toughness + b.toughness,
                forbidden: a.forbidden + b.forbidden,
                oracle_limit: a.oracle_limit + b.oracle_limit,
                unresolved: a.unresolved + b.unresolved,
                invalid: a.invalid + b.invalid,
            });
        writeln!(
            out,
            "{t}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            graphs.len(),
            row.cycles,
            row.toughness,
            row.forbidden,
            row.oracle_limit,
            row.unresolved,
            row.invalid
        )?;
        if row.invalid > 0 {
            exit = EXIT_FAIL;
        }
    }
    Ok(exit)
}

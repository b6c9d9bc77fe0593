use std::fmt::Write as _;

use crate::graph::VertexSet;

/// How much the pipeline records while it runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub enum Verbosity {
    Off,
    /// Stage records with thresholds and intermediate outcomes.
    #[default]
    Stages,
    /// Stage records plus the vertex sets of each decomposition.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRecord {
    pub stage: &'static str,
    pub fields: Vec<(&'static str, String)>,
}

impl TraceRecord {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }

    /// `stage=NAME\tkey=value...`
    pub fn to_line(&self) -> String {
        let mut out = format!("stage={}", self.stage);
        for (k, v) in &self.fields {
            let _ = write!(out, "\t{k}={v}");
        }
        out
    }
}

/// Ordered record of one pipeline run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Trace {
    pub verbosity: Verbosity,
    pub records: Vec<TraceRecord>,
    /// Vertices the insertion step could not splice in directly.
    pub insertion_fallbacks: usize,
}

impl Trace {
    pub fn new(verbosity: Verbosity) -> Trace {
        Trace { verbosity, ..Trace::default() }
    }

    pub fn record(&mut self, stage: &'static str, fields: Vec<(&'static str, String)>) {
        if self.verbosity > Verbosity::Off {
            self.records.push(TraceRecord { stage, fields });
        }
    }

    /// Vertex sets are only kept at [`Verbosity::Full`].
    pub fn record_sets(&mut self, stage: &'static str, sets: &[(&'static str, &VertexSet)]) {
        if self.verbosity >= Verbosity::Full {
            let fields = sets.iter().map(|(k, s)| (*k, join_ids(s.iter()))).collect();
            self.records.push(TraceRecord { stage, fields });
        }
    }

    pub fn find(&self, stage: &str) -> Option<&TraceRecord> {
        self.records.iter().find(|r| r.stage == stage)
    }

    pub fn stages(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.records.iter().map(|r| r.stage)
    }
}

pub(crate) fn join_ids(ids: impl IntoIterator<Item = usize>) -> String {
    let mut out = String::new();
    for (i, v) in ids.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{v}");
    }
    out
}

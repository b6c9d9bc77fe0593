//! Line-delimited text records, tab-separated `key=value` fields:
//!
//! ```text
//! cert  graph=0  t=11/1  kind=hamilton_cycle  order=0 5 1 ...
//! cert  graph=1  t=11/1  kind=toughness  n=6  cutset=  components=2
//! cert  graph=2  t=11/1  kind=forbidden  pattern=2P2+P1  vertices=0 1 3 4 7
//! cert  graph=3  t=11/1  kind=oracle_limit  stage=...
//! trace graph=0  stage=gate  delta=22  threshold=1/1  fired=true
//! error graph=4  message=...
//! ```

use std::collections::HashMap;

use thiserror::Error;

use super::trace::join_ids;
use super::{Certificate, TraceRecord};
use crate::graph::{Vertex, VertexSet};
use crate::ham::CycleCert;
use crate::metrics::ToughnessWitness;
use crate::rational::Rational;
use crate::recognition::{InducedWitness, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("unknown record type {0:?}")]
    UnknownRecord(String),
    #[error("field without '=': {0:?}")]
    MalformedField(String),
    #[error("missing field {0}")]
    MissingField(&'static str),
    #[error("bad value for {field}: {value:?}")]
    BadValue { field: &'static str, value: String },
    #[error("unknown certificate kind {0:?}")]
    UnknownKind(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Record {
    Certificate { graph: usize, t: Rational, certificate: Certificate },
    Trace { graph: usize, stage: String },
    Error { graph: usize, message: String },
}

/// Keeps free text on one record field.
fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c == '\t' || c == '\n' || c == '\r' { ' ' } else { c }).collect()
}

pub fn format_certificate(graph: usize, cert: &Certificate, t: &Rational) -> String {
    let head = format!("cert\tgraph={graph}\tt={t}\tkind={}", cert.kind());
    match cert {
        Certificate::HamiltonCycle(c) => format!("{head}\torder={}", join_ids(c.order.iter().copied())),
        Certificate::Toughness(w) => format!(
            "{head}\tn={}\tcutset={}\tcomponents={}",
            w.cutset.universe(),
            join_ids(w.cutset.iter()),
            w.component_count
        ),
        Certificate::Forbidden(w) => {
            format!("{head}\tpattern={}\tvertices={}", w.pattern, join_ids(w.vertices.iter().copied()))
        }
        Certificate::OracleLimit { stage } => format!("{head}\tstage={}", sanitize(stage)),
    }
}

pub fn format_trace(graph: usize, record: &TraceRecord) -> String {
    let mut out = format!("trace\tgraph={graph}\tstage={}", record.stage);
    for (k, v) in &record.fields {
        out.push_str(&format!("\t{k}={}", sanitize(v)));
    }
    out
}

pub fn format_error(graph: usize, message: &str) -> String {
    format!("error\tgraph={graph}\tmessage={}", sanitize(message))
}

fn ids(field: &'static str, value: &str) -> Result<Vec<Vertex>, FormatError> {
    value
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| FormatError::BadValue { field, value: value.into() }))
        .collect()
}

fn number<T: std::str::FromStr>(field: &'static str, value: &str) -> Result<T, FormatError> {
    value.parse().map_err(|_| FormatError::BadValue { field, value: value.into() })
}

/// Parses one record line (trailing newline allowed).
pub fn parse_record(line: &str) -> Result<Record, FormatError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let mut parts = line.split('\t');
    let kind = parts.next().unwrap_or_default();
    let mut fields = HashMap::new();
    for p in parts {
        let (k, v) = p.split_once('=').ok_or_else(|| FormatError::MalformedField(p.into()))?;
        fields.insert(k, v);
    }
    let get = |k: &'static str| fields.get(k).copied().ok_or(FormatError::MissingField(k));
    let graph = number("graph", get("graph")?)?;
    match kind {
        "trace" => Ok(Record::Trace { graph, stage: get("stage")?.into() }),
        "error" => Ok(Record::Error { graph, message: get("message")?.into() }),
        "cert" => {
            let t: Rational = number("t", get("t")?)?;
            let certificate = match get("kind")? {
                "hamilton_cycle" => Certificate::HamiltonCycle(CycleCert { order: ids("order", get("order")?)? }),
                "toughness" => {
                    let n: usize = number("n", get("n")?)?;
                    let vs = ids("cutset", get("cutset")?)?;
                    if vs.iter().any(|&v| v >= n) {
                        return Err(FormatError::BadValue { field: "cutset", value: get("cutset")?.into() });
                    }
                    Certificate::Toughness(ToughnessWitness {
                        cutset: VertexSet::from_vertices(n, vs),
                        component_count: number("components", get("components")?)?,
                    })
                }
                "forbidden" => {
                    let pattern: Pattern = number("pattern", get("pattern")?)?;
                    Certificate::Forbidden(InducedWitness { vertices: ids("vertices", get("vertices")?)?, pattern })
                }
                "oracle_limit" => Certificate::OracleLimit { stage: get("stage")?.into() },
                other => return Err(FormatError::UnknownKind(other.into())),
            };
            Ok(Record::Certificate { graph, t, certificate })
        }
        other => Err(FormatError::UnknownRecord(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(cert: Certificate) {
        let t = Rational::new(9, 4);
        let line = format_certificate(3, &cert, &t);
        assert_eq!(parse_record(&line).unwrap(), Record::Certificate { graph: 3, t, certificate: cert });
    }

    #[test]
    fn certificates_round_trip() {
        round_trip(Certificate::HamiltonCycle(CycleCert { order: vec![0, 2, 1, 3] }));
        round_trip(Certificate::Toughness(ToughnessWitness {
            cutset: VertexSet::from_vertices(7, [1, 4]),
            component_count: 3,
        }));
        round_trip(Certificate::Toughness(ToughnessWitness { cutset: VertexSet::empty(6), component_count: 2 }));
        round_trip(Certificate::Forbidden(InducedWitness { vertices: vec![0, 1, 3, 4, 7], pattern: Pattern::TwoP2P1 }));
        round_trip(Certificate::OracleLimit { stage: "case1_join_cycle: node budget 5 exhausted".into() });
    }

    #[test]
    fn exact_line_shape() {
        let line = format_certificate(0, &Certificate::HamiltonCycle(CycleCert { order: vec![0, 1, 2] }), &Rational::integer(11));
        assert_eq!(line, "cert\tgraph=0\tt=11/1\tkind=hamilton_cycle\torder=0 1 2");
        let tr = TraceRecord { stage: "gate", fields: vec![("fired", "true".into())] };
        assert_eq!(format_trace(2, &tr), "trace\tgraph=2\tstage=gate\tfired=true");
        assert_eq!(parse_record(&format_trace(2, &tr)).unwrap(), Record::Trace { graph: 2, stage: "gate".into() });
    }

    #[test]
    fn malformed_records() {
        assert_eq!(parse_record("bogus\tgraph=0"), Err(FormatError::UnknownRecord("bogus".into())));
        assert_eq!(parse_record("cert\tgraph=0\tt=11"), Err(FormatError::MissingField("kind")));
        assert!(matches!(
            parse_record("cert\tgraph=0\tt=11\tkind=hamilton_cycle\torder=0 x"),
            Err(FormatError::BadValue { field: "order", .. })
        ));
        assert!(parse_record("cert\tgraph=0\tt=11\tkind=toughness\tn=3\tcutset=5\tcomponents=2").is_err());
    }
}

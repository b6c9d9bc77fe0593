use crate::graph::Graph;
use crate::ham::CycleCert;
use crate::metrics::ToughnessWitness;
use crate::rational::Rational;
use crate::recognition::{InducedWitness, Pattern};

/// The outcome of a run: a Hamilton cycle, or evidence that the graph lies
/// outside the class, or a solver cap that stopped the run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    HamiltonCycle(CycleCert),
    /// A cutset with `|S| / c(G - S) < t`.
    Toughness(ToughnessWitness),
    /// An induced `2P2 ∪ P1`.
    Forbidden(InducedWitness),
    OracleLimit { stage: String },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::HamiltonCycle(_) => "hamilton_cycle",
            Certificate::Toughness(_) => "toughness",
            Certificate::Forbidden(_) => "forbidden",
            Certificate::OracleLimit { .. } => "oracle_limit",
        }
    }

    pub fn is_witness(&self) -> bool {
        matches!(self, Certificate::Toughness(_) | Certificate::Forbidden(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict {
    Pass,
    Fail(String),
    /// An oracle-limit record proves nothing.
    Inconclusive(String),
}

impl CheckVerdict {
    pub fn passed(&self) -> bool {
        *self == CheckVerdict::Pass
    }
}

/// Validates `cert` against `g` from scratch; toughness witnesses are judged
/// against `t` with exact arithmetic.
pub fn check_certificate(g: &Graph, cert: &Certificate, t: &Rational) -> CheckVerdict {
    match cert {
        Certificate::HamiltonCycle(c) => match c.check(g) {
            Ok(()) => CheckVerdict::Pass,
            Err(e) => CheckVerdict::Fail(e),
        },
        Certificate::Toughness(w) => {
            let n = g.n();
            if w.cutset.universe() != n {
                return CheckVerdict::Fail(format!("cutset universe {} != {n}", w.cutset.universe()));
            }
            let c = g.component_count(&w.cutset);
            if c != w.component_count {
                return CheckVerdict::Fail(format!("claimed {} components, found {c}", w.component_count));
            }
            if c < 2 {
                return CheckVerdict::Fail("not a cutset".into());
            }
            let ratio = Rational::ratio(w.cutset.len(), c);
            if ratio < *t {
                CheckVerdict::Pass
            } else {
                CheckVerdict::Fail(format!("ratio {ratio} is not below t = {t}"))
            }
        }
        Certificate::Forbidden(w) => {
            if w.pattern != Pattern::TwoP2P1 {
                CheckVerdict::Fail(format!("pattern {} is not 2P2+P1", w.pattern))
            } else if w.is_valid_in(g) {
                CheckVerdict::Pass
            } else {
                CheckVerdict::Fail("vertices do not induce 2P2+P1".into())
            }
        }
        Certificate::OracleLimit { stage } => CheckVerdict::Inconclusive(format!("oracle limit at {stage}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn checker_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let t = Rational::integer(11);
        let ok = Certificate::HamiltonCycle(CycleCert { order: vec![0, 1, 2, 3, 4] });
        assert_eq!(check_certificate(&c5, &ok, &t), CheckVerdict::Pass);
        let bad = Certificate::HamiltonCycle(CycleCert { order: vec![0, 2, 4, 1, 3] });
        assert_eq!(check_certificate(&c5, &bad, &t), CheckVerdict::Fail("missing edge 0-2".into()));

        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let w = Certificate::Toughness(ToughnessWitness { cutset: VertexSet::empty(6), component_count: 2 });
        assert_eq!(check_certificate(&two_triangles, &w, &t), CheckVerdict::Pass);

        let limit = Certificate::OracleLimit { stage: "gate".into() };
        assert!(!check_certificate(&c5, &limit, &t).passed());
    }

    #[test]
    fn toughness_ratio_is_strict() {
        // K_{1,2}: removing the center gives ratio 1/2
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let w = Certificate::Toughness(ToughnessWitness { cutset: VertexSet::singleton(3, 1), component_count: 2 });
        assert!(check_certificate(&p3, &w, &Rational::new(1, 1)).passed());
        assert!(!check_certificate(&p3, &w, &Rational::new(1, 2)).passed());
    }
}

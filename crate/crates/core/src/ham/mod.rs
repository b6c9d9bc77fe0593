//! Hamilton cycle and path machinery.
//!
//! - [`ham_cycle_forced`]: exhaustive backtracking for a Hamilton cycle
//!   through a set of independent forced edges.
//! - [`dirac_cycle`]: polynomial rotation-extension construction when
//!   `δ ≥ n/2`.
//! - [`multipartite_ham_path`]: Hamiltonian `(x, y)`-paths in complete
//!   multipartite graphs.
//! - [`insert_vertices`]: grows a cycle by absorbing vertices with many
//!   neighbours on it.

mod dirac;
mod insert;
mod multipartite;
mod oracle;

use thiserror::Error;

pub use dirac::dirac_cycle;
pub use insert::{insert_vertices, Insertion};
pub use multipartite::{multipartite_ham_path, multipartite_path_feasible};
pub use oracle::{ham_cycle_forced, HamOutcome, OracleLimits};

use crate::graph::{Edge, Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("forced edges {0:?} and {1:?} share an endpoint")]
    ForcedNotIndependent(Edge, Edge),
    #[error("forced edge {0:?} is not an edge of the graph")]
    ForcedNotEdge(Edge),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {vertex} has {found} neighbours on the cycle; the insertion hypothesis needs more")]
    InsertionHypothesis { vertex: Vertex, found: usize },
    #[error("vertex {0} could not be inserted into the cycle")]
    InsertionFailed(Vertex),
    #[error("{stage}: oracle limit reached ({detail})")]
    OracleLimit { stage: &'static str, detail: String },
}

/// A Hamilton cycle, listed from vertex `order[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCert {
    pub order: Vec<Vertex>,
}

impl CycleCert {
    /// `Ok` iff `order` is a permutation of `V(g)` with every cyclically
    /// consecutive pair adjacent; otherwise names the first defect.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        if self.order.len() != n {
            return Err(format!("cycle has {} vertices, graph has {n}", self.order.len()));
        }
        if n < 3 {
            return Err(format!("no Hamilton cycle on {n} vertices"));
        }
        let mut seen = VertexSet::empty(n);
        for &v in &self.order {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if seen.contains(v) {
                return Err(format!("vertex {v} repeated"));
            }
            seen.insert(v);
        }
        for i in 0..n {
            let (a, b) = (self.order[i], self.order[(i + 1) % n]);
            if !g.has_edge(a, b) {
                return Err(format!("missing edge {a}-{b}"));
            }
        }
        Ok(())
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        let k = self.order.len();
        (0..k).any(|i| Edge::new(self.order[i], self.order[(i + 1) % k]).ok() == Some(e))
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.order.iter().copied())
    }
}

/// A path, listed from one end to the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCert {
    pub order: Vec<Vertex>,
}

impl PathCert {
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let mut seen = VertexSet::empty(g.n());
        for &v in &self.order {
            if v >= g.n() || seen.contains(v) {
                return Err(format!("vertex {v} out of range or repeated"));
            }
            seen.insert(v);
        }
        for w in self.order.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("missing edge {}-{}", w[0], w[1]));
            }
        }
        if self.order.is_empty() {
            return Err("empty path".into());
        }
        Ok(())
    }

    pub fn ends(&self) -> (Vertex, Vertex) {
        (self.order[0], *self.order.last().expect("nonempty path"))
    }

    pub fn internal(&self) -> &[Vertex] {
        if self.order.len() <= 2 {
            &[]
        } else {
            &self.order[1..self.order.len() - 1]
        }
    }
}

/// Replaces each forced edge `ab` of `cycle` by the matching path with ends
/// `a`, `b`; `paths[i]` belongs to `forced[i]`.
pub fn splice_paths(cycle: &CycleCert, forced: &[Edge], paths: &[PathCert]) -> Result<CycleCert, String> {
    let k = cycle.order.len();
    let mut out = Vec::with_capacity(k + paths.iter().map(|p| p.internal().len()).sum::<usize>());
    for i in 0..k {
        let (a, b) = (cycle.order[i], cycle.order[(i + 1) % k]);
        out.push(a);
        let Ok(e) = Edge::new(a, b) else { continue };
        if let Some(j) = forced.iter().position(|f| *f == e) {
            let p = &paths[j];
            let inner = p.internal();
            if p.ends() == (a, b) {
                out.extend_from_slice(inner);
            } else if p.ends() == (b, a) {
                out.extend(inner.iter().rev());
            } else {
                return Err(format!("path for {a}-{b} has ends {:?}", p.ends()));
            }
        }
    }
    for e in forced {
        if !cycle.contains_edge(*e) {
            return Err(format!("cycle misses forced edge {}-{}", e.u, e.v));
        }
    }
    Ok(CycleCert { order: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_checker() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(CycleCert { order: vec![0, 1, 2, 3, 4] }.check(&c5).is_ok());
        assert_eq!(
            CycleCert { order: vec![0, 2, 4, 1, 3] }.check(&c5),
            Err("missing edge 0-2".into())
        );
        assert!(CycleCert { order: vec![0, 1, 2, 3, 3] }.check(&c5).is_err());
    }

    #[test]
    fn splice_replaces_forced_edge() {
        // G2* cycle z=0, a=1, w=2, b=3 with forced {0,2}; cover path 0-10-11-2
        let cycle = CycleCert { order: vec![0, 2, 1, 3] };
        let forced = [Edge::new(0, 2).unwrap()];
        let paths = [PathCert { order: vec![2, 11, 10, 0] }];
        let spliced = splice_paths(&cycle, &forced, &paths).unwrap();
        assert_eq!(spliced.order, vec![0, 10, 11, 2, 1, 3]);
    }
}

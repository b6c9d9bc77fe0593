//! Induced-pattern detection with explicit witnesses, and the
//! complete-multipartite structure of (P2 ∪ P1)-free graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::metrics::{self, MetricsError};

/// Largest pattern the backtracking search accepts.
pub const MAX_PATTERN_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("pattern has {0} vertices; at most {MAX_PATTERN_ORDER} are supported")]
    PatternTooLarge(usize),
    #[error("graph is not (P2+P1)-free: induced copy on {0:?}")]
    NotP2P1Free(InducedWitness),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
}

/// The fixed pattern library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    P1,
    P2,
    P3,
    P4,
    P5,
    /// An edge plus an isolated vertex.
    P2P1,
    /// Two disjoint edges.
    TwoP2,
    /// Two disjoint edges plus an isolated vertex.
    TwoP2P1,
    P4P1,
}

impl Pattern {
    pub const ALL: [Pattern; 9] = [
        Pattern::P1,
        Pattern::P2,
        Pattern::P3,
        Pattern::P4,
        Pattern::P5,
        Pattern::P2P1,
        Pattern::TwoP2,
        Pattern::TwoP2P1,
        Pattern::P4P1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P1 => "P1",
            Pattern::P2 => "P2",
            Pattern::P3 => "P3",
            Pattern::P4 => "P4",
            Pattern::P5 => "P5",
            Pattern::P2P1 => "P2+P1",
            Pattern::TwoP2 => "2P2",
            Pattern::TwoP2P1 => "2P2+P1",
            Pattern::P4P1 => "P4+P1",
        }
    }

    /// Vertex count and edge list.
    fn shape(self) -> (usize, &'static [(Vertex, Vertex)]) {
        match self {
            Pattern::P1 => (1, &[]),
            Pattern::P2 => (2, &[(0, 1)]),
            Pattern::P3 => (3, &[(0, 1), (1, 2)]),
            Pattern::P4 => (4, &[(0, 1), (1, 2), (2, 3)]),
            Pattern::P5 => (5, &[(0, 1), (1, 2), (2, 3), (3, 4)]),
            Pattern::P2P1 => (3, &[(0, 1)]),
            Pattern::TwoP2 => (4, &[(0, 1), (2, 3)]),
            Pattern::TwoP2P1 => (5, &[(0, 1), (2, 3)]),
            Pattern::P4P1 => (5, &[(0, 1), (1, 2), (2, 3)]),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges) = self.shape();
        Graph::from_edges(n, edges.iter().copied()).expect("pattern edges are valid")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Pattern, String> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pattern {s:?}"))
    }
}

/// Host vertices of an induced copy, listed in pattern-vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedWitness {
    pub vertices: Vec<Vertex>,
    pub pattern: Pattern,
}

impl InducedWitness {
    /// True when `vertices[i] ↦ i` is an isomorphism onto the pattern.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let p = self.pattern.graph();
        if self.vertices.len() != p.n() || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct = VertexSet::from_vertices(g.n(), self.vertices.iter().copied()).len();
        if distinct != p.n() {
            return false;
        }
        (0..p.n()).all(|i| {
            (i + 1..p.n()).all(|j| p.has_edge(i, j) == g.has_edge(self.vertices[i], self.vertices[j]))
        })
    }
}

/// Exhaustive search for an induced copy of `pattern`. The first copy found
/// is the lexicographically smallest tuple of host vertices.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<InducedWitness> {
    find_induced_graph(g, &pattern.graph())
        .expect("library patterns fit the search")
        .map(|vertices| InducedWitness { vertices, pattern })
}

/// Same as [`find_induced`] for an arbitrary pattern graph of order at most 5.
pub fn find_induced_graph(g: &Graph, pattern: &Graph) -> Result<Option<Vec<Vertex>>, RecognitionError> {
    let k = pattern.n();
    if k > MAX_PATTERN_ORDER {
        return Err(RecognitionError::PatternTooLarge(k));
    }
    if k > g.n() {
        return Ok(None);
    }
    let mut search = PatternSearch {
        g,
        pattern,
        image: Vec::with_capacity(k),
        used: VertexSet::empty(g.n()),
    };
    Ok(if search.extend() { Some(search.image) } else { None })
}

struct PatternSearch<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    image: Vec<Vertex>,
    used: VertexSet,
}

impl PatternSearch<'_> {
    fn extend(&mut self) -> bool {
        let i = self.image.len();
        let k = self.pattern.n();
        if i == k {
            return true;
        }
        let need_deg = self.pattern.degree(i);
        let need_non = k - 1 - need_deg;
        let n = self.g.n();
        // candidates consistent with every vertex already placed
        let mut cand = self.used.complement();
        for (j, &h) in self.image.iter().enumerate() {
            if self.pattern.has_edge(i, j) {
                cand.intersect_with(self.g.row(h));
            } else {
                cand.difference_with(self.g.row(h));
            }
        }
        for h in cand.iter() {
            let deg = self.g.degree(h);
            if deg < need_deg || n - 1 - deg < need_non {
                continue;
            }
            self.image.push(h);
            self.used.insert(h);
            if self.extend() {
                return true;
            }
            self.used.remove(h);
            self.image.pop();
        }
        false
    }
}

/// Partition into independent parts that are pairwise completely joined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multipartition {
    /// Ordered by minimum vertex id.
    pub parts: Vec<VertexSet>,
}

impl Multipartition {
    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// First part (by minimum vertex) of maximum size.
    pub fn largest_part(&self) -> Option<&VertexSet> {
        let max = self.max_part_size();
        self.parts.iter().find(|p| p.len() == max)
    }

    pub fn is_complete_graph(&self) -> bool {
        self.parts.iter().all(|p| p.len() == 1)
    }

    /// Checks the defining invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut covered = VertexSet::empty(g.n());
        for p in &self.parts {
            if p.universe() != g.n() || !p.is_disjoint(&covered) || !g.is_independent(p) {
                return false;
            }
            covered.union_with(p);
        }
        if covered != g.vertices() {
            return false;
        }
        self.parts
            .iter()
            .all(|p| p.iter().all(|v| g.row(v).union(p) == g.vertices()))
    }
}

/// Complete-multipartite structure, or an induced P2 ∪ P1 showing there is none.
///
/// A graph is (P2 ∪ P1)-free exactly when its complement is a disjoint union
/// of cliques; the parts are the complement's components.
pub fn multipartite_decompose(g: &Graph) -> Result<Multipartition, InducedWitness> {
    let parts = g.complement().components(&VertexSet::empty(g.n()));
    if parts.iter().all(|p| g.is_independent(p)) {
        Ok(Multipartition { parts })
    } else {
        Err(find_induced(g, Pattern::P2P1).expect("non-multipartite graph contains P2+P1"))
    }
}

pub fn is_p2p1_free(g: &Graph) -> bool {
    multipartite_decompose(g).is_ok()
}

/// Connectivity facts every (P2 ∪ P1)-free graph satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteBounds {
    pub kappa: usize,
    pub delta: usize,
    pub alpha: usize,
    pub n: usize,
    /// `κ(G) = δ(G)`
    pub connectivity_equals_min_degree: bool,
    /// `δ(G) ≥ n − α(G)`
    pub min_degree_bound: bool,
}

impl MultipartiteBounds {
    pub fn passed(&self) -> bool {
        self.connectivity_equals_min_degree && self.min_degree_bound
    }
}

pub fn check_multipartite_bounds(g: &Graph, independence_cap: usize) -> Result<MultipartiteBounds, RecognitionError> {
    multipartite_decompose(g).map_err(RecognitionError::NotP2P1Free)?;
    let n = g.n();
    let kappa = metrics::connectivity(g).value;
    let alpha = metrics::independence(g, independence_cap)?.len();
    let delta = g.min_degree().map_or(0, |(_, d)| d);
    Ok(MultipartiteBounds {
        kappa,
        delta,
        alpha,
        n,
        connectivity_equals_min_degree: kappa == delta,
        min_degree_bound: delta + alpha >= n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn p4() -> Graph {
        Pattern::P4.graph()
    }

    fn complete_multipartite(sizes: &[usize]) -> Graph {
        let n = sizes.iter().sum();
        let mut part = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat(i).take(s));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn find_induced_examples() {
        assert_eq!(find_induced(&cycle(5), Pattern::TwoP2P1), None);
        let pat = Pattern::TwoP2P1.graph();
        let w = find_induced(&pat, Pattern::TwoP2P1).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        let w = find_induced(&p4(), Pattern::P2P1).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 3]);
        assert!(w.is_valid_in(&p4()));
    }

    #[test]
    fn oversized_pattern_rejected() {
        assert_eq!(
            find_induced_graph(&cycle(7), &cycle(6)),
            Err(RecognitionError::PatternTooLarge(6))
        );
    }

    #[test]
    fn decompose_examples() {
        let m = multipartite_decompose(&complete_multipartite(&[2, 3])).unwrap();
        let mut sizes = m.part_sizes();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
        let p3 = Pattern::P3.graph();
        let m = multipartite_decompose(&p3).unwrap();
        assert_eq!(m.parts[0].to_vec(), vec![0, 2]);
        assert_eq!(m.parts[1].to_vec(), vec![1]);
        assert!(m.is_valid_for(&p3));
        let w = multipartite_decompose(&p4()).unwrap_err();
        assert_eq!(w.vertices, vec![0, 1, 3]);
        assert_eq!(w.pattern, Pattern::P2P1);
    }

    #[test]
    fn multipartite_bounds_examples() {
        let r = check_multipartite_bounds(&complete_multipartite(&[3, 3]), 64).unwrap();
        assert_eq!((r.kappa, r.delta, r.alpha), (3, 3, 3));
        assert!(r.passed());
        let r = check_multipartite_bounds(&Graph::complete(5), 64).unwrap();
        assert_eq!((r.kappa, r.delta, r.alpha), (4, 4, 1));
        assert!(r.passed());
        let r = check_multipartite_bounds(&complete_multipartite(&[2, 2, 2]), 64).unwrap();
        assert_eq!((r.kappa, r.delta, r.alpha), (4, 4, 2));
        assert!(r.passed());
        assert!(matches!(
            check_multipartite_bounds(&p4(), 64),
            Err(RecognitionError::NotP2P1Free(_))
        ));
    }

    #[test]
    fn witness_validation_rejects_wrong_shapes() {
        let c5 = cycle(5);
        let bogus = InducedWitness { vertices: vec![0, 1, 2, 3, 4], pattern: Pattern::TwoP2P1 };
        assert!(!bogus.is_valid_in(&c5));
        let dup = InducedWitness { vertices: vec![0, 0, 2], pattern: Pattern::P2P1 };
        assert!(!dup.is_valid_in(&c5));
    }

    #[test]
    fn pattern_names_round_trip() {
        for p in Pattern::ALL {
            assert_eq!(p.name().parse::<Pattern>().unwrap(), p);
            assert!(p.graph().n() <= MAX_PATTERN_ORDER);
        }
    }
}

//! Dense simple undirected graphs over vertices `0..n` with bit-row adjacency.
//!
//! Every other module consumes [`Graph`] and [`VertexSet`]. Both are plain
//! values: once built they are only read, so they can be shared freely across
//! worker threads.

use std::fmt;

use thiserror::Error;

/// Vertex id, always `< n` of the host graph.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("vertex set over {found} vertices used with graph on {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("bipartite sides overlap at vertex {0}")]
    OverlappingSides(Vertex),
}

const WORD: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `0..universe`, stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from vertex ids. Panics if an id is `>= universe`.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::empty(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn singleton(universe: usize, v: Vertex) -> Self {
        Self::from_vertices(universe, [v])
    }

    /// Builds a set from the low `universe` bits of `mask` (`universe <= 128`).
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        assert!(universe <= 128);
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            *w = (mask >> (64 * i)) as u64;
        }
        s.trim();
        s
    }

    /// The set as a bit mask. Only valid when `universe <= 128`.
    pub fn to_mask(&self) -> u128 {
        assert!(self.universe <= 128);
        self.words
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &w)| acc | (u128::from(w) << (64 * i)))
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &VertexSet) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_universe(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { universe: self.universe, words }
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Orders sets by the integer whose bit `v` is set iff `v` is a member.
    /// Witness tie-breaking uses this order throughout.
    pub fn cmp_as_mask(&self, other: &VertexSet) -> std::cmp::Ordering {
        self.check_universe(other);
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// An undirected edge, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Result<Edge, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn is_independent_of(&self, other: &Edge) -> bool {
        !self.touches(other.u) && !self.touches(other.v)
    }
}

/// Simple undirected graph on `0..n`; `rows[u]` holds the neighbours of `u`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            rows: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(u);
            g.rows[u] = row;
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() == self.n() {
            Ok(())
        } else {
            Err(GraphError::UniverseMismatch {
                expected: self.n(),
                found: s.universe(),
            })
        }
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.rows[a].insert(b);
        self.rows[b].insert(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        self.rows[a].remove(b);
        self.rows[b].remove(a);
        Ok(())
    }

    /// Adjacency test; out-of-range ids are simply non-adjacent.
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n() && self.rows[a].contains(b)
    }

    /// Neighbourhood row of `v`. Panics when `v` is out of range; see [`Graph::neighbors`].
    pub fn row(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(&self.rows[v])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].len()
    }

    /// `|N(v) ∩ s|`
    pub fn degree_into(&self, v: Vertex, s: &VertexSet) -> usize {
        self.rows[v].intersection_len(s)
    }

    /// Minimum degree together with the smallest vertex attaining it.
    pub fn min_degree(&self) -> Option<(Vertex, usize)> {
        (0..self.n())
            .map(|v| (v, self.degree(v)))
            .min_by_key(|&(v, d)| (d, v))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.rows.iter().all(|r| r.len() + 1 == n)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            let mut row = self.rows[u].complement();
            row.remove(u);
            g.rows[u] = row;
        }
        g
    }

    /// `N(S) = (⋃_{x∈S} N(x)) \ S`
    pub fn set_neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_set(s)?;
        let mut out = VertexSet::empty(self.n());
        for v in s {
            out.union_with(&self.rows[v]);
        }
        out.difference_with(s);
        Ok(out)
    }

    /// Connected components of `G - removed`, ordered by minimum vertex id.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = removed.complement();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::singleton(self.n(), start);
            let mut frontier = comp.clone();
            unseen.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n());
                for v in &frontier {
                    next.union_with(&self.rows[v]);
                }
                next.intersect_with(&unseen);
                unseen.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp);
        }
        out
    }

    /// `c(G - removed)`
    pub fn component_count(&self, removed: &VertexSet) -> usize {
        self.components(removed).len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(&VertexSet::empty(self.n())) <= 1
    }

    /// `G[s]`, relabelled to `0..|s|` in increasing order of original id.
    pub fn induced(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(s)?;
        let labels = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Graph::new(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in self.rows[v].intersection(s).iter() {
                graph.rows[i].insert(index[w]);
            }
        }
        Ok(InducedSubgraph { graph, labels })
    }

    /// `G[a, b]`: same vertex set, keeping only edges with one end in each side.
    pub fn bipartite_between(&self, a: &VertexSet, b: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(a)?;
        self.check_set(b)?;
        if let Some(v) = a.intersection(b).first() {
            return Err(GraphError::OverlappingSides(v));
        }
        let mut g = Graph::new(self.n());
        for u in a {
            for v in self.rows[u].intersection(b).iter() {
                g.rows[u].insert(v);
                g.rows[v].insert(u);
            }
        }
        Ok(g)
    }

    /// Adjacency rows as `u128` masks, for solvers restricted to `n <= 128`.
    pub(crate) fn masks(&self) -> Vec<u128> {
        assert!(self.n() <= 128);
        self.rows.iter().map(VertexSet::to_mask).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}-{}", e.u, e.v)?;
        }
        write!(f, "])")
    }
}

/// An induced subgraph together with the map back to the parent's ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the parent id of local vertex `i`.
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn lift(&self, local: Vertex) -> Vertex {
        self.labels[local]
    }

    pub fn lift_all(&self, local: &[Vertex]) -> Vec<Vertex> {
        local.iter().map(|&v| self.labels[v]).collect()
    }

    pub fn lift_set(&self, local: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_vertices(parent_n, local.iter().map(|v| self.labels[v]))
    }

    /// Local id of a parent vertex, if it was kept.
    pub fn local(&self, parent: Vertex) -> Option<Vertex> {
        self.labels.binary_search(&parent).ok()
    }
}

/// Iterate the set bits of a `u128` mask.
pub(crate) fn mask_iter(mut mask: u128) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

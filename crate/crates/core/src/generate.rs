//! Seeded instance factories. Every generator is a pure function of its
//! parameters and seed (ChaCha8), so corpora can be rebuilt bit for bit.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};
use crate::rational::Rational;
use crate::recognition::{find_induced, Pattern};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),
    #[error("unknown generator {0:?}")]
    UnknownKind(String),
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// Complete multipartite graph; part `i` gets the next `parts[i]` ids.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GenerateError> {
    if parts.contains(&0) {
        return Err(GenerateError::Unsatisfiable("parts must be nonempty".into()));
    }
    let n = parts.iter().sum();
    let mut g = Graph::complete(n);
    let mut start = 0;
    for &p in parts {
        for a in start..start + p {
            for b in a + 1..start + p {
                g.remove_edge(a, b).expect("in range");
            }
        }
        start += p;
    }
    Ok(g)
}

/// `K_clique ∨ K̄_independent`: the clique on ids `0..clique`.
pub fn complete_split_join(clique: usize, independent: usize) -> Graph {
    let mut parts = vec![1; clique];
    if independent > 0 {
        parts.push(independent);
    }
    complete_multipartite(&parts).expect("parts nonempty")
}

fn check_p(p: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenerateError::Unsatisfiable(format!("edge probability {p} outside [0, 1]")))
    }
}

/// `G(n, p)`.
pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_p(p)?;
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(p) {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    Ok(g)
}

/// A `(2P2 ∪ P1)`-free graph: a `G(n, p)` sample, repaired by adding a random
/// missing edge inside each induced copy found until none is left. Plain
/// rejection almost never succeeds beyond a dozen vertices.
pub fn random_in_class(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_p(p)?;
    let mut r = rng(seed);
    let mut g = random(n, p, r.gen())?;
    while let Some(w) = find_induced(&g, Pattern::TwoP2P1) {
        let missing: Vec<(Vertex, Vertex)> = w
            .vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| w.vertices[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        let &(a, b) = missing.choose(&mut r).expect("the pattern has non-edges");
        g.add_edge(a, b).expect("in range");
    }
    Ok(g)
}

/// A random `P4`-free graph on `n` vertices: split the vertex range in two,
/// build both halves recursively, then take their disjoint union or join.
pub fn random_cograph(n: usize, seed: u64) -> Graph {
    fn build(g: &mut Graph, lo: usize, hi: usize, r: &mut ChaCha8Rng) {
        if hi - lo < 2 {
            return;
        }
        let mid = r.gen_range(lo + 1..hi);
        build(g, lo, mid, r);
        build(g, mid, hi, r);
        if r.gen_bool(0.5) {
            for a in lo..mid {
                for b in mid..hi {
                    g.add_edge(a, b).expect("in range");
                }
            }
        }
    }
    let mut r = rng(seed);
    let mut g = Graph::new(n);
    build(&mut g, 0, n, &mut r);
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut r);
    relabel(&g, &perm)
}

/// A complete multipartite graph on `n` vertices with random part sizes.
pub fn random_complete_multipartite(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let parts = if n == 0 {
        Vec::new()
    } else {
        let max = r.gen_range(1..=n);
        split(&mut r, n, max)
    };
    let g = complete_multipartite(&parts).expect("parts are positive");
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut r);
    relabel(&g, &perm)
}

fn relabel(g: &Graph, perm: &[Vertex]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|e| (perm[e.u], perm[e.v]))).expect("permutation of 0..n")
}

/// Shapes of the low-degree side `G1` of a synthetic instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case1Profile {
    /// `G1` is a clique.
    Complete,
    /// No part holds half of `G1`.
    Connected,
    /// One part holds more than half of `G1`.
    Scattered,
    /// One part holds exactly half and `|V(G1)| < 2t`.
    BalancedSmall,
    /// One part holds exactly half, the rest is split, `|V(G1)| ≥ 2t`.
    BalancedLarge,
    /// `G1 = K_{a,a}` with `|V(G1)| ≥ 2t`.
    BalancedBipartite,
}

impl Case1Profile {
    pub const ALL: [Case1Profile; 6] = [
        Case1Profile::Complete,
        Case1Profile::Connected,
        Case1Profile::Scattered,
        Case1Profile::BalancedSmall,
        Case1Profile::BalancedLarge,
        Case1Profile::BalancedBipartite,
    ];
}

/// A graph with an edge `uv` whose joint neighbourhood has at most `5n/12`
/// vertices, built so that every step of the construction succeeds for `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case1Instance {
    pub graph: Graph,
    pub edge: Edge,
    pub t: Rational,
    pub profile: Case1Profile,
    /// Part sizes of `G1`, the part of `u` first and that of `v` second.
    pub g1_parts: Vec<usize>,
}

/// Splits `total` into random positive parts, each at most `max`.
fn split(r: &mut ChaCha8Rng, total: usize, max: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut left = total;
    while left > 0 {
        let p = r.gen_range(1..=left.min(max));
        out.push(p);
        left -= p;
    }
    out
}

fn g1_shape(r: &mut ChaCha8Rng, profile: Case1Profile) -> (Vec<usize>, usize) {
    match profile {
        Case1Profile::Complete => (vec![1; r.gen_range(2..=6)], 2),
        Case1Profile::Connected => loop {
            let parts: Vec<usize> = (0..r.gen_range(3..=5)).map(|_| r.gen_range(1..=3)).collect();
            let (sum, max) = (parts.iter().sum::<usize>(), *parts.iter().max().expect("nonempty"));
            if 2 * max < sum && max > 1 {
                break (parts, 2);
            }
        },
        Case1Profile::Scattered => {
            let a = r.gen_range(2..=5);
            let mut parts = vec![a];
            let rest = r.gen_range(1..a);
            parts.extend(split(r, rest, a - 1));
            (parts, 2)
        }
        Case1Profile::BalancedSmall => {
            let a = r.gen_range(2..=3);
            let mut parts = vec![a];
            parts.extend(split(r, a, a));
            (parts, a + 1)
        }
        Case1Profile::BalancedLarge => {
            let a = r.gen_range(2..=4);
            let mut parts = vec![a];
            parts.extend(split(r, a, a - 1));
            (parts, 2)
        }
        Case1Profile::BalancedBipartite => {
            let a = r.gen_range(2..=4);
            (vec![a, a], 2)
        }
    }
}

/// Synthetic instance for the small-neighbourhood case. Vertex groups before
/// a random relabelling: `u`, `v`, then `S1` (the rest of `G1`), `S2` (a
/// clique joined to `u`, `v` and all of `D2`) and `D2` (complete multipartite
/// with parts of size at most two). Each `S1` vertex sees at least two but
/// fewer than `2n/(t+1)` vertices of `D2`.
pub fn case1_synthetic(profile: Case1Profile, seed: u64) -> Case1Instance {
    let mut r = rng(seed);
    let (g1_parts, t) = g1_shape(&mut r, profile);
    let v1: usize = g1_parts.iter().sum();
    let s2 = r.gen_range(2..=3);
    let m = v1 + s2;
    // |D2| ≥ 2n/(t+1) and 12|N(u) ∪ N(v)| ≤ 5n
    let mut d2 = 1;
    while d2 * (t - 1) < 2 * m || 5 * d2 < 7 * m {
        d2 += 1;
    }
    d2 += r.gen_range(0..=3);
    let n = m + d2;

    let mut part_of = Vec::with_capacity(v1);
    // u and v come first, in parts 0 and 1
    part_of.extend([0, 1]);
    for (i, &p) in g1_parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p - usize::from(i < 2)));
    }
    let s1: Vec<Vertex> = (2..v1).collect();
    let s2v: Vec<Vertex> = (v1..m).collect();
    let d2v: Vec<Vertex> = (m..n).collect();

    let mut g = Graph::new(n);
    for a in 0..v1 {
        for b in a + 1..v1 {
            if part_of[a] != part_of[b] {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    for &x in &s2v {
        for y in [0, 1].into_iter().chain(d2v.iter().copied()) {
            g.add_edge(x, y).expect("in range");
        }
        for &y in s2v.iter().filter(|&&y| y > x) {
            g.add_edge(x, y).expect("in range");
        }
    }
    let d2_parts = split(&mut r, d2, 2);
    let mut d2_part = Vec::with_capacity(d2);
    for (i, &p) in d2_parts.iter().enumerate() {
        d2_part.extend(std::iter::repeat_n(i, p));
    }
    for i in 0..d2 {
        for j in i + 1..d2 {
            if d2_part[i] != d2_part[j] {
                g.add_edge(d2v[i], d2v[j]).expect("in range");
            }
        }
    }
    // largest k with k(t+1) < 2n
    let max_into_d2 = (2 * n - 1) / (t + 1);
    for &x in &s1 {
        let k = r.gen_range(2..=max_into_d2.min(d2));
        for &y in d2v.choose_multiple(&mut r, k) {
            g.add_edge(x, y).expect("in range");
        }
        for &y in &s2v {
            if r.gen_bool(0.5) {
                g.add_edge(x, y).expect("in range");
            }
        }
    }

    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut r);
    Case1Instance {
        graph: relabel(&g, &perm),
        edge: Edge::new(perm[0], perm[1]).expect("distinct"),
        t: Rational::integer(t as i64),
        profile,
        g1_parts,
    }
}

/// A graph where every edge has a joint neighbourhood above `5n/12`, with a
/// nonempty independent set of low-degree vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case2Instance {
    pub graph: Graph,
    pub t: Rational,
    /// Vertices of degree below `n/(t+1)`.
    pub starred: Vec<Vertex>,
    /// Vertices of degree in `[n/(t+1), 5n/24)`, inserted last.
    pub inserted: Vec<Vertex>,
}

/// Synthetic instance for the large-neighbourhood case at `t = 11`: a complete
/// multipartite core with parts of size at most two, plus one to three
/// vertices of degree two or three (with private neighbour pairs) and up to
/// three vertices of degree in `[n/12, 5n/24)`.
pub fn case2_synthetic(n: usize, seed: u64) -> Result<Case2Instance, GenerateError> {
    const T: usize = 11;
    if n < 36 {
        return Err(GenerateError::Unsatisfiable(format!("need n >= 36 for t = {T}, got {n}")));
    }
    let mut r = rng(seed);
    let starred = r.gen_range(1..=3);
    let inserted = r.gen_range(0..=3);
    let core = n - starred - inserted;
    let mut g = Graph::new(n);
    let parts = split(&mut r, core, 2);
    let mut part = Vec::with_capacity(core);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    for a in 0..core {
        for b in a + 1..core {
            if part[a] != part[b] {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    let mut pool: Vec<Vertex> = (0..core).collect();
    pool.shuffle(&mut r);
    for (i, x) in (core..core + starred).enumerate() {
        let private = &pool[2 * i..2 * i + 2];
        for &y in private {
            g.add_edge(x, y).expect("in range");
        }
        if r.gen_bool(0.5) {
            let extra = pool[2 * starred..].choose(&mut r).expect("core is large");
            g.add_edge(x, *extra).expect("in range");
        }
    }
    // d ≥ n/(t+1), (t+1)(d+1) > n and 24d < 5n
    let lo = n.div_ceil(T + 1);
    let hi = (5 * n - 1) / 24;
    for x in core + starred..n {
        let d = r.gen_range(lo..=hi);
        for &y in (0..core).collect::<Vec<_>>().choose_multiple(&mut r, d) {
            g.add_edge(x, y).expect("in range");
        }
    }
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut r);
    Ok(Case2Instance {
        graph: relabel(&g, &perm),
        t: Rational::integer(T as i64),
        starred: (core..core + starred).map(|v| perm[v]).collect(),
        inserted: (core + starred..n).map(|v| perm[v]).collect(),
    })
}

/// Generator families selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Complete,
    CompleteMultipartite,
    CompleteSplitJoin,
    Case1Synthetic,
    RandomInClass,
    Random,
}

impl GenKind {
    pub fn name(self) -> &'static str {
        match self {
            GenKind::Complete => "complete",
            GenKind::CompleteMultipartite => "complete_multipartite",
            GenKind::CompleteSplitJoin => "complete_split_join",
            GenKind::Case1Synthetic => "case1_synthetic",
            GenKind::RandomInClass => "random_in_class",
            GenKind::Random => "random",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            GenKind::Complete,
            GenKind::CompleteMultipartite,
            GenKind::CompleteSplitJoin,
            GenKind::Case1Synthetic,
            GenKind::RandomInClass,
            GenKind::Random,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| GenerateError::UnknownKind(s.into()))
    }
}

/// One graph of the family `kind` on `n` vertices with default shape
/// parameters: `p = 1/2` for the random families, parts of size two, and an
/// independent side of `max(1, n/12)` vertices for split joins. The
/// synthetic family picks its profile from the seed and ignores `n`.
pub fn generate(kind: GenKind, n: usize, seed: u64) -> Result<Graph, GenerateError> {
    match kind {
        GenKind::Complete => Ok(complete(n)),
        GenKind::CompleteMultipartite => {
            let mut parts = vec![2; n / 2];
            if n % 2 == 1 {
                parts.push(1);
            }
            complete_multipartite(&parts)
        }
        GenKind::CompleteSplitJoin => {
            let independent = (n / 12).max(1);
            if independent > n {
                return Err(GenerateError::Unsatisfiable("split join needs at least one vertex".into()));
            }
            Ok(complete_split_join(n - independent, independent))
        }
        GenKind::Case1Synthetic => {
            let profile = Case1Profile::ALL[(seed % Case1Profile::ALL.len() as u64) as usize];
            Ok(case1_synthetic(profile, seed).graph)
        }
        GenKind::RandomInClass => random_in_class(n, 0.5, seed),
        GenKind::Random => random(n, 0.5, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{independence, verify_tough, ToughnessVerdict};

    #[test]
    fn named_families() {
        let g = complete_split_join(22, 2);
        assert_eq!(g.n(), 24);
        assert_eq!(g.min_degree(), Some((22, 22)));
        assert!(matches!(verify_tough(&g, &Rational::integer(11), 24), Ok(ToughnessVerdict::Tough)));

        let g = complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(independence(&g, 64).unwrap().len(), 3);
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert_eq!(generate(GenKind::CompleteSplitJoin, 24, 0).unwrap(), complete_split_join(22, 2));
    }

    #[test]
    fn random_in_class_is_free_and_seeded() {
        let g = random_in_class(12, 0.5, 7).unwrap();
        assert!(find_induced(&g, Pattern::TwoP2P1).is_none());
        assert_eq!(g, random_in_class(12, 0.5, 7).unwrap());
        assert_ne!(random(16, 0.5, 1).unwrap(), random(16, 0.5, 2).unwrap());
        assert!(random(5, 1.5, 0).is_err());
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("random_in_class".parse::<GenKind>().unwrap(), GenKind::RandomInClass);
        assert!("sparse".parse::<GenKind>().is_err());
    }

    #[test]
    fn case1_instances_have_the_promised_shape() {
        for (i, &profile) in Case1Profile::ALL.iter().enumerate() {
            for seed in 0..5 {
                let inst = case1_synthetic(profile, 100 * i as u64 + seed);
                let g = &inst.graph;
                let n = g.n();
                let (u, v) = (inst.edge.u, inst.edge.v);
                assert!(g.has_edge(u, v));
                let mut s = g.row(u).union(g.row(v));
                assert!(12 * s.len() <= 5 * n, "{profile:?}");
                s.remove(u);
                s.remove(v);
                assert_eq!(g.component_count(&s), 2);
            }
        }
    }

    #[test]
    fn case2_instances_have_the_promised_shape() {
        for seed in 0..10 {
            let inst = case2_synthetic(48, seed).unwrap();
            let g = &inst.graph;
            for &x in &inst.starred {
                assert!(12 * g.degree(x) < 48 && g.degree(x) >= 2);
            }
            for &x in &inst.inserted {
                assert!(12 * g.degree(x) >= 48 && 24 * g.degree(x) < 5 * 48);
            }
            for e in g.edges() {
                assert!(12 * g.row(e.u).union(g.row(e.v)).len() > 5 * 48);
            }
        }
        assert!(case2_synthetic(20, 0).is_err());
    }
}

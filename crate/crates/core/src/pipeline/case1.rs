//! An edge `uv` whose joint neighbourhood has at most `5n/12` vertices.
//!
//! `S = (N(u) ∪ N(v)) \ {u, v}` splits off `D1 = {u, v}` and one other
//! component `D2`. The low-degree side `G1 = G[S1 ∪ {u, v}]` is covered by
//! paths with ends in `G2 = G[S2 ∪ D2]`; joining each path's ends by a forced
//! edge gives `G2*`, whose Hamilton cycle through the forced edges expands
//! into a Hamilton cycle of `G`.

use super::witness::{edge_avoiding, independent_complement, resolve, Backing, Candidate};
use super::{
    augment, forced_cycle, forced_cycle_condition, internal, metrics_limit, n_over_t1, PipelineError, RunConfig,
    StepResult, Trace,
};
use crate::graph::{Edge, Graph, InducedSubgraph, Vertex, VertexSet};
use crate::ham::{multipartite_ham_path, splice_paths, CycleCert, PathCert};
use crate::matchings::{f_star_matching, StarMatching, StarOutcome};
use crate::metrics::{connectivity, scattering, Scattering};
use crate::rational::Rational;
use crate::recognition::{multipartite_decompose, Multipartition};

/// The sets of one case of the construction, in the ids of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The chosen edge `uv`; `None` for the low-degree case.
    pub edge: Option<Edge>,
    pub s: VertexSet,
    pub s1: VertexSet,
    /// `S \ S1`.
    pub s2: VertexSet,
    pub d1: Option<VertexSet>,
    pub d2: Option<VertexSet>,
    pub g1: Option<InducedSubgraph>,
    pub g2: InducedSubgraph,
}

impl Decomposition {
    pub fn case(&self) -> u8 {
        if self.edge.is_some() {
            1
        } else {
            2
        }
    }

    pub fn g1_vertices(&self, n: usize) -> Option<VertexSet> {
        self.g1.as_ref().map(|h| VertexSet::from_vertices(n, h.labels.iter().copied()))
    }

    pub fn g2_vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.g2.labels.iter().copied())
    }

    /// The set equations of the decomposition, checked against `g`.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        ensure(self.s1.is_disjoint(&self.s2) && self.s1.union(&self.s2) == self.s, "S = S1 ⊎ S2")?;
        ensure(induced_matches(g, &self.g2), "G2 is an induced subgraph")?;
        let v2 = self.g2_vertices(n);
        match self.edge {
            Some(e) => {
                let mut s = g.row(e.u).union(g.row(e.v));
                s.remove(e.u);
                s.remove(e.v);
                ensure(s == self.s, "S = (N(u) ∪ N(v)) \\ {u, v}")?;
                let d1 = VertexSet::from_vertices(n, [e.u, e.v]);
                ensure(self.d1.as_ref() == Some(&d1), "D1 = {u, v}")?;
                let d2 = self.d2.as_ref().ok_or("D2 missing")?;
                ensure(
                    g.components(&self.s) == sorted_pair(d1.clone(), d2.clone()),
                    "G - S has exactly the components D1, D2",
                )?;
                let g1 = self.g1.as_ref().ok_or("G1 missing")?;
                ensure(induced_matches(g, g1), "G1 is an induced subgraph")?;
                let v1 = self.g1_vertices(n).expect("case 1");
                ensure(v1 == self.s1.union(&d1), "V(G1) = S1 ∪ {u, v}")?;
                ensure(v2 == self.s2.union(d2), "V(G2) = S2 ∪ V(D2)")?;
            }
            None => {
                ensure(g.is_independent(&self.s), "S is independent")?;
                ensure(self.s1.is_subset(&self.s), "S1 ⊆ S")?;
                ensure(v2 == self.s.complement(), "G2 = G - S")?;
            }
        }
        Ok(())
    }
}

fn sorted_pair(a: VertexSet, b: VertexSet) -> Vec<VertexSet> {
    if a.first() < b.first() {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

fn induced_matches(g: &Graph, h: &InducedSubgraph) -> bool {
    let set = VertexSet::from_vertices(g.n(), h.labels.iter().copied());
    g.induced(&set).is_ok_and(|ind| ind == *h)
}

/// Vertex-disjoint paths covering `V(G1)`, all ends in `W ⊆ V(G2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCover {
    pub paths: Vec<PathCert>,
    pub endpoints: VertexSet,
}

impl PathCover {
    /// The forced edges: one per path, joining its ends.
    pub fn forced_edges(&self) -> Vec<Edge> {
        self.paths
            .iter()
            .map(|p| {
                let (a, b) = p.ends();
                Edge::new(a, b).expect("path ends are distinct")
            })
            .collect()
    }

    /// Disjoint paths of `g` covering `V(G1)`, ends in `W ⊆ V(G2)`, interior
    /// in `V(G1)`, and exactly `expected` paths.
    pub fn check(&self, g: &Graph, dec: &Decomposition, expected: usize) -> Result<(), String> {
        let n = g.n();
        let v1 = dec.g1_vertices(n).ok_or("not a case-1 decomposition")?;
        let v2 = dec.g2_vertices(n);
        if !self.endpoints.is_subset(&v2) {
            return Err("W is not inside V(G2)".into());
        }
        let mut used = VertexSet::empty(n);
        for p in &self.paths {
            p.check(g)?;
            let (a, b) = p.ends();
            if a == b || !self.endpoints.contains(a) || !self.endpoints.contains(b) {
                return Err(format!("path ends {a}, {b} are not two vertices of W"));
            }
            if let Some(x) = p.internal().iter().find(|&&x| !v1.contains(x)) {
                return Err(format!("interior vertex {x} is outside V(G1)"));
            }
            for &x in &p.order {
                if used.contains(x) {
                    return Err(format!("vertex {x} on two paths"));
                }
                used.insert(x);
            }
        }
        if !v1.is_subset(&used) {
            return Err("V(G1) is not covered".into());
        }
        if self.paths.len() != expected {
            return Err(format!("{} paths, expected {expected}", self.paths.len()));
        }
        Ok(())
    }
}

/// The lexicographically smallest edge minimising `|N(u) ∪ N(v)|` among
/// those with `|N(u) ∪ N(v)| ≤ 5n/12`.
pub fn find_case1_edge(g: &Graph) -> Option<Edge> {
    let n = g.n();
    let mut best: Option<(usize, Edge)> = None;
    for e in g.edges() {
        let k = g.row(e.u).union(g.row(e.v)).len();
        if 12 * k <= 5 * n && best.is_none_or(|(b, _)| k < b) {
            best = Some((k, e));
        }
    }
    best.map(|(_, e)| e)
}

/// Builds `S`, `D1`, `D2`, `S1`, `S2`, `G1`, `G2` for the edge `uv`, checking
/// that `G - S` has exactly two components and that `G1` is complete
/// multipartite.
pub fn case1_decompose(g: &Graph, edge: Edge, cfg: &RunConfig, trace: &mut Trace) -> StepResult<Decomposition> {
    let n = g.n();
    let (u, v) = (edge.u, edge.v);
    if edge.v >= n || !g.has_edge(u, v) {
        return Err(PipelineError::Usage(format!("{u}-{v} is not an edge")).into());
    }
    let joint = g.row(u).union(g.row(v));
    let bound = Rational::ratio(5 * n, 12);
    if Rational::from_usize(joint.len()) > bound {
        return Err(PipelineError::Usage(format!(
            "|N(u) ∪ N(v)| = {} exceeds 5n/12 = {bound}",
            joint.len()
        ))
        .into());
    }
    trace.record(
        "case1",
        vec![("edge", format!("{u} {v}")), ("joint", joint.len().to_string()), ("bound", bound.to_string())],
    );
    let mut s = joint;
    s.remove(u);
    s.remove(v);
    let d1 = VertexSet::from_vertices(n, [u, v]);

    let comps = g.components(&s);
    trace.record("two_components", vec![("components", comps.len().to_string()), ("holds", (comps.len() == 2).to_string())]);
    if comps.len() != 2 {
        let mut cands = Vec::new();
        let others: Vec<&VertexSet> = comps.iter().filter(|c| **c != d1).collect();
        if let Some(q) = others.iter().find(|c| c.len() >= 2) {
            let isolated = others.iter().find(|c| !std::ptr::eq(**c, *q)).and_then(|c| c.first());
            if let (Some((a, b)), Some(y)) = (edge_avoiding(g, q, &[]), isolated) {
                cands.push(Candidate::Forbidden([u, v, a, b, y]));
            }
        }
        cands.push(Candidate::Cutset(s.clone()));
        cands.push(Candidate::Cutset(s.union(&d1)));
        return Err(resolve(g, cfg, trace, "two_components", cands, Backing::Conditional));
    }
    let d2 = comps.into_iter().find(|c| *c != d1).expect("two components");

    let thr = n_over_t1(2, n, &cfg.t);
    let s1 = VertexSet::from_vertices(
        n,
        s.iter().filter(|&x| Rational::from_usize(g.row(x).intersection_len(&d2)) < thr),
    );
    let s2 = s.difference(&s1);
    let v1 = s1.union(&d1);
    let g1 = g.induced(&v1).map_err(|e| internal("case1", e.to_string()))?;
    let g2 = g.induced(&s2.union(&d2)).map_err(|e| internal("case1", e.to_string()))?;
    trace.record(
        "case1_split",
        vec![
            ("threshold", thr.to_string()),
            ("s", s.len().to_string()),
            ("s1", s1.len().to_string()),
            ("s2", s2.len().to_string()),
            ("d2", d2.len().to_string()),
        ],
    );
    trace.record_sets("case1_sets", &[("S", &s), ("S1", &s1), ("S2", &s2), ("D2", &d2)]);

    if let Err(w) = multipartite_decompose(&g1.graph) {
        trace.record("g1_multipartite", vec![("holds", "false".into())]);
        let [x, y, z] = [g1.lift(w.vertices[0]), g1.lift(w.vertices[1]), g1.lift(w.vertices[2])];
        let mut cands = Vec::new();
        if let Some((a, b)) = edge_avoiding(g, &d2, &[x, y, z]) {
            cands.push(Candidate::Forbidden([x, y, a, b, z]));
        } else {
            let mut rest = d2.clone();
            for q in [x, y, z] {
                rest.difference_with(g.row(q));
            }
            cands.push(Candidate::Cutset(independent_complement(g, &rest)));
        }
        return Err(resolve(g, cfg, trace, "g1_multipartite", cands, Backing::Conditional));
    }
    trace.record("g1_multipartite", vec![("holds", "true".into())]);

    Ok(Decomposition { edge: Some(edge), s, s1, s2, d1: Some(d1), d2: Some(d2), g1: Some(g1), g2 })
}

/// `x ∈ xs`, `y ∈ ys`, `x ≠ y`, with distinct neighbours `z`, `w` in `outside`.
fn two_outside_neighbours(
    g: &Graph,
    xs: &VertexSet,
    ys: &VertexSet,
    outside: &VertexSet,
) -> Option<(Vertex, Vertex, Vertex, Vertex)> {
    for x in xs.iter() {
        for z in g.row(x).intersection(outside).iter() {
            for y in ys.iter().filter(|&y| y != x) {
                if let Some(w) = g.row(y).intersection(outside).iter().find(|&w| w != z) {
                    return Some((x, y, z, w));
                }
            }
        }
    }
    None
}

/// Cutsets separating `side` from `outside` when at most one vertex carries
/// all edges between them.
fn cross_cover_candidates(g: &Graph, side: &VertexSet, outside: &VertexSet) -> Vec<Candidate> {
    let cross: Vec<(Vertex, Vertex)> = side
        .iter()
        .flat_map(|a| g.row(a).intersection(outside).iter().map(move |b| (a, b)).collect::<Vec<_>>())
        .collect();
    let n = g.n();
    if cross.is_empty() {
        return vec![Candidate::Cutset(VertexSet::empty(n))];
    }
    let mut out = Vec::new();
    for c in [cross[0].0, cross[0].1] {
        if cross.iter().all(|&(a, b)| a == c || b == c) {
            out.push(Candidate::Cutset(VertexSet::singleton(n, c)));
        }
    }
    out
}

struct Cover<'a> {
    g: &'a Graph,
    g1: &'a InducedSubgraph,
    parts: Multipartition,
}

impl Cover<'_> {
    /// Hamiltonian `(x, y)`-path of `G1` in the ids of `G`.
    fn g1_path(&self, x: Vertex, y: Vertex) -> StepResult<Vec<Vertex>> {
        let (lx, ly) = (self.g1.local(x).expect("in G1"), self.g1.local(y).expect("in G1"));
        multipartite_ham_path(&self.g1.graph, &self.parts, lx, ly)
            .map(|p| self.g1.lift_all(&p.order))
            .ok_or_else(|| internal("path_cover", format!("G1 has no Hamiltonian path from {x} to {y}")))
    }

    fn wrap(z: Vertex, inner: Vec<Vertex>, w: Vertex) -> PathCert {
        let mut order = Vec::with_capacity(inner.len() + 2);
        order.push(z);
        order.extend(inner);
        order.push(w);
        PathCert { order }
    }

    /// `K_{1,2}`-matching of `g` centred exactly at `centers`.
    fn stars(&self, centers: &VertexSet, cfg: &RunConfig, trace: &mut Trace) -> StepResult<StarMatching> {
        match f_star_matching(self.g, centers, &centers.complement(), |_| 2) {
            Ok(StarOutcome::Matched(m)) => Ok(m),
            Ok(StarOutcome::Deficient(d)) => {
                let nbhd = self.g.set_neighborhood(&d.subset).map_err(|e| internal("path_cover", e.to_string()))?;
                Err(resolve(self.g, cfg, trace, "path_cover_matching", vec![Candidate::Cutset(nbhd)], matching_backing(cfg)))
            }
            Err(e) => Err(internal("path_cover", e.to_string())),
        }
    }
}

/// Star-matchings with two leaves per center exist in `t`-tough graphs once `t ≥ 2`.
pub(crate) fn matching_backing(cfg: &RunConfig) -> Backing {
    if cfg.t >= Rational::integer(2) {
        Backing::Proven
    } else {
        Backing::Conditional
    }
}

/// First leaf of `x`'s star lying in `v2`.
fn partner_in(m: &StarMatching, x: Vertex, v2: &VertexSet) -> Option<Vertex> {
    m.star_of(x)?.leaves.iter().copied().find(|&l| v2.contains(l))
}

/// Covers `G1` by `max{1, s(G1)}` paths with both ends in `G2` and interior
/// in `G1`, branching on the scattering number of `G1`.
pub fn build_path_cover(g: &Graph, dec: &Decomposition, cfg: &RunConfig, trace: &mut Trace) -> StepResult<PathCover> {
    let n = g.n();
    let (Some(g1), Some(v1)) = (dec.g1.as_ref(), dec.g1_vertices(n)) else {
        return Err(PipelineError::Usage("path cover needs a case-1 decomposition".into()).into());
    };
    let v2 = dec.g2_vertices(n);
    let parts = multipartite_decompose(&g1.graph)
        .map_err(|_| PipelineError::Usage("G1 is not complete multipartite".into()))?;
    let cover = Cover { g, g1, parts };
    let scat = scattering(&g1.graph, cfg.toughness_cap).map_err(metrics_limit("path_cover"))?;
    let s_value = scat.value();
    let expected = s_value.map_or(1, |s| s.max(1) as usize);

    let (branch, paths) = match &scat {
        Scattering::Finite(set) if set.value >= 0 => {
            let t_set = g1.lift_set(&set.cutset, n);
            let i_set = v1.difference(&t_set);
            if t_set.len() < i_set.len() {
                ("scattered", scattered(&cover, &t_set, &i_set, &v2, cfg, trace)?)
            } else if Rational::from_usize(v1.len()) < cfg.t.mul_usize(2) {
                ("balanced_small", balanced_small(&cover, &t_set, &i_set, &v2, cfg, trace)?)
            } else {
                ("balanced_large", balanced_large(&cover, &t_set, &i_set, &v2, cfg, trace)?)
            }
        }
        _ => {
            let Some((x, y, z, w)) = two_outside_neighbours(g, &v1, &v1, &v2) else {
                let cands = cross_cover_candidates(g, &v1, &v2);
                return Err(resolve(g, cfg, trace, "path_cover", cands, Backing::Conditional));
            };
            ("hamiltonian_connected", vec![Cover::wrap(z, cover.g1_path(x, y)?, w)])
        }
    };
    let mut endpoints = VertexSet::empty(n);
    for p in &paths {
        let (a, b) = p.ends();
        endpoints.insert(a);
        endpoints.insert(b);
    }
    let pc = PathCover { paths, endpoints };
    trace.record(
        "path_cover",
        vec![
            ("branch", branch.into()),
            ("scattering", s_value.map_or("inf".into(), |s| s.to_string())),
            ("paths", pc.paths.len().to_string()),
        ],
    );
    trace.record_sets("path_cover_sets", &[("W", &pc.endpoints)]);
    pc.check(g, dec, expected).map_err(|e| internal("path_cover", e))?;
    Ok(pc)
}

/// `|T| < |I|`: one path alternating between `T` and `|T| + 1` centers, and
/// a three-vertex path for every other star.
fn scattered(
    cover: &Cover,
    t_set: &VertexSet,
    i_set: &VertexSet,
    v2: &VertexSet,
    cfg: &RunConfig,
    trace: &mut Trace,
) -> StepResult<Vec<PathCert>> {
    let m = cover.stars(i_set, cfg, trace)?;
    let star_leaves = |x: Vertex| m.star_of(x).map_or(&[][..], |s| &s.leaves[..]);
    let mut u_star: Vec<Vertex> =
        i_set.iter().filter(|&x| star_leaves(x).iter().any(|&l| t_set.contains(l))).collect();
    for x in i_set.iter() {
        if u_star.len() > t_set.len() {
            break;
        }
        if !u_star.contains(&x) {
            u_star.push(x);
        }
    }
    u_star.sort_unstable();
    let ends: Vec<Vertex> = u_star.iter().copied().filter(|&x| partner_in(&m, x, v2).is_some()).take(2).collect();
    let [x, y] = ends[..] else {
        return Err(internal("path_cover", "fewer than two chosen centers have a partner in G2"));
    };
    let (z, w) = (partner_in(&m, x, v2).expect("checked"), partner_in(&m, y, v2).expect("checked"));
    let middle: Vec<Vertex> = u_star.iter().copied().filter(|&c| c != x && c != y).collect();
    let mut inner = vec![x];
    for (i, tv) in t_set.iter().enumerate() {
        inner.push(tv);
        inner.push(if i < middle.len() { middle[i] } else { y });
    }
    let mut paths = vec![Cover::wrap(z, inner, w)];
    for c in i_set.iter().filter(|c| !u_star.contains(c)) {
        let leaves = star_leaves(c);
        if leaves.len() != 2 || !leaves.iter().all(|&l| v2.contains(l)) {
            return Err(internal("path_cover", format!("star at {c} has a leaf outside G2")));
        }
        paths.push(PathCert { order: vec![leaves[0], c, leaves[1]] });
    }
    Ok(paths)
}

/// `|T| = |I|` and `|V(G1)| < 2t`: every vertex of `G1` has two neighbours in `G2`.
fn balanced_small(
    cover: &Cover,
    t_set: &VertexSet,
    i_set: &VertexSet,
    v2: &VertexSet,
    cfg: &RunConfig,
    trace: &mut Trace,
) -> StepResult<Vec<PathCert>> {
    let Some((x, y, z, w)) = two_outside_neighbours(cover.g, t_set, i_set, v2) else {
        let mut cands = vec![Candidate::Cutset(t_set.clone()), Candidate::Cutset(i_set.clone())];
        cands.extend(cross_cover_candidates(cover.g, &t_set.union(i_set), v2));
        return Err(resolve(cover.g, cfg, trace, "path_cover", cands, Backing::Conditional));
    };
    Ok(vec![Cover::wrap(z, cover.g1_path(x, y)?, w)])
}

/// `|T| = |I|` and `|V(G1)| ≥ 2t`: two centers with partners in `G2`, then a
/// Hamiltonian path of `G1` between them, or from one of them into `T` when
/// `T` is independent.
fn balanced_large(
    cover: &Cover,
    t_set: &VertexSet,
    i_set: &VertexSet,
    v2: &VertexSet,
    cfg: &RunConfig,
    trace: &mut Trace,
) -> StepResult<Vec<PathCert>> {
    let g = cover.g;
    let m = cover.stars(i_set, cfg, trace)?;
    let ends: Vec<Vertex> = i_set.iter().filter(|&x| partner_in(&m, x, v2).is_some()).take(2).collect();
    let chosen = match ends[..] {
        [x, y] => Some((x, y, partner_in(&m, x, v2).expect("checked"), partner_in(&m, y, v2).expect("checked"))),
        // a small I can spend all of T as leaves; any two centers with
        // distinct neighbours in G2 serve as well
        _ => two_outside_neighbours(g, i_set, i_set, v2),
    };
    let Some((x, y, z, w)) = chosen else {
        let cands = cross_cover_candidates(g, i_set, v2);
        return Err(resolve(g, cfg, trace, "path_cover", cands, Backing::Conditional));
    };
    if !g.is_independent(t_set) {
        return Ok(vec![Cover::wrap(z, cover.g1_path(x, y)?, w)]);
    }
    let found = t_set
        .iter()
        .find_map(|xs| g.row(xs).intersection(v2).iter().find(|&zs| zs != z).map(|zs| (xs, zs)));
    let Some((x_star, z_star)) = found else {
        let mut cut = i_set.clone();
        cut.insert(z);
        return Err(resolve(g, cfg, trace, "path_cover", vec![Candidate::Cutset(cut)], Backing::Conditional));
    };
    Ok(vec![Cover::wrap(z, cover.g1_path(x, x_star)?, z_star)])
}

/// Joins each cover path's ends in `G2`, finds a Hamilton cycle of `G2*`
/// through those edges, and splices the paths back in.
pub fn case1_finish(
    g: &Graph,
    dec: &Decomposition,
    cover: &PathCover,
    cfg: &RunConfig,
    trace: &mut Trace,
) -> StepResult<CycleCert> {
    let n = g.n();
    let Some(v1) = dec.g1_vertices(n) else {
        return Err(PipelineError::Usage("finish needs a case-1 decomposition".into()).into());
    };
    let forced = cover.forced_edges();
    let (star, local) = augment(&dec.g2, &forced).map_err(PipelineError::Usage)?;
    let (cond, star_cut, star_alpha) = forced_cycle_condition(&star, forced.len(), cfg, "case1_join")?;
    let kappa_g2 = connectivity(&dec.g2.graph);
    let kappa_bound = n_over_t1(2, n, &cfg.t);
    trace.record(
        "case1_join",
        vec![
            ("kappa", cond.kappa.to_string()),
            ("alpha", cond.alpha.to_string()),
            ("forced", cond.forced.to_string()),
            ("holds", cond.holds().to_string()),
            ("kappa_g2", kappa_g2.value.to_string()),
            ("kappa_g2_bound", kappa_bound.to_string()),
        ],
    );
    if !cond.holds() {
        let mut cands = Vec::new();
        for w in [star_cut, kappa_g2.cutset].into_iter().flatten() {
            cands.push(Candidate::Cutset(v1.union(&dec.g2.lift_set(&w, n))));
        }
        cands.push(Candidate::Cutset(independent_complement(g, &dec.g2.lift_set(&star_alpha, n))));
        return Err(resolve(g, cfg, trace, "case1_join", cands, Backing::Conditional));
    }
    let cycle = forced_cycle(&star, &local, cfg, "case1_join_cycle")?;
    let lifted = CycleCert { order: dec.g2.lift_all(&cycle.order) };
    let full = splice_paths(&lifted, &forced, &cover.paths).map_err(|e| internal("splice", e))?;
    full.check(g).map_err(|e| internal("splice", e))?;
    trace.record("splice", vec![("forced", forced.len().to_string()), ("length", full.order.len().to_string())]);
    Ok(full)
}

//! Star-matchings with prescribed centers.
//!
//! [`f_star_matching`] finds stars `K_{1,f(x)}` centred at every `x` of one
//! side of a bipartite graph, or a subset violating the Hall-type condition
//! `|N(S)| ≥ Σ_{x∈S} f(x)`. [`k1t_matching`] specialises it to `f ≡ ⌊t⌋` on
//! `G[X, V \ X]` and turns a violated condition into a toughness witness.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::metrics::ToughnessWitness;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("center {0} has zero demand")]
    ZeroDemand(Vertex),
    #[error("centers {0} and {1} are adjacent")]
    CentersNotIndependent(Vertex, Vertex),
    #[error("graph is complete")]
    CompleteGraph,
    #[error("toughness {0} is below 1")]
    ToughnessBelowOne(Rational),
    #[error("deficient subset {0:?} did not yield a toughness witness")]
    Unconvertible(VertexSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: Vertex,
    /// Partners of the center, ascending.
    pub leaves: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarMatching {
    /// Ordered by center.
    pub stars: Vec<Star>,
}

impl StarMatching {
    pub fn star_of(&self, center: Vertex) -> Option<&Star> {
        self.stars.iter().find(|s| s.center == center)
    }

    pub fn centers(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.stars.iter().map(|s| s.center))
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        let mut out = VertexSet::empty(n);
        for s in &self.stars {
            out.insert(s.center);
            for &l in &s.leaves {
                out.insert(l);
            }
        }
        out
    }

    /// Star vertex sets are pairwise disjoint and every center-leaf pair is an edge.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = VertexSet::empty(g.n());
        for s in &self.stars {
            for v in std::iter::once(s.center).chain(s.leaves.iter().copied()) {
                if v >= g.n() || used.contains(v) {
                    return false;
                }
                used.insert(v);
            }
            if !s.leaves.iter().all(|&l| g.has_edge(s.center, l)) {
                return false;
            }
        }
        true
    }
}

/// A center subset whose neighbourhood is smaller than its total demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyWitness {
    pub subset: VertexSet,
    pub neighborhood_size: usize,
}

impl DeficiencyWitness {
    pub fn is_valid_for(
        &self,
        h: &Graph,
        leaf_side: &VertexSet,
        demand: impl Fn(Vertex) -> usize,
    ) -> bool {
        let mut nbhd = VertexSet::empty(h.n());
        for x in &self.subset {
            nbhd.union_with(h.row(x));
        }
        nbhd.intersect_with(leaf_side);
        let need: usize = self.subset.iter().map(demand).sum();
        !self.subset.is_empty() && nbhd.len() == self.neighborhood_size && nbhd.len() < need
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarOutcome {
    Matched(StarMatching),
    Deficient(DeficiencyWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K1tOutcome {
    Matched(StarMatching),
    NotTough(ToughnessWitness),
}

/// Stars centred at every vertex of `centers` with exactly `demand(x)` leaves
/// from `leaf_side`; only edges between the two sides are used.
///
/// Each center is split into `demand(x)` unit slots and slots are matched to
/// leaves by augmenting paths, trying leaves in increasing id order. On
/// failure the deficient subset is read off the alternating-reachable part of
/// the final matching.
pub fn f_star_matching(
    h: &Graph,
    centers: &VertexSet,
    leaf_side: &VertexSet,
    demand: impl Fn(Vertex) -> usize,
) -> Result<StarOutcome, MatchingError> {
    h.check_set(centers)?;
    h.check_set(leaf_side)?;
    if let Some(v) = centers.intersection(leaf_side).first() {
        return Err(GraphError::OverlappingSides(v).into());
    }
    let mut slot_owner = Vec::new();
    for x in centers {
        let d = demand(x);
        if d == 0 {
            return Err(MatchingError::ZeroDemand(x));
        }
        slot_owner.extend(std::iter::repeat_n(x, d));
    }
    let options: Vec<Vec<Vertex>> = centers
        .iter()
        .map(|x| h.row(x).intersection(leaf_side).to_vec())
        .collect();
    let center_index: Vec<usize> = {
        let mut idx = vec![usize::MAX; h.n()];
        for (i, x) in centers.iter().enumerate() {
            idx[x] = i;
        }
        idx
    };
    let mut kuhn = Kuhn {
        slot_owner: &slot_owner,
        options: &options,
        center_index: &center_index,
        leaf_slot: vec![None; h.n()],
        slot_leaf: vec![None; slot_owner.len()],
        visited: vec![false; h.n()],
    };
    for slot in 0..slot_owner.len() {
        kuhn.visited.iter_mut().for_each(|v| *v = false);
        kuhn.augment(slot);
    }
    if kuhn.slot_leaf.iter().all(Option::is_some) {
        let mut stars: Vec<Star> = Vec::new();
        for (slot, &x) in slot_owner.iter().enumerate() {
            let leaf = kuhn.slot_leaf[slot].expect("all matched");
            match stars.last_mut() {
                Some(s) if s.center == x => s.leaves.push(leaf),
                _ => stars.push(Star { center: x, leaves: vec![leaf] }),
            }
        }
        for s in &mut stars {
            s.leaves.sort_unstable();
        }
        return Ok(StarOutcome::Matched(StarMatching { stars }));
    }
    Ok(StarOutcome::Deficient(kuhn.deficiency(h.n())))
}

struct Kuhn<'a> {
    slot_owner: &'a [Vertex],
    options: &'a [Vec<Vertex>],
    center_index: &'a [usize],
    leaf_slot: Vec<Option<usize>>,
    slot_leaf: Vec<Option<Vertex>>,
    visited: Vec<bool>,
}

impl Kuhn<'_> {
    fn options_of(&self, slot: usize) -> &[Vertex] {
        &self.options[self.center_index[self.slot_owner[slot]]]
    }

    fn augment(&mut self, slot: usize) -> bool {
        // a free leaf first, so augmenting paths only reshuffle when needed
        if let Some(&y) = self.options_of(slot).iter().find(|&&y| self.leaf_slot[y].is_none()) {
            self.leaf_slot[y] = Some(slot);
            self.slot_leaf[slot] = Some(y);
            return true;
        }
        for i in 0..self.options_of(slot).len() {
            let y = self.options_of(slot)[i];
            if self.visited[y] {
                continue;
            }
            self.visited[y] = true;
            let free = match self.leaf_slot[y] {
                None => true,
                Some(other) => self.augment(other),
            };
            if free {
                self.leaf_slot[y] = Some(slot);
                self.slot_leaf[slot] = Some(y);
                return true;
            }
        }
        false
    }

    /// Centers reachable from unmatched slots by alternating paths. Every
    /// reachable leaf is matched to a reachable slot, and at least one
    /// reachable slot is unmatched, so `|N(Z)| < Σ f(Z)`.
    fn deficiency(&self, n: usize) -> DeficiencyWitness {
        let mut slot_seen = vec![false; self.slot_owner.len()];
        let mut leaf_seen = VertexSet::empty(n);
        let mut stack: Vec<usize> = (0..self.slot_owner.len())
            .filter(|&s| self.slot_leaf[s].is_none())
            .collect();
        for &s in &stack {
            slot_seen[s] = true;
        }
        while let Some(s) = stack.pop() {
            for &y in self.options_of(s) {
                if leaf_seen.contains(y) {
                    continue;
                }
                leaf_seen.insert(y);
                let partner = self.leaf_slot[y].expect("maximum matching leaves no free reachable leaf");
                if !slot_seen[partner] {
                    slot_seen[partner] = true;
                    stack.push(partner);
                }
            }
        }
        let subset = VertexSet::from_vertices(
            n,
            (0..self.slot_owner.len())
                .filter(|&s| slot_seen[s])
                .map(|s| self.slot_owner[s]),
        );
        DeficiencyWitness { subset, neighborhood_size: leaf_seen.len() }
    }
}

/// A `K_{1,⌊t⌋}`-matching whose centers are exactly `centers`, or a cutset
/// showing `g` is not `t`-tough.
///
/// A deficient subset `Z` converts directly: `N(Z)` isolates every vertex of
/// `Z`, and `|N(Z)| < ⌊t⌋·|Z|`.
pub fn k1t_matching(g: &Graph, centers: &VertexSet, t: &Rational) -> Result<K1tOutcome, MatchingError> {
    g.check_set(centers)?;
    let k = t.floor_usize();
    if k == 0 {
        return Err(MatchingError::ToughnessBelowOne(t.clone()));
    }
    if g.is_complete() {
        return Err(MatchingError::CompleteGraph);
    }
    for x in centers {
        if let Some(y) = g.row(x).intersection(centers).first() {
            return Err(MatchingError::CentersNotIndependent(x.min(y), x.max(y)));
        }
    }
    let rest = centers.complement();
    match f_star_matching(g, centers, &rest, |_| k)? {
        StarOutcome::Matched(m) => Ok(K1tOutcome::Matched(m)),
        StarOutcome::Deficient(d) => {
            let direct = ToughnessWitness::from_cutset(g, g.set_neighborhood(&d.subset)?);
            if let Some(w) = direct.filter(|w| w.ratio() < *t) {
                return Ok(K1tOutcome::NotTough(w));
            }
            // a single center adjacent to everything: then n <= k and any
            // non-adjacent pair is separated by the rest of the graph
            let n = g.n();
            let pair = (0..n).find_map(|a| g.row(a).complement().iter().find(|&b| b > a).map(|b| (a, b)));
            if let Some((a, b)) = pair {
                let mut cut = VertexSet::full(n);
                cut.remove(a);
                cut.remove(b);
                if let Some(w) = ToughnessWitness::from_cutset(g, cut).filter(|w| w.ratio() < *t) {
                    return Ok(K1tOutcome::NotTough(w));
                }
            }
            Err(MatchingError::Unconvertible(d.subset))
        }
    }
}

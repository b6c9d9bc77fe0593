//! Exact structural quantities with witnesses: toughness, scattering number,
//! vertex connectivity and independence number.

mod connectivity;
mod independence;
mod toughness;

use thiserror::Error;

pub use connectivity::{connectivity, local_connectivity, Connectivity};
pub use independence::independence;
pub use toughness::{scattering, toughness, verify_tough, Scattering, Toughness, ToughnessVerdict};

use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Default vertex cap for the exponential toughness and scattering solvers.
pub const DEFAULT_TOUGHNESS_CAP: usize = 24;
/// Default vertex cap for the independence branch-and-bound.
pub const DEFAULT_INDEPENDENCE_CAP: usize = 64;
/// Hard ceiling for the mask-based enumerators regardless of configuration.
pub const MAX_ENUMERATION_ORDER: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("{solver}: graph on {n} vertices exceeds the solver cap of {cap}")]
    OracleLimit { solver: &'static str, n: usize, cap: usize },
}

/// A cutset `S` with `c(G - S) ≥ 2`, recorded with its component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToughnessWitness {
    pub cutset: VertexSet,
    pub component_count: usize,
}

impl ToughnessWitness {
    /// Recomputes the component count; `None` when `S` is not a cutset.
    pub fn from_cutset(g: &Graph, cutset: VertexSet) -> Option<ToughnessWitness> {
        let component_count = g.component_count(&cutset);
        (component_count >= 2).then_some(ToughnessWitness { cutset, component_count })
    }

    pub fn ratio(&self) -> Rational {
        Rational::ratio(self.cutset.len(), self.component_count)
    }

    /// The recorded count is exact and `|S| / c(G - S) < t`.
    pub fn is_valid_for(&self, g: &Graph, t: &Rational) -> bool {
        self.cutset.universe() == g.n()
            && self.component_count >= 2
            && g.component_count(&self.cutset) == self.component_count
            && self.ratio() < *t
    }
}

/// A set attaining `c(G - S) - |S| = value` with `c(G - S) ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScatteringSet {
    pub cutset: VertexSet,
    pub value: i64,
}

impl ScatteringSet {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let c = g.component_count(&self.cutset);
        c >= 2 && c as i64 - self.cutset.len() as i64 == self.value
    }
}

pub(crate) fn check_cap(solver: &'static str, n: usize, cap: usize) -> Result<(), MetricsError> {
    if n > cap.min(MAX_ENUMERATION_ORDER) {
        Err(MetricsError::OracleLimit { solver, n, cap: cap.min(MAX_ENUMERATION_ORDER) })
    } else {
        Ok(())
    }
}

/// Components of `G[rest]` over `u64` adjacency masks.
pub(crate) fn count_components(adj: &[u64], mut rest: u64) -> usize {
    let mut count = 0;
    while rest != 0 {
        let seed = rest & rest.wrapping_neg();
        rest ^= seed;
        let mut frontier = seed;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & rest;
            rest ^= fresh;
            frontier |= fresh;
        }
        count += 1;
    }
    count
}

pub(crate) fn masks64(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    g.masks().into_iter().map(|m| m as u64).collect()
}

/// Visits every `k`-subset of `0..n` in increasing mask order (Gosper's hack).
/// The visitor returns `false` to stop early.
pub(crate) fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) -> bool {
    if k > n {
        return true;
    }
    if k == 0 {
        return visit(0);
    }
    let limit: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut s: u64 = (1u64 << k) - 1;
    loop {
        if !visit(s) {
            return false;
        }
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return true;
        }
        let next = (((r ^ s) >> 2) / c) | r;
        if next > limit {
            return true;
        }
        s = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_enumerates_binomial_many() {
        for n in 0..10 {
            for k in 0..=n {
                let mut seen = Vec::new();
                for_each_subset(n, k, |s| {
                    seen.push(s);
                    true
                });
                let expect = (0..1u64 << n).filter(|s| s.count_ones() as usize == k).count();
                assert_eq!(seen.len(), expect, "n={n} k={k}");
                assert!(seen.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn component_counter_matches_graph() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let adj = masks64(&g);
        assert_eq!(count_components(&adj, 0b111111), 3);
        assert_eq!(count_components(&adj, 0b111101), 4);
        assert_eq!(count_components(&adj, 0), 0);
    }
}

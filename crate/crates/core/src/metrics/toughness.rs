use std::cmp::Ordering;

use super::{
    check_cap, count_components, for_each_subset, independence, masks64, MetricsError, ScatteringSet,
    ToughnessWitness, DEFAULT_INDEPENDENCE_CAP,
};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;
use crate::recognition::{multipartite_decompose, Multipartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Toughness {
    /// The graph is complete.
    Infinite,
    Finite { value: Rational, witness: ToughnessWitness },
}

impl Toughness {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Toughness::Infinite => None,
            Toughness::Finite { value, .. } => Some(value),
        }
    }

    pub fn is_at_least(&self, t: &Rational) -> bool {
        self.value().is_none_or(|v| v >= t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToughnessVerdict {
    /// Exhaustively verified: no cutset has ratio below `t`.
    Tough,
    Violated(ToughnessWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scattering {
    /// The graph is complete.
    Infinite,
    Finite(ScatteringSet),
}

impl Scattering {
    pub fn value(&self) -> Option<i64> {
        match self {
            Scattering::Infinite => None,
            Scattering::Finite(s) => Some(s.value),
        }
    }
}

/// Upper bound on `c(G - S)` for any `S`: one vertex per component is independent.
fn component_bound(g: &Graph) -> usize {
    if g.n() <= DEFAULT_INDEPENDENCE_CAP {
        independence(g, DEFAULT_INDEPENDENCE_CAP)
            .map(|s| s.len())
            .unwrap_or(g.n())
    } else {
        g.n()
    }
}

/// Side-union cutsets `V \ P` of a complete multipartite graph, largest parts
/// first: `G - (V \ P)` is `|P|` isolated vertices, and no other cutset does
/// better for either toughness or scattering.
fn best_side_unions(g: &Graph, m: &Multipartition) -> Vec<VertexSet> {
    let max = m.max_part_size();
    let mut sides: Vec<VertexSet> = m
        .parts
        .iter()
        .filter(|p| p.len() == max && max >= 2)
        .map(|p| p.complement())
        .collect();
    sides.sort_by(|a, b| a.cmp_as_mask(b));
    debug_assert!(sides.iter().all(|s| g.component_count(s) == max));
    sides
}

/// Exact toughness. Ties among optimal cutsets go to the smallest mask.
pub fn toughness(g: &Graph, cap: usize) -> Result<Toughness, MetricsError> {
    if g.is_complete() {
        return Ok(Toughness::Infinite);
    }
    let n = g.n();
    if let Ok(m) = multipartite_decompose(g) {
        let cutset = best_side_unions(g, &m).swap_remove(0);
        let witness = ToughnessWitness { component_count: n - cutset.len(), cutset };
        return Ok(Toughness::Finite { value: witness.ratio(), witness });
    }
    check_cap("toughness", n, cap)?;
    let adj = masks64(g);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let cbound = component_bound(g);
    // incumbent ratio best_k / best_c and its mask
    let mut best: Option<(usize, usize, u64)> = None;
    for k in 0..=n.saturating_sub(2) {
        let cmax = cbound.min(n - k);
        if cmax < 2 {
            break;
        }
        if let Some((bk, bc, _)) = best {
            // k / cmax is nondecreasing in k; stop once it exceeds the incumbent
            if k * bc > bk * cmax {
                break;
            }
        }
        for_each_subset(n, k, |s| {
            let c = count_components(&adj, full & !s);
            if c >= 2 {
                let better = match best {
                    None => true,
                    Some((bk, bc, bm)) => match (k * bc).cmp(&(bk * c)) {
                        Ordering::Less => true,
                        Ordering::Equal => s < bm,
                        Ordering::Greater => false,
                    },
                };
                if better {
                    best = Some((k, c, s));
                }
            }
            true
        });
    }
    let (k, c, mask) = best.expect("a noncomplete graph has a cutset");
    let witness = ToughnessWitness {
        cutset: VertexSet::from_mask(n, u128::from(mask)),
        component_count: c,
    };
    Ok(Toughness::Finite { value: Rational::ratio(k, c), witness })
}

/// Decides `τ(G) ≥ t`. Cheap candidate cutsets are tried before the cap is
/// enforced, so a violator can be reported for graphs above the cap.
pub fn verify_tough(g: &Graph, t: &Rational, cap: usize) -> Result<ToughnessVerdict, MetricsError> {
    if g.is_complete() {
        return Ok(ToughnessVerdict::Tough);
    }
    let n = g.n();
    if let Ok(m) = multipartite_decompose(g) {
        let cutset = best_side_unions(g, &m).swap_remove(0);
        let witness = ToughnessWitness { component_count: n - cutset.len(), cutset };
        return Ok(if witness.ratio() < *t {
            ToughnessVerdict::Violated(witness)
        } else {
            ToughnessVerdict::Tough
        });
    }
    if let Some(w) = quick_violator(g, t) {
        return Ok(ToughnessVerdict::Violated(w));
    }
    check_cap("verify_tough", n, cap)?;
    let adj = masks64(g);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let cbound = component_bound(g);
    // a k-set with c components violates iff k < t*c, i.e. k < ceil(t*c)
    let need: Vec<usize> = (0..=n).map(|c| ceil_mul(t, c)).collect();
    let mut found = None;
    for k in 0..=n.saturating_sub(2) {
        let cmax = cbound.min(n - k);
        if cmax < 2 || k >= need[cmax] {
            break;
        }
        let done = !for_each_subset(n, k, |s| {
            let c = count_components(&adj, full & !s);
            if c >= 2 && k < need[c] {
                found = Some(ToughnessWitness {
                    cutset: VertexSet::from_mask(n, u128::from(s)),
                    component_count: c,
                });
                false
            } else {
                true
            }
        });
        if done {
            break;
        }
    }
    Ok(match found {
        Some(w) => ToughnessVerdict::Violated(w),
        None => ToughnessVerdict::Tough,
    })
}

/// `⌈t·c⌉` for nonnegative `t`.
fn ceil_mul(t: &Rational, c: usize) -> usize {
    let x = t.mul_usize(c);
    let f = x.floor_usize();
    if Rational::from_usize(f) == x {
        f
    } else {
        f + 1
    }
}

/// Disconnection, a minimum-degree neighbourhood, or the complement of a
/// maximum independent set.
fn quick_violator(g: &Graph, t: &Rational) -> Option<ToughnessWitness> {
    let n = g.n();
    let mut candidates = vec![VertexSet::empty(n)];
    let mut by_degree: Vec<_> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort();
    candidates.extend(by_degree.iter().take(3).map(|&(_, v)| g.row(v).clone()));
    if n <= DEFAULT_INDEPENDENCE_CAP {
        if let Ok(i) = independence(g, DEFAULT_INDEPENDENCE_CAP) {
            candidates.push(i.complement());
        }
    }
    candidates
        .into_iter()
        .filter_map(|s| ToughnessWitness::from_cutset(g, s))
        .find(|w| w.ratio() < *t)
}

/// Exact scattering number `max{c(G - S) - |S| : c(G - S) ≥ 2}`.
pub fn scattering(g: &Graph, cap: usize) -> Result<Scattering, MetricsError> {
    if g.is_complete() {
        return Ok(Scattering::Infinite);
    }
    let n = g.n();
    if let Ok(m) = multipartite_decompose(g) {
        let cutset = best_side_unions(g, &m).swap_remove(0);
        let value = (n - cutset.len()) as i64 - cutset.len() as i64;
        return Ok(Scattering::Finite(ScatteringSet { cutset, value }));
    }
    check_cap("scattering", n, cap)?;
    let adj = masks64(g);
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let cbound = component_bound(g);
    let mut best: Option<(i64, u64)> = None;
    for k in 0..=n.saturating_sub(2) {
        let cmax = cbound.min(n - k);
        if cmax < 2 {
            break;
        }
        if let Some((bv, _)) = best {
            if (cmax as i64) - (k as i64) < bv {
                break;
            }
        }
        for_each_subset(n, k, |s| {
            let c = count_components(&adj, full & !s);
            if c >= 2 {
                let v = c as i64 - k as i64;
                let better = match best {
                    None => true,
                    Some((bv, bm)) => v > bv || (v == bv && s < bm),
                };
                if better {
                    best = Some((v, s));
                }
            }
            true
        });
    }
    let (value, mask) = best.expect("a noncomplete graph has a cutset");
    Ok(Scattering::Finite(ScatteringSet {
        cutset: VertexSet::from_mask(n, u128::from(mask)),
        value,
    }))
}

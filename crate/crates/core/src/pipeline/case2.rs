//! Every edge has a joint neighbourhood above `5n/12`.
//!
//! The vertices of degree below `5n/24` form an independent set `S`. Those of
//! degree below `n/(t+1)` get two partners each in `G2 = G - S`; the partner
//! pairs become forced edges of `G2*`. A Hamilton cycle of `G2*` through them
//! expands into a cycle missing only `S \ S1`, whose vertices are inserted
//! one at a time.

use super::case1::matching_backing;
use super::witness::{edge_avoiding, independent_complement, resolve, Backing, Candidate};
use super::{
    augment, find_case1_edge, forced_cycle, forced_cycle_condition, internal, limit, n_over_t1, Decomposition,
    PipelineError, RunConfig, StepResult, Trace,
};
use crate::graph::{Edge, Graph, VertexSet};
use crate::ham::{insert_vertices, splice_paths, CycleCert, HamError, PathCert};
use crate::matchings::{f_star_matching, StarOutcome};
use crate::metrics::connectivity;
use crate::rational::Rational;

/// `S`, `S1`, `S \ S1` and `G2 = G - S`. Requires that no edge meets the
/// small-neighbourhood condition.
pub fn case2_decompose(g: &Graph, cfg: &RunConfig, trace: &mut Trace) -> StepResult<Decomposition> {
    let n = g.n();
    if let Some(e) = find_case1_edge(g) {
        return Err(PipelineError::Usage(format!("edge {}-{} has |N(u) ∪ N(v)| <= 5n/12", e.u, e.v)).into());
    }
    let low = Rational::ratio(5 * n, 24);
    let lower = n_over_t1(1, n, &cfg.t);
    let s = VertexSet::from_vertices(n, (0..n).filter(|&v| Rational::from_usize(g.degree(v)) < low));
    let s1 = VertexSet::from_vertices(n, s.iter().filter(|&v| Rational::from_usize(g.degree(v)) < lower));
    let s2 = s.difference(&s1);
    // two adjacent vertices of degree < 5n/24 would have a joint
    // neighbourhood below 5n/12
    if !g.is_independent(&s) {
        return Err(internal("case2", "S is not independent although no edge qualified for case 1"));
    }
    let g2 = g.induced(&s.complement()).map_err(|e| internal("case2", e.to_string()))?;
    trace.record(
        "case2",
        vec![
            ("low_threshold", low.to_string()),
            ("s1_threshold", lower.to_string()),
            ("s", s.len().to_string()),
            ("s1", s1.len().to_string()),
            ("inserted", s2.len().to_string()),
        ],
    );
    trace.record_sets("case2_sets", &[("S", &s), ("S1", &s1)]);
    Ok(Decomposition { edge: None, s, s1, s2, d1: None, d2: None, g1: None, g2 })
}

/// The whole low-degree case: stars, `G2*`, forced cycle, splicing, insertion.
pub fn case2_run(g: &Graph, cfg: &RunConfig, trace: &mut Trace) -> StepResult<CycleCert> {
    let n = g.n();
    let dec = case2_decompose(g, cfg, trace)?;
    let (s, s1) = (&dec.s, &dec.s1);

    let stars = if s1.is_empty() {
        Vec::new()
    } else {
        match f_star_matching(g, s1, &s1.complement(), |_| 2) {
            Ok(StarOutcome::Matched(m)) => m.stars,
            Ok(StarOutcome::Deficient(d)) => {
                let nbhd = g.set_neighborhood(&d.subset).map_err(|e| internal("case2", e.to_string()))?;
                let cands = vec![Candidate::Cutset(nbhd)];
                return Err(resolve(g, cfg, trace, "case2_matching", cands, matching_backing(cfg)));
            }
            Err(e) => return Err(internal("case2", e.to_string())),
        }
    };
    let paths: Vec<PathCert> =
        stars.iter().map(|st| PathCert { order: vec![st.leaves[0], st.center, st.leaves[1]] }).collect();
    let forced: Vec<Edge> =
        stars.iter().map(|st| Edge::new(st.leaves[0], st.leaves[1]).expect("distinct leaves")).collect();

    let (star, local) = augment(&dec.g2, &forced).map_err(|e| internal("case2", e))?;
    let (cond, star_cut, star_alpha) = forced_cycle_condition(&star, forced.len(), cfg, "case2_join")?;
    let kappa_g2 = connectivity(&dec.g2.graph);
    trace.record(
        "case2_join",
        vec![
            ("kappa", cond.kappa.to_string()),
            ("alpha", cond.alpha.to_string()),
            ("forced", cond.forced.to_string()),
            ("holds", cond.holds().to_string()),
            ("kappa_g2", kappa_g2.value.to_string()),
            ("kappa_g2_bound", Rational::from_usize(forced.len()).add(&n_over_t1(1, n, &cfg.t)).to_string()),
        ],
    );
    if !cond.holds() {
        let mut cands = Vec::new();
        for w in [star_cut, kappa_g2.cutset].into_iter().flatten() {
            let comps: Vec<VertexSet> =
                dec.g2.graph.components(&w).iter().map(|c| dec.g2.lift_set(c, n)).collect();
            let big: Vec<&VertexSet> = comps.iter().filter(|c| c.len() >= 2).collect();
            if let [q1, q2, ..] = big[..] {
                for x in s1.iter() {
                    if let (Some((a1, b1)), Some((a2, b2))) = (edge_avoiding(g, q1, &[x]), edge_avoiding(g, q2, &[x])) {
                        cands.push(Candidate::Forbidden([a1, b1, a2, b2, x]));
                        break;
                    }
                }
            }
            cands.push(Candidate::Cutset(s.union(&dec.g2.lift_set(&w, n))));
        }
        cands.push(Candidate::Cutset(independent_complement(g, s)));
        cands.push(Candidate::Cutset(independent_complement(g, &dec.g2.lift_set(&star_alpha, n))));
        return Err(resolve(g, cfg, trace, "case2_join", cands, Backing::Conditional));
    }

    let cycle = forced_cycle(&star, &local, cfg, "case2_join_cycle")?;
    let lifted = CycleCert { order: dec.g2.lift_all(&cycle.order) };
    let partial = splice_paths(&lifted, &forced, &paths).map_err(|e| internal("splice", e))?;
    trace.record("splice", vec![("forced", forced.len().to_string()), ("length", partial.order.len().to_string())]);

    let inserted = insert_vertices(g, partial, &dec.s2, &cfg.t, &cfg.oracle);
    let full = match inserted {
        Ok(ins) => {
            trace.insertion_fallbacks += ins.fallbacks;
            trace.record(
                "insertion",
                vec![("vertices", dec.s2.len().to_string()), ("fallbacks", ins.fallbacks.to_string())],
            );
            ins.cycle
        }
        Err(HamError::InsertionFailed(v)) => {
            trace.record("insertion", vec![("failed_at", v.to_string())]);
            return Err(resolve(g, cfg, trace, "insertion", Vec::new(), Backing::Proven));
        }
        Err(HamError::OracleLimit { detail, .. }) => return Err(limit("insertion", detail)),
        Err(e) => return Err(internal("insertion", e.to_string())),
    };
    full.check(g).map_err(|e| internal("insertion", e))?;
    Ok(full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{case2_synthetic, complete_split_join};
    use crate::pipeline::Stop;

    #[test]
    fn synthetic_instances_get_cycles() {
        let mut inserted_runs = 0;
        for seed in 0..20 {
            let inst = case2_synthetic(48, seed).unwrap();
            let g = &inst.graph;
            let cfg = RunConfig::with_t(inst.t.clone());
            let mut trace = Trace::default();
            let dec = case2_decompose(g, &cfg, &mut trace).unwrap();
            dec.check(g).unwrap();
            assert_eq!(dec.s1.to_vec(), {
                let mut v = inst.starred.clone();
                v.sort_unstable();
                v
            });
            let mut trace = Trace::default();
            let cycle = case2_run(g, &cfg, &mut trace).unwrap_or_else(|e| panic!("seed {seed}: {e:?}"));
            cycle.check(g).unwrap();
            for &x in &inst.starred {
                let k = cycle.order.len();
                let i = cycle.order.iter().position(|&y| y == x).unwrap();
                let (a, b) = (cycle.order[(i + k - 1) % k], cycle.order[(i + 1) % k]);
                assert!(!inst.starred.contains(&a) && !inst.starred.contains(&b));
            }
            if !inst.inserted.is_empty() {
                inserted_runs += 1;
                assert!(trace.find("insertion").is_some());
            }
        }
        assert!(inserted_runs > 0);
    }

    #[test]
    fn split_join_has_no_low_vertices() {
        // every degree is at least 22 > 5 * 24 / 24, so S is empty
        let g = complete_split_join(22, 2);
        let cfg = RunConfig::default();
        // an edge of the clique has a joint neighbourhood of 24 > 10
        assert!(find_case1_edge(&g).is_none());
        let mut trace = Trace::default();
        let dec = case2_decompose(&g, &cfg, &mut trace).unwrap();
        assert!(dec.s.is_empty());
        let cycle = case2_run(&g, &cfg, &mut trace).unwrap();
        cycle.check(&g).unwrap();
        assert_eq!(trace.find("case2_join").unwrap().get("forced"), Some("0"));
    }

    #[test]
    fn case1_graphs_are_rejected() {
        // a path has an edge with a tiny joint neighbourhood
        let g = Graph::from_edges(30, (0..29).map(|i| (i, i + 1))).unwrap();
        let err = case2_decompose(&g, &RunConfig::default(), &mut Trace::default()).unwrap_err();
        assert!(matches!(err, Stop::Failed(PipelineError::Usage(_))));
    }
}

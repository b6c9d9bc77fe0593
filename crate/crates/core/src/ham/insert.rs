use super::{ham_cycle_forced, CycleCert, HamError, HamOutcome, OracleLimits};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Result of [`insert_vertices`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Insertion {
    pub cycle: CycleCert,
    /// Vertices that needed the exhaustive search instead of a direct splice.
    pub fallbacks: usize,
}

/// Absorbs each vertex of `pending` (in increasing order) into `cycle`, a
/// cycle of `g` disjoint from `pending`.
///
/// Each vertex must have more than `n/(t+1) − 1` neighbours on the current
/// cycle. It is placed between the first consecutive pair of cycle vertices
/// it sees both of; when no such pair exists, the cycle through the enlarged
/// vertex set is searched exhaustively.
pub fn insert_vertices(
    g: &Graph,
    cycle: CycleCert,
    pending: &VertexSet,
    t: &Rational,
    limits: &OracleLimits,
) -> Result<Insertion, HamError> {
    let n = g.n();
    g.check_set(pending)?;
    let mut on_cycle = cycle.vertex_set(n);
    if let Some(v) = on_cycle.intersection(pending).first() {
        return Err(HamError::Precondition(format!("vertex {v} is already on the cycle")));
    }
    let t_plus_one = t.add(&Rational::integer(1));
    let mut order = cycle.order;
    let mut fallbacks = 0;
    for v in pending.iter() {
        let found = g.row(v).intersection_len(&on_cycle);
        if t_plus_one.mul_usize(found + 1).cmp_usize(n).is_le() {
            return Err(HamError::InsertionHypothesis { vertex: v, found });
        }
        let k = order.len();
        let slot = (0..k).find(|&i| g.has_edge(v, order[i]) && g.has_edge(v, order[(i + 1) % k]));
        on_cycle.insert(v);
        match slot {
            Some(i) if k >= 2 => order.insert(i + 1, v),
            _ => {
                fallbacks += 1;
                let sub = g.induced(&on_cycle)?;
                match ham_cycle_forced(&sub.graph, &[], limits)? {
                    HamOutcome::Cycle(c) => order = sub.lift_all(&c.order),
                    HamOutcome::Infeasible => return Err(HamError::InsertionFailed(v)),
                }
            }
        }
    }
    Ok(Insertion { cycle: CycleCert { order }, fallbacks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_like_insertion() {
        let mut g = Graph::from_edges(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        for u in [0, 1, 3] {
            g.add_edge(6, u).unwrap();
        }
        let c6 = CycleCert { order: (0..6).collect() };
        let out = insert_vertices(&g, c6, &VertexSet::singleton(7, 6), &Rational::integer(11), &OracleLimits::default())
            .unwrap();
        assert_eq!(out.cycle.order, vec![0, 6, 1, 2, 3, 4, 5]);
        assert_eq!(out.fallbacks, 0);
        assert!(out.cycle.check(&g).is_ok());
    }

    #[test]
    fn hypothesis_is_enforced() {
        // n = 7, t = 1: a vertex needs more than 2.5 neighbours on the cycle
        let mut g = Graph::from_edges(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        g.add_edge(6, 0).unwrap();
        g.add_edge(6, 1).unwrap();
        let c6 = CycleCert { order: (0..6).collect() };
        assert_eq!(
            insert_vertices(&g, c6, &VertexSet::singleton(7, 6), &Rational::integer(1), &OracleLimits::default()),
            Err(HamError::InsertionHypothesis { vertex: 6, found: 2 })
        );
    }

    #[test]
    fn fallback_reorders_cycle() {
        // C6 plus chord 1-5; vertex 6 sees 0, 2, 4 but no consecutive pair
        let mut g = Graph::from_edges(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        g.add_edge(1, 5).unwrap();
        for u in [0, 2, 4] {
            g.add_edge(6, u).unwrap();
        }
        let c6 = CycleCert { order: (0..6).collect() };
        let out = insert_vertices(&g, c6, &VertexSet::singleton(7, 6), &Rational::integer(11), &OracleLimits::default())
            .unwrap();
        assert_eq!(out.fallbacks, 1);
        assert!(out.cycle.check(&g).is_ok());
    }
}

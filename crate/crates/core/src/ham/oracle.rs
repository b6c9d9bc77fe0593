use super::{CycleCert, HamError};
use crate::graph::{mask_iter, Edge, Graph, Vertex};

/// Limits for the exhaustive Hamilton cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest order searched (at most 128).
    pub cap: usize,
    /// Search nodes expanded before giving up.
    pub node_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { cap: 32, node_budget: 20_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamOutcome {
    Cycle(CycleCert),
    /// Exhaustive search found no cycle through the forced edges.
    Infeasible,
}

/// Exhaustive search for a Hamilton cycle containing every edge of `forced`.
///
/// The path grows from vertex 0, trying neighbours in increasing id. A forced
/// edge makes its second endpoint the mandatory successor. Branches are cut
/// when the unvisited vertices are disconnected, when one of them has fewer
/// than two usable neighbours, or when two of them would both need to follow
/// the current end.
pub fn ham_cycle_forced(g: &Graph, forced: &[Edge], limits: &OracleLimits) -> Result<HamOutcome, HamError> {
    let n = g.n();
    let mut partner = vec![None; n];
    for (i, e) in forced.iter().enumerate() {
        if e.v >= n || !g.has_edge(e.u, e.v) {
            return Err(HamError::ForcedNotEdge(*e));
        }
        if let Some(f) = forced[..i].iter().find(|f| !f.is_independent_of(e)) {
            return Err(HamError::ForcedNotIndependent(*f, *e));
        }
        partner[e.u] = Some(e.v);
        partner[e.v] = Some(e.u);
    }
    let cap = limits.cap.min(128);
    if n > cap {
        return Err(HamError::OracleLimit {
            stage: "ham_cycle_forced",
            detail: format!("n = {n} exceeds cap {cap}"),
        });
    }
    if n < 3 {
        return Ok(HamOutcome::Infeasible);
    }
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = Search {
        adj: g.masks(),
        partner,
        full,
        path: vec![0],
        visited: 1,
        nodes: 0,
        budget: limits.node_budget,
    };
    if let Some(p) = search.partner[0] {
        search.path.push(p);
        search.visited |= 1 << p;
    }
    match search.dfs() {
        Some(true) => Ok(HamOutcome::Cycle(CycleCert { order: search.path })),
        Some(false) => Ok(HamOutcome::Infeasible),
        None => Err(HamError::OracleLimit {
            stage: "ham_cycle_forced",
            detail: format!("node budget {} exhausted", limits.node_budget),
        }),
    }
}

struct Search {
    adj: Vec<u128>,
    partner: Vec<Option<Vertex>>,
    full: u128,
    path: Vec<Vertex>,
    visited: u128,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn connected(&self, set: u128) -> bool {
        if set == 0 {
            return true;
        }
        let mut reached = set & set.wrapping_neg();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & set & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == set
    }

    /// `None` when the node budget runs out.
    fn dfs(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let start = self.path[0];
        let head = *self.path.last().expect("nonempty");
        let pred = (self.path.len() >= 2).then(|| self.path[self.path.len() - 2]);
        let unvisited = self.full & !self.visited;
        if unvisited == 0 {
            let closes = self.adj[head] >> start & 1 == 1;
            let forced_ok = self.partner[head].is_none() || self.partner[head] == pred;
            return Some(closes && forced_ok);
        }

        let mut cand = match self.partner[head] {
            Some(p) if Some(p) != pred => {
                if self.visited >> p & 1 == 1 {
                    return Some(false);
                }
                1u128 << p
            }
            _ => self.adj[head] & unvisited,
        };
        if !self.connected(unvisited) || self.adj[start] & unvisited == 0 {
            return Some(false);
        }
        let avail = unvisited | 1 << head | 1 << start;
        let mut must_follow: Option<Vertex> = None;
        for w in mask_iter(unvisited) {
            let options = self.adj[w] & avail;
            let deg = options.count_ones();
            if deg < 2 {
                return Some(false);
            }
            if let Some(p) = self.partner[w] {
                if unvisited >> p & 1 == 0 && p != head {
                    return Some(false);
                }
            }
            if deg == 2 && pred.is_some() && options >> head & 1 == 1 {
                if options >> start & 1 == 1 && unvisited.count_ones() > 1 {
                    return Some(false);
                }
                if must_follow.is_some() {
                    return Some(false);
                }
                must_follow = Some(w);
            }
        }
        if let Some(w) = must_follow {
            cand &= 1 << w;
        }
        for v in mask_iter(cand) {
            self.path.push(v);
            self.visited |= 1 << v;
            match self.dfs() {
                Some(false) => {}
                other => return other,
            }
            self.visited &= !(1 << v);
            self.path.pop();
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn e(a: Vertex, b: Vertex) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let limits = OracleLimits::default();
        let HamOutcome::Cycle(c) = ham_cycle_forced(&cycle(5), &[e(0, 1)], &limits).unwrap() else {
            panic!();
        };
        assert_eq!(c.order, vec![0, 1, 2, 3, 4]);

        let k4 = Graph::complete(4);
        let HamOutcome::Cycle(c) = ham_cycle_forced(&k4, &[e(0, 1), e(2, 3)], &limits).unwrap() else {
            panic!();
        };
        assert!(c.check(&k4).is_ok());
        assert!(c.contains_edge(e(0, 1)) && c.contains_edge(e(2, 3)));
        assert!(c.order == vec![0, 1, 2, 3] || c.order == vec![0, 1, 3, 2]);

        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(ham_cycle_forced(&p4, &[], &limits).unwrap(), HamOutcome::Infeasible);
    }

    #[test]
    fn forced_edge_validation() {
        let k4 = Graph::complete(4);
        let limits = OracleLimits::default();
        assert_eq!(
            ham_cycle_forced(&k4, &[e(0, 1), e(1, 2)], &limits),
            Err(HamError::ForcedNotIndependent(e(0, 1), e(1, 2)))
        );
        let c5 = cycle(5);
        assert_eq!(ham_cycle_forced(&c5, &[e(0, 2)], &limits), Err(HamError::ForcedNotEdge(e(0, 2))));
    }

    #[test]
    fn forced_edges_can_make_it_infeasible() {
        // C4 plus chord 0-2: the chord cannot lie on a Hamilton cycle
        let mut g = cycle(4);
        g.add_edge(0, 2).unwrap();
        assert!(matches!(ham_cycle_forced(&g, &[], &OracleLimits::default()), Ok(HamOutcome::Cycle(_))));
        assert_eq!(
            ham_cycle_forced(&g, &[e(0, 2)], &OracleLimits::default()).unwrap(),
            HamOutcome::Infeasible
        );
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, edges).unwrap();
        assert_eq!(ham_cycle_forced(&g, &[], &OracleLimits::default()).unwrap(), HamOutcome::Infeasible);
    }

    #[test]
    fn limits_are_reported() {
        let g = Graph::complete(40);
        assert!(matches!(
            ham_cycle_forced(&g, &[], &OracleLimits::default()),
            Err(HamError::OracleLimit { .. })
        ));
        let tight = OracleLimits { cap: 64, node_budget: 3 };
        assert!(matches!(ham_cycle_forced(&g, &[], &tight), Err(HamError::OracleLimit { .. })));
        let roomy = OracleLimits { cap: 64, node_budget: 1000 };
        assert!(matches!(ham_cycle_forced(&g, &[], &roomy), Ok(HamOutcome::Cycle(_))));
    }
}

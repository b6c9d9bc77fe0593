use super::MetricsError;
use crate::graph::{mask_iter, Graph, VertexSet};

/// Hard ceiling: the branch-and-bound works on `u128` masks.
const MASK_WIDTH: usize = 128;

/// A maximum independent set, by branch-and-bound over bit masks with a
/// greedy clique-cover bound.
pub fn independence(g: &Graph, cap: usize) -> Result<VertexSet, MetricsError> {
    let n = g.n();
    let cap = cap.min(MASK_WIDTH);
    if n > cap {
        return Err(MetricsError::OracleLimit { solver: "independence", n, cap });
    }
    let adj = g.masks();
    let all: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = Search { adj: &adj, best: 0 };
    search.branch(all, 0);
    Ok(VertexSet::from_mask(n, search.best))
}

struct Search<'a> {
    adj: &'a [u128],
    best: u128,
}

impl Search<'_> {
    fn branch(&mut self, mut cand: u128, mut chosen: u128) {
        // take vertices of degree <= 1 inside the candidates: always safe
        loop {
            let Some(v) = mask_iter(cand).find(|&v| (self.adj[v] & cand).count_ones() <= 1) else {
                break;
            };
            chosen |= 1 << v;
            cand &= !(self.adj[v] | 1 << v);
        }
        if cand == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        let have = chosen.count_ones();
        if have + cand.count_ones() <= self.best.count_ones()
            || have + self.clique_cover_bound(cand) <= self.best.count_ones()
        {
            return;
        }
        let v = mask_iter(cand)
            .max_by_key(|&v| ((self.adj[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        self.branch(cand & !(self.adj[v] | 1 << v), chosen | 1 << v);
        self.branch(cand & !(1 << v), chosen);
    }

    /// Number of cliques in a greedy clique cover of `G[cand]`.
    fn clique_cover_bound(&self, mut cand: u128) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_cand = cand & self.adj[v];
            cand &= !(1 << v);
            while clique_cand != 0 {
                let w = clique_cand.trailing_zeros() as usize;
                cand &= !(1 << w);
                clique_cand &= self.adj[w];
            }
            cliques += 1;
        }
        cliques
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let s = independence(&c5, 64).unwrap();
        assert_eq!(s.len(), 2);
        assert!(c5.is_independent(&s));
        for n in 1..6 {
            assert_eq!(independence(&Graph::complete(n), 64).unwrap().len(), 1);
        }
        assert_eq!(independence(&Graph::new(7), 64).unwrap().len(), 7);
        assert_eq!(independence(&Graph::new(0), 64).unwrap().len(), 0);
        assert!(independence(&Graph::new(70), 64).is_err());
    }

    #[test]
    fn petersen_has_alpha_four() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let g = Graph::from_edges(10, edges).unwrap();
        let s = independence(&g, 64).unwrap();
        assert_eq!(s.len(), 4);
        assert!(g.is_independent(&s));
    }
}

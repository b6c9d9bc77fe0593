//! Naive full-enumeration reference answers for small graphs.
//!
//! Nothing here shares code with the library beyond `Graph::n`,
//! `Graph::has_edge` and exact rationals: every answer is recomputed from the
//! adjacency relation by enumerating subsets, permutations or assignments.

use tough_ham::graph::Graph;
use tough_ham::rational::Rational;

/// Number of components of `g` minus the vertices in `removed` (bit mask).
pub fn components_without(g: &Graph, removed: u32) -> usize {
    let n = g.n();
    let mut seen = removed;
    let mut count = 0;
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        count += 1;
        seen |= 1 << s;
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if seen >> b & 1 == 0 && g.has_edge(a, b) {
                    seen |= 1 << b;
                    stack.push(b);
                }
            }
        }
    }
    count
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    assert!(n <= 20, "naive oracles enumerate all subsets");
    0..1u32 << n
}

fn is_complete(g: &Graph) -> bool {
    (0..g.n()).all(|a| (a + 1..g.n()).all(|b| g.has_edge(a, b)))
}

/// `min |S| / c(G - S)` over all `S` with `c(G - S) ≥ 2`; `None` when no such
/// `S` exists (complete graphs).
pub fn toughness(g: &Graph) -> Option<Rational> {
    subsets(g.n())
        .filter_map(|s| {
            let c = components_without(g, s);
            (c >= 2).then(|| Rational::ratio(s.count_ones() as usize, c))
        })
        .min()
}

/// `max c(G - S) - |S|` over all `S` with `c(G - S) ≥ 2`; `None` for
/// complete graphs.
pub fn scattering(g: &Graph) -> Option<i64> {
    subsets(g.n())
        .filter_map(|s| {
            let c = components_without(g, s);
            (c >= 2).then(|| c as i64 - s.count_ones() as i64)
        })
        .max()
}

/// Fewest vertices whose removal disconnects `g`; `n - 1` for complete graphs.
pub fn connectivity(g: &Graph) -> usize {
    if is_complete(g) {
        return g.n().saturating_sub(1);
    }
    subsets(g.n())
        .filter(|&s| components_without(g, s) >= 2)
        .map(|s| s.count_ones() as usize)
        .min()
        .expect("a noncomplete graph has a separating set")
}

pub fn is_independent(g: &Graph, s: u32) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
    vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn independence(g: &Graph) -> usize {
    subsets(g.n()).filter(|&s| is_independent(g, s)).map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|a| (0..g.n()).filter(|&b| g.has_edge(a, b)).count()).min().unwrap_or(0)
}

/// Held-Karp table: `reach[mask][v]` says some path starting at `start`
/// visits exactly `mask` and ends at `v`.
fn path_table(g: &Graph, start: usize) -> Vec<u32> {
    let n = g.n();
    assert!(n <= 16, "path tables are exponential");
    let mut reach = vec![0u32; 1 << n];
    reach[1 << start] = 1 << start;
    for mask in 0..1usize << n {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        for v in (0..n).filter(|&v| ends >> v & 1 == 1) {
            for w in (0..n).filter(|&w| mask >> w & 1 == 0 && g.has_edge(v, w)) {
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    reach
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let ends = path_table(g, 0)[(1 << n) - 1];
    (1..n).any(|v| ends >> v & 1 == 1 && g.has_edge(v, 0))
}

pub fn has_ham_path(g: &Graph, x: usize, y: usize) -> bool {
    if g.n() == 1 {
        return x == y;
    }
    x != y && path_table(g, x)[(1 << g.n()) - 1] >> y & 1 == 1
}

/// Every pair of distinct vertices is joined by a Hamilton path.
pub fn is_hamiltonian_connected(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|x| {
        let ends = path_table(g, x)[(1 << n) - 1];
        (0..n).filter(|&y| y != x).all(|y| ends >> y & 1 == 1)
    })
}

/// Whether some vertex subset induces a copy of `pattern` (vertices of
/// `pattern` mapped in every order).
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    let mut chosen = Vec::with_capacity(k);
    fn extend(g: &Graph, p: &Graph, chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        if i == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if chosen.contains(&v) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(chosen[j], v) == p.has_edge(j, i)) {
                chosen.push(v);
                if extend(g, p, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    extend(g, pattern, &mut chosen)
}

pub fn path4() -> Graph {
    Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).expect("valid")
}

pub fn two_p2_p1() -> Graph {
    Graph::from_edges(5, [(0, 1), (2, 3)]).expect("valid")
}

/// Whether every center `x` can get `demand[i]` private leaves among its
/// neighbours in `leaves`, by exhaustive assignment.
pub fn b_matching_feasible(g: &Graph, centers: &[usize], leaves: &[usize], demand: &[usize]) -> bool {
    fn assign(g: &Graph, centers: &[usize], leaves: &[usize], demand: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&x, rest)) = centers.split_first() else {
            return true;
        };
        choose(g, x, demand[0], 0, leaves, used, &mut |used| assign(g, rest, leaves, &demand[1..], used))
    }
    fn choose(
        g: &Graph,
        x: usize,
        need: usize,
        from: usize,
        leaves: &[usize],
        used: &mut Vec<bool>,
        next: &mut dyn FnMut(&mut Vec<bool>) -> bool,
    ) -> bool {
        if need == 0 {
            return next(used);
        }
        for i in from..leaves.len() {
            if !used[i] && g.has_edge(x, leaves[i]) {
                used[i] = true;
                if choose(g, x, need - 1, i + 1, leaves, used, next) {
                    used[i] = false;
                    return true;
                }
                used[i] = false;
            }
        }
        false
    }
    assert_eq!(centers.len(), demand.len());
    assign(g, centers, leaves, demand, &mut vec![false; leaves.len()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(toughness(&cycle(6)), Some(Rational::integer(1)));
        assert_eq!(toughness(&Graph::complete(5)), None);
        assert_eq!(toughness(&petersen()), Some(Rational::new(4, 3)));
        assert_eq!(scattering(&cycle(6)), Some(0));
        assert_eq!(connectivity(&petersen()), 3);
        assert_eq!(independence(&petersen()), 4);
        assert!(!is_hamiltonian(&petersen()));
        assert!(is_hamiltonian(&cycle(7)));
        assert!(is_hamiltonian_connected(&Graph::complete(4)));
        assert!(!is_hamiltonian_connected(&cycle(5)));
        assert!(contains_induced(&petersen(), &two_p2_p1()));
        assert!(!contains_induced(&Graph::complete(6), &path4()));
    }

    #[test]
    fn b_matching_examples() {
        let k23 = Graph::from_edges(5, (0..2).flat_map(|a| (2..5).map(move |b| (a, b)))).unwrap();
        assert!(!b_matching_feasible(&k23, &[0, 1], &[2, 3, 4], &[2, 2]));
        assert!(b_matching_feasible(&k23, &[0, 1], &[2, 3, 4], &[2, 1]));
    }
}

use super::PathCert;
use crate::graph::{Graph, Vertex};
use crate::recognition::Multipartition;

/// Whether the complete multipartite graph with parts `m` has a Hamiltonian
/// path from `x` to `y`.
///
/// A part holding `e` of the two ends can fill at most `⌊(N − 1 + e) / 2⌋`
/// positions of an alternating sequence of length `N`, and this is also
/// sufficient.
pub fn multipartite_path_feasible(m: &Multipartition, x: Vertex, y: Vertex) -> bool {
    let n: usize = m.parts.iter().map(|p| p.len()).sum();
    if x == y {
        return n == 1;
    }
    m.parts.iter().all(|p| {
        let ends = usize::from(p.contains(x)) + usize::from(p.contains(y));
        2 * p.len() <= n - 1 + ends
    })
}

/// A Hamiltonian `(x, y)`-path of the complete multipartite graph `g` with
/// parts `m`, or `None` when none exists.
///
/// Built greedily: after `x`, repeatedly take the smallest unused vertex of
/// the part (other than the previous one) with the most vertices still to
/// place, counting `y`, which is reserved for the last position. Ties go to
/// the part with more interior vertices left.
pub fn multipartite_ham_path(g: &Graph, m: &Multipartition, x: Vertex, y: Vertex) -> Option<PathCert> {
    debug_assert!(m.is_valid_for(g));
    if !multipartite_path_feasible(m, x, y) {
        return None;
    }
    if x == y {
        return Some(PathCert { order: vec![x] });
    }
    let part_x = m.part_of(x)?;
    let part_y = m.part_of(y)?;
    let mut pools: Vec<Vec<Vertex>> = m
        .parts
        .iter()
        .map(|p| {
            let mut pool: Vec<Vertex> = p.iter().filter(|&v| v != x && v != y).collect();
            pool.reverse();
            pool
        })
        .collect();
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    order.push(x);
    let mut prev = part_x;
    for _ in 0..n.saturating_sub(2) {
        let left = |q: usize| pools[q].len() + usize::from(q == part_y);
        let q = (0..pools.len())
            .filter(|&q| q != prev && !pools[q].is_empty())
            .max_by_key(|&q| (left(q), pools[q].len(), std::cmp::Reverse(q)))?;
        order.push(pools[q].pop().expect("nonempty pool"));
        prev = q;
    }
    if prev == part_y {
        return None;
    }
    order.push(y);
    let path = PathCert { order };
    debug_assert!(path.check(g).is_ok());
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::recognition::multipartite_decompose;

    fn complete_multipartite(sizes: &[usize]) -> Graph {
        let n = sizes.iter().sum();
        let mut part = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    fn brute_force_path(g: &Graph, x: Vertex, y: Vertex) -> bool {
        fn go(g: &Graph, path: &mut Vec<Vertex>, used: &mut VertexSet, y: Vertex) -> bool {
            let head = *path.last().unwrap();
            if path.len() == g.n() {
                return head == y;
            }
            for v in g.row(head).difference(used).iter() {
                if v == y && path.len() + 1 < g.n() {
                    continue;
                }
                path.push(v);
                used.insert(v);
                if go(g, path, used, y) {
                    return true;
                }
                used.remove(v);
                path.pop();
            }
            false
        }
        if x == y {
            return g.n() == 1;
        }
        let mut used = VertexSet::singleton(g.n(), x);
        go(g, &mut vec![x], &mut used, y)
    }

    #[test]
    fn k_2_2_2_paths() {
        let g = complete_multipartite(&[2, 2, 2]);
        let m = multipartite_decompose(&g).unwrap();
        let p = multipartite_ham_path(&g, &m, 0, 1).unwrap();
        assert!(p.check(&g).is_ok());
        assert_eq!(p.ends(), (0, 1));
        assert_eq!(p.order.len(), 6);
    }

    #[test]
    fn star_has_no_leaf_to_leaf_path() {
        let g = complete_multipartite(&[1, 3]);
        let m = multipartite_decompose(&g).unwrap();
        assert!(multipartite_ham_path(&g, &m, 1, 2).is_none());
        let g = complete_multipartite(&[1, 2]);
        let m = multipartite_decompose(&g).unwrap();
        assert_eq!(multipartite_ham_path(&g, &m, 1, 2).unwrap().order, vec![1, 0, 2]);
    }

    #[test]
    fn greedy_agrees_with_brute_force() {
        let shapes: Vec<Vec<usize>> = vec![
            vec![1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![2, 2],
            vec![3, 3],
            vec![4, 3],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![3, 1, 1],
            vec![4, 1, 1],
            vec![2, 2, 1],
            vec![3, 2, 1],
            vec![4, 2, 1],
            vec![3, 2, 2],
            vec![4, 2, 2],
            vec![2, 2, 2, 2],
            vec![3, 1, 1, 1],
            vec![4, 1, 1, 1, 1],
            vec![5, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1, 1, 1],
        ];
        for sizes in shapes {
            let g = complete_multipartite(&sizes);
            let m = multipartite_decompose(&g).unwrap();
            for x in 0..g.n() {
                for y in 0..g.n() {
                    let expect = brute_force_path(&g, x, y);
                    let got = multipartite_ham_path(&g, &m, x, y);
                    assert_eq!(got.is_some(), expect, "{sizes:?} x={x} y={y}");
                    assert_eq!(multipartite_path_feasible(&m, x, y), expect);
                    if let Some(p) = got {
                        assert!(p.check(&g).is_ok());
                        assert_eq!(p.order.len(), g.n());
                        assert_eq!(p.ends(), (x, y));
                    }
                }
            }
        }
    }
}

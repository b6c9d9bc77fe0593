use super::{CycleCert, HamError};
use crate::graph::{Graph, Vertex, VertexSet};

/// Hamilton cycle of a graph with `n ≥ 3` and `δ ≥ n/2`, by rotation and
/// extension in `O(n²)` adjacency tests. Never searches exhaustively.
pub fn dirac_cycle(g: &Graph) -> Result<CycleCert, HamError> {
    let n = g.n();
    let delta = g.min_degree().map_or(0, |(_, d)| d);
    if n < 3 || 2 * delta < n {
        return Err(HamError::Precondition(format!(
            "rotation-extension needs n >= 3 and 2*delta >= n (n = {n}, delta = {delta})"
        )));
    }
    let mut on_path = VertexSet::singleton(n, 0);
    let mut path: Vec<Vertex> = vec![0];
    loop {
        extend(g, &mut path, &mut on_path);
        path.reverse();
        extend(g, &mut path, &mut on_path);
        let cycle = close(g, &path).ok_or_else(|| {
            HamError::Precondition("no crossing pair on a maximal path".into())
        })?;
        if cycle.len() == n {
            return Ok(CycleCert { order: cycle });
        }
        // open the cycle at a vertex with a neighbour off the cycle
        let (pos, w) = cycle
            .iter()
            .enumerate()
            .find_map(|(i, &c)| g.row(c).difference(&on_path).first().map(|w| (i, w)))
            .ok_or_else(|| HamError::Precondition("graph is disconnected".into()))?;
        let k = cycle.len();
        path = std::iter::once(w).chain((0..k).map(|j| cycle[(pos + j) % k])).collect();
        on_path.insert(w);
    }
}

/// Appends unused neighbours of the last vertex, smallest id first, until stuck.
fn extend(g: &Graph, path: &mut Vec<Vertex>, on_path: &mut VertexSet) {
    while let Some(w) = g.row(*path.last().expect("nonempty")).difference(on_path).first() {
        path.push(w);
        on_path.insert(w);
    }
}

/// Turns a path whose ends have all neighbours on it into a cycle on the same
/// vertices. Picks the crossing pair whose rotated-in neighbour has the
/// smallest id.
fn close(g: &Graph, path: &[Vertex]) -> Option<Vec<Vertex>> {
    let k = path.len();
    let (first, last) = (path[0], path[k - 1]);
    if k >= 3 && g.has_edge(first, last) {
        return Some(path.to_vec());
    }
    let i = (0..k - 1)
        .filter(|&i| g.has_edge(first, path[i + 1]) && g.has_edge(last, path[i]))
        .min_by_key(|&i| path[i + 1])?;
    let mut cycle = path[..=i].to_vec();
    cycle.extend(path[i + 1..].iter().rev());
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_bipartite() {
        let k5 = Graph::complete(5);
        let c = dirac_cycle(&k5).unwrap();
        assert!(c.check(&k5).is_ok());

        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        let c = dirac_cycle(&k33).unwrap();
        assert!(c.check(&k33).is_ok());
    }

    #[test]
    fn rejects_low_degree() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(matches!(dirac_cycle(&c5), Err(HamError::Precondition(_))));
        assert!(dirac_cycle(&Graph::complete(2)).is_err());
    }

    #[test]
    fn large_dense_graph() {
        // circulant with jumps 1..=n/4 on both sides has degree n/2
        let n = 200;
        let mut g = Graph::new(n);
        for v in 0..n {
            for j in 1..=n / 4 {
                g.add_edge(v, (v + j) % n).unwrap();
            }
        }
        let c = dirac_cycle(&g).unwrap();
        assert!(c.check(&g).is_ok());
    }
}

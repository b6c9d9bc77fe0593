use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};

/// `κ(G)` and, for noncomplete graphs, a minimum cutset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub value: usize,
    pub cutset: Option<VertexSet>,
}

/// Unit-vertex-capacity flow network: vertex `v` becomes `in(v) = 2v` and
/// `out(v) = 2v + 1` joined by an arc of capacity one.
struct SplitNetwork {
    to: Vec<usize>,
    cap: Vec<u32>,
    arcs: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, source: Vertex, sink: Vertex) -> SplitNetwork {
        let n = g.n();
        let mut net = SplitNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            arcs: vec![Vec::new(); 2 * n],
        };
        let big = n as u32 + 1;
        for v in 0..n {
            let c = if v == source || v == sink { big } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, c);
        }
        for e in g.edges() {
            net.add_arc(2 * e.u + 1, 2 * e.v, big);
            net.add_arc(2 * e.v + 1, 2 * e.u, big);
        }
        net
    }

    fn add_arc(&mut self, a: usize, b: usize, c: u32) {
        self.arcs[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.arcs[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    /// Breadth-first augmentation; returns whether a path was pushed.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.arcs.len()];
        let mut queue = VecDeque::from([s]);
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &a in &self.arcs[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut y = t;
        while y != s {
            let a = via[y];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            y = self.to[a ^ 1];
        }
        true
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &a in &self.arcs[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

/// Maximum number of internally disjoint `source`–`sink` paths for a
/// non-adjacent pair, capped at `limit`, with a separating set when the cap
/// was not reached.
pub fn local_connectivity(
    g: &Graph,
    source: Vertex,
    sink: Vertex,
    limit: usize,
) -> (usize, Option<VertexSet>) {
    assert!(source != sink && !g.has_edge(source, sink));
    let mut net = SplitNetwork::new(g, source, sink);
    let (s, t) = (2 * source + 1, 2 * sink);
    let mut flow = 0;
    while flow < limit && net.augment(s, t) {
        flow += 1;
    }
    if flow >= limit {
        return (flow, None);
    }
    let seen = net.reachable(s);
    let cut = VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| seen[2 * v] && !seen[2 * v + 1]),
    );
    debug_assert_eq!(cut.len(), flow);
    (flow, Some(cut))
}

/// Vertex connectivity by max-flow over non-adjacent pairs (Even's scheme:
/// some vertex among the first `κ + 1` lies outside any minimum cutset).
pub fn connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    if g.is_complete() {
        return Connectivity { value: n.saturating_sub(1), cutset: None };
    }
    if !g.is_connected() {
        return Connectivity { value: 0, cutset: Some(VertexSet::empty(n)) };
    }
    // a minimum-degree vertex is non-universal in a noncomplete graph
    let (v, d) = g.min_degree().expect("nonempty");
    let mut best = (d, g.row(v).clone());
    let mut i = 0;
    while i < n && i <= best.0 {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let (flow, cut) = local_connectivity(g, i, j, best.0);
            if flow < best.0 {
                best = (flow, cut.expect("cut below limit"));
            }
        }
        i += 1;
    }
    Connectivity { value: best.0, cutset: Some(best.1) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_ab(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        let c = connectivity(&k_ab(3, 3));
        assert_eq!(c.value, 3);
        let cut = c.cutset.unwrap();
        assert_eq!(cut.len(), 3);
        assert!(k_ab(3, 3).component_count(&cut) >= 2);

        let p5 = Graph::from_edges(5, (1..5).map(|i| (i - 1, i))).unwrap();
        let c = connectivity(&p5);
        assert_eq!(c.value, 1);
        assert_eq!(p5.component_count(&c.cutset.unwrap()), 2);

        assert_eq!(connectivity(&Graph::complete(4)), Connectivity { value: 3, cutset: None });
        assert_eq!(connectivity(&Graph::new(3)).value, 0);
    }

    #[test]
    fn local_connectivity_on_cycle() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (flow, cut) = local_connectivity(&c6, 0, 3, 10);
        assert_eq!(flow, 2);
        let cut = cut.unwrap();
        assert!(!cut.contains(0) && !cut.contains(3));
        assert_eq!(c6.component_count(&cut), 2);
    }
}

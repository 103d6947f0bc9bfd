//! Finite simple graphs and the BFS-based metric primitives: distance,
//! girth, diameter, degrees, connectivity.
//!
//! Graphs are undirected and simple (no loops, no parallel edges).
//! Connectivity is *not* part of the type invariant; constructions that
//! promise connected output assert it separately.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sentinel for "not reached" in BFS distance arrays.
pub(crate) const UNREACHED: u32 = u32::MAX;

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted edge list with `u < v`, no duplicates.
    edges: Vec<(usize, usize)>,
    /// Sorted adjacency lists derived from `edges`.
    adj: Vec<Vec<usize>>,
}

/// Girth of a graph: the length of its shortest cycle, or infinite for
/// forests. Rejection sampling legitimately produces forests, so infinity is
/// a value, not an error. `Finite(a) < Finite(b) < Infinite` under `Ord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    /// True when the girth exceeds `len` (always true for forests).
    pub fn exceeds(self, len: usize) -> bool {
        match self {
            Girth::Finite(g) => g > len,
            Girth::Infinite => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl Graph {
    /// Build a graph, validating that endpoints are in range and that there
    /// are no loops or parallel edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut es: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: "endpoint out of range" });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            es.push((u.min(v), u.max(v)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge { u: w[0].0, v: w[0].1, reason: "parallel edge" });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: es, adj })
    }

    /// Cycle graph C_n (n >= 3).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                name: "cycle length",
                reason: format!("{n} < 3"),
            });
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph edges are valid")
    }

    /// Path graph P_n on n vertices (n - 1 edges).
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted list of edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum vertex degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// If every vertex has the same degree, return it.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// BFS distances from `src`; `UNREACHED` marks other components.
    pub(crate) fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == UNREACHED {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graph distance between two vertices, if they are connected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let d = self.bfs_distances(u)[v];
        (d != UNREACHED).then_some(d as usize)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != UNREACHED)
    }

    /// Maximum BFS eccentricity. Errors on disconnected input.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0usize;
        for v in 0..self.n {
            let dist = self.bfs_distances(v);
            for &d in &dist {
                if d == UNREACHED {
                    return Err(Error::Disconnected { component: 0 });
                }
                best = best.max(d as usize);
            }
        }
        Ok(best)
    }

    /// Length of the shortest cycle, or `Girth::Infinite` for forests.
    ///
    /// Per-root BFS: a non-tree edge (u, v) seen while expanding u closes a
    /// closed walk of length dist(u) + dist(v) + 1 through the root; the
    /// minimum over all roots is exactly the girth of a simple graph.
    /// Expansion is pruned at half the best cycle length found so far.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![UNREACHED; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Any cycle through vertices this deep is at least as
                    // long as the best already found.
                    if 2 * (dist[u] as usize) >= b {
                        continue;
                    }
                }
                for &v in &self.adj[u] {
                    if dist[v] == UNREACHED {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        let cycle = dist[u] as usize + dist[v] as usize + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, vec![(0, 3)]),
            Err(Error::InvalidEdge { reason: "endpoint out of range", .. })
        ));
        assert!(matches!(
            Graph::new(3, vec![(1, 1)]),
            Err(Error::InvalidEdge { reason: "self-loop", .. })
        ));
        assert!(matches!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(Error::InvalidEdge { reason: "parallel edge", .. })
        ));
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(Graph::cycle(5).unwrap().girth(), Girth::Finite(5));
        assert_eq!(Graph::complete(4).girth(), Girth::Finite(3));
        assert_eq!(Graph::path(6).girth(), Girth::Infinite);
        assert_eq!(Graph::new(1, vec![]).unwrap().girth(), Girth::Infinite);
    }

    #[test]
    fn diameter_of_small_graphs() {
        assert_eq!(Graph::cycle(6).unwrap().diameter().unwrap(), 3);
        assert_eq!(Graph::complete(4).diameter().unwrap(), 1);
        assert_eq!(Graph::path(5).diameter().unwrap(), 4);
    }

    #[test]
    fn diameter_rejects_disconnected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(g.diameter(), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn max_degree_cases() {
        assert_eq!(Graph::cycle(7).unwrap().max_degree(), 2);
        assert_eq!(Graph::complete(5).max_degree(), 4);
        assert_eq!(Graph::new(3, vec![]).unwrap().max_degree(), 0);
    }

    #[test]
    fn regularity_detection() {
        assert_eq!(Graph::cycle(4).unwrap().regular_degree(), Some(2));
        assert_eq!(Graph::path(3).regular_degree(), None);
    }

    #[test]
    fn girth_ordering() {
        assert!(Girth::Finite(3) < Girth::Finite(9));
        assert!(Girth::Finite(100) < Girth::Infinite);
        assert!(Girth::Infinite.exceeds(usize::MAX - 1));
        assert!(Girth::Finite(5).exceeds(4));
        assert!(!Girth::Finite(5).exceeds(5));
    }
}

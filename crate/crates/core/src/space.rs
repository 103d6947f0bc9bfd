//! Spaces of graphs: ordered sequences of finite connected graphs carrying a
//! coarse-disjoint-union metric.
//!
//! Within a component the metric is graph distance; across components `i != j`
//! it is `spacing[i] + spacing[j]`, which satisfies the triangle inequality as
//! long as each `spacing[i]` is at least the component diameter (both points
//! route through a virtual basepoint). The default spacing is
//! `s_i = i + max_{k <= i} diam(X_k)` with 1-based `i`, which is strictly
//! increasing, so cross-component distances diverge.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHED};

/// A point of a space of graphs: a vertex of one of its components.
/// Component indices are 0-based throughout the API.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    pub component: usize,
    pub vertex: usize,
}

impl Point {
    pub fn new(component: usize, vertex: usize) -> Self {
        Point { component, vertex }
    }
}

/// A coarse disjoint union of finite connected graphs.
#[derive(Debug)]
pub struct SpaceOfGraphs {
    components: Vec<Graph>,
    spacing: Vec<usize>,
    /// Lazily built per-component all-pairs distance matrices (flattened
    /// n*n, row-major). BFS remains the distance method; this just avoids
    /// re-running it for every pair in displacement-heavy code paths.
    dist_cache: Vec<OnceLock<Vec<u32>>>,
}

impl SpaceOfGraphs {
    /// Build a space with the default spacing
    /// `s_i = i + max_{k <= i} diam(X_k)` (1-based `i`).
    /// Every component must be connected.
    pub fn new(components: Vec<Graph>) -> Result<Self> {
        let mut spacing = Vec::with_capacity(components.len());
        let mut max_diam = 0usize;
        for (idx, g) in components.iter().enumerate() {
            if !g.is_connected() {
                return Err(Error::Disconnected { component: idx });
            }
            max_diam = max_diam.max(g.diameter()?);
            spacing.push((idx + 1) + max_diam);
        }
        Ok(Self::assemble(components, spacing))
    }

    /// Build a space with explicit spacing. Used by constructions that carry
    /// their own spacing rule; each entry must still dominate the component
    /// diameter so the metric axioms hold.
    pub(crate) fn with_spacing(components: Vec<Graph>, spacing: Vec<usize>) -> Result<Self> {
        assert_eq!(components.len(), spacing.len());
        for (idx, g) in components.iter().enumerate() {
            if !g.is_connected() {
                return Err(Error::Disconnected { component: idx });
            }
            let diam = g.diameter()?;
            if spacing[idx] < diam {
                return Err(Error::InvalidParameter {
                    name: "spacing",
                    reason: format!("s_{} = {} is below the component diameter {}", idx, spacing[idx], diam),
                });
            }
        }
        Ok(Self::assemble(components, spacing))
    }

    fn assemble(components: Vec<Graph>, spacing: Vec<usize>) -> Self {
        let dist_cache = components.iter().map(|_| OnceLock::new()).collect();
        SpaceOfGraphs { components, spacing, dist_cache }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Graph {
        &self.components[i]
    }

    /// Spacing sequence `s_i` (indexed 0-based, formula 1-based).
    pub fn spacing(&self) -> &[usize] {
        &self.spacing
    }

    pub fn total_points(&self) -> usize {
        self.components.iter().map(Graph::vertex_count).sum()
    }

    /// All points of the space in (component, vertex) order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, g)| (0..g.vertex_count()).map(move |v| Point::new(c, v)))
    }

    pub fn check_point(&self, p: Point) -> Result<()> {
        if p.component < self.components.len()
            && p.vertex < self.components[p.component].vertex_count()
        {
            Ok(())
        } else {
            Err(Error::InvalidPoint { component: p.component, vertex: p.vertex })
        }
    }

    /// Maximum vertex degree over all components.
    pub fn max_degree(&self) -> usize {
        self.components.iter().map(Graph::max_degree).max().unwrap_or(0)
    }

    fn component_distances(&self, c: usize) -> &[u32] {
        self.dist_cache[c].get_or_init(|| {
            let g = &self.components[c];
            let n = g.vertex_count();
            let mut m = vec![0u32; n * n];
            for v in 0..n {
                let row = g.bfs_distances(v);
                m[v * n..(v + 1) * n].copy_from_slice(&row);
            }
            m
        })
    }

    /// Distance between two valid points.
    pub fn distance(&self, p: Point, q: Point) -> Result<usize> {
        self.check_point(p)?;
        self.check_point(q)?;
        Ok(self.distance_unchecked(p, q))
    }

    pub(crate) fn distance_unchecked(&self, p: Point, q: Point) -> usize {
        if p.component == q.component {
            let n = self.components[p.component].vertex_count();
            let d = self.component_distances(p.component)[p.vertex * n + q.vertex];
            debug_assert_ne!(d, UNREACHED, "components are connected by invariant");
            d as usize
        } else {
            self.spacing[p.component] + self.spacing[q.component]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_c4() -> SpaceOfGraphs {
        SpaceOfGraphs::new(vec![Graph::cycle(3).unwrap(), Graph::cycle(4).unwrap()]).unwrap()
    }

    #[test]
    fn default_spacing_formula() {
        // diam(C_3) = 1, diam(C_4) = 2: s_1 = 1 + 1 = 2, s_2 = 2 + 2 = 4.
        assert_eq!(c3_c4().spacing(), &[2, 4]);
        // A later small component does not shrink the running max.
        let s = SpaceOfGraphs::new(vec![
            Graph::cycle(8).unwrap(), // diam 4
            Graph::cycle(3).unwrap(), // diam 1
        ])
        .unwrap();
        assert_eq!(s.spacing(), &[5, 6]);
    }

    #[test]
    fn distance_same_component() {
        let x = c3_c4();
        let p = Point::new(1, 0);
        let q = Point::new(1, 1);
        assert_eq!(x.distance(p, q).unwrap(), 1);
        assert_eq!(x.distance(p, p).unwrap(), 0);
    }

    #[test]
    fn distance_cross_component_is_spacing_sum() {
        let x = c3_c4();
        let p = Point::new(0, 2);
        let q = Point::new(1, 3);
        assert_eq!(x.distance(p, q).unwrap(), 6);
        assert_eq!(x.distance(q, p).unwrap(), 6);
    }

    #[test]
    fn invalid_points_are_rejected() {
        let x = c3_c4();
        assert!(matches!(
            x.distance(Point::new(0, 3), Point::new(1, 0)),
            Err(Error::InvalidPoint { .. })
        ));
        assert!(matches!(
            x.distance(Point::new(2, 0), Point::new(1, 0)),
            Err(Error::InvalidPoint { .. })
        ));
    }

    #[test]
    fn disconnected_component_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            SpaceOfGraphs::new(vec![g]),
            Err(Error::Disconnected { component: 0 })
        ));
    }
}

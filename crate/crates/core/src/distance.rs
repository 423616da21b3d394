//! Hop distances and the invariants derived from them: eccentricity,
//! radius, diameter, status (distance sum), medians and distance shells.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const UNREACHABLE: usize = usize::MAX;

/// Square table of BFS hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    order: usize,
    dist: Vec<usize>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `None` when `v` is unreachable from `u`.
    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let d = self.dist[(u - 1) * self.order + (v - 1)];
        (d != UNREACHABLE).then_some(d)
    }

    /// Distance between vertices of a connected graph.
    #[inline]
    pub(crate) fn hop(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[(u - 1) * self.order + (v - 1)]
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    pub fn eccentricity(&self, u: Vertex) -> Option<usize> {
        (1..=self.order).map(|v| self.get(u, v)).try_fold(0, |acc, d| d.map(|d| acc.max(d)))
    }

    /// Status of `u`: the sum of distances to every vertex.
    pub fn status(&self, u: Vertex) -> Option<usize> {
        (1..=self.order).map(|v| self.get(u, v)).sum()
    }
}

pub fn all_pairs_distances(g: &Graph) -> DistanceTable {
    let n = g.order();
    let rows: Vec<Vec<Option<usize>>> = (1..=n).into_par_iter().map(|s| g.bfs(s)).collect();
    let dist = rows
        .into_iter()
        .flatten()
        .map(|d| d.unwrap_or(UNREACHABLE))
        .collect();
    DistanceTable { order: n, dist }
}

fn connected_table(g: &Graph) -> Result<DistanceTable> {
    let table = all_pairs_distances(g);
    if table.is_connected() {
        Ok(table)
    } else {
        Err(Error::Disconnected(g.name().to_string()))
    }
}

/// `(radius, diameter)` of a connected graph.
pub fn radius_diameter(g: &Graph) -> Result<(usize, usize)> {
    let table = connected_table(g)?;
    Ok(radius_diameter_of(&table))
}

pub(crate) fn radius_diameter_of(table: &DistanceTable) -> (usize, usize) {
    let ecc = (1..=table.order()).map(|u| table.eccentricity(u).unwrap_or(UNREACHABLE));
    ecc.fold((usize::MAX, 0), |(r, d), e| (r.min(e), d.max(e)))
}

/// Status-minimizing vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Medians {
    /// Every vertex attaining the minimum status, in id order.
    pub medians: BTreeSet<Vertex>,
    /// The minimum status.
    pub delta: usize,
}

impl Medians {
    /// Deterministic representative: the smallest median id.
    pub fn smallest(&self) -> Vertex {
        *self.medians.first().expect("a nonempty graph has a median")
    }
}

pub fn status_and_median(g: &Graph) -> Result<Medians> {
    let table = connected_table(g)?;
    Ok(medians_of(&table))
}

pub(crate) fn medians_of(table: &DistanceTable) -> Medians {
    let status: Vec<usize> = (1..=table.order())
        .map(|u| table.status(u).unwrap_or(UNREACHABLE))
        .collect();
    let delta = status.iter().copied().min().unwrap_or(0);
    let medians = status
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s == delta)
        .map(|(i, _)| i + 1)
        .collect();
    Medians { medians, delta }
}

/// Distance shells `N_1(center), N_2(center), ...` of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shells {
    pub center: Vertex,
    // shells[i - 1] = vertices at distance i
    shells: Vec<Vec<Vertex>>,
}

impl Shells {
    /// Vertices at distance `i >= 1`; empty beyond the eccentricity.
    pub fn shell(&self, i: usize) -> &[Vertex] {
        if i == 0 {
            return &[];
        }
        self.shells.get(i - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.shells.iter().map(Vec::len).collect()
    }

    /// Number of nonempty shells, i.e. the eccentricity of the center.
    pub fn depth(&self) -> usize {
        self.shells.len()
    }

    /// `sum_i i * |N_i(center)|`, the status of the center.
    pub fn weighted_sum(&self) -> usize {
        self.shells
            .iter()
            .enumerate()
            .map(|(i, s)| (i + 1) * s.len())
            .sum()
    }
}

pub fn shells(g: &Graph, center: Vertex) -> Result<Shells> {
    g.check_vertex(center)?;
    let dist = g.bfs(center);
    let mut out: Vec<Vec<Vertex>> = Vec::new();
    for (i, d) in dist.iter().enumerate() {
        match d {
            None => return Err(Error::Disconnected(g.name().to_string())),
            Some(0) => {}
            Some(d) => {
                if out.len() < *d {
                    out.resize(*d, Vec::new());
                }
                out[d - 1].push(i + 1);
            }
        }
    }
    Ok(Shells {
        center,
        shells: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn cycle_and_path_distances() {
        let c5 = families::cycle(5).unwrap();
        let t = all_pairs_distances(&c5);
        assert_eq!(t.get(1, 3), Some(2));
        assert_eq!(t.get(1, 4), Some(2));
        let p5 = families::path(5).unwrap();
        assert_eq!(radius_diameter(&p5).unwrap(), (2, 4));
        let m = status_and_median(&p5).unwrap();
        assert_eq!(m.medians, BTreeSet::from([3]));
        assert_eq!(m.delta, 6);
    }

    #[test]
    fn disconnected_pairs_are_unreachable() {
        let g = Graph::new(2, []).unwrap();
        let t = all_pairs_distances(&g);
        assert_eq!(t.get(1, 1), Some(0));
        assert_eq!(t.get(1, 2), None);
        assert!(matches!(radius_diameter(&g), Err(Error::Disconnected(_))));
        assert!(status_and_median(&g).is_err());
        assert!(shells(&g, 1).is_err());
    }

    #[test]
    fn hypertree_root_row() {
        let ht4 = families::hypertree(4).unwrap();
        let t = all_pairs_distances(&ht4);
        assert_eq!(t.eccentricity(1), Some(3));
        assert_eq!(radius_diameter(&ht4).unwrap().0, 3);
        let ht3 = families::hypertree(3).unwrap();
        assert_eq!(shells(&ht3, 1).unwrap().sizes(), vec![2, 4]);
    }

    #[test]
    fn vertex_transitive_circulants() {
        let c = families::circulant(16, &[1, 4]).unwrap();
        let (r, d) = radius_diameter(&c).unwrap();
        assert_eq!(r, d);
        assert_eq!(c.max_degree(), 4);
        assert_eq!(c.universal_vertex(), None);

        // distance from 1 to 1+k in G(8; 1, 2) is ceil(min(k, 8-k) / 2)
        let c8 = families::circulant(8, &[1, 2]).unwrap();
        let t = all_pairs_distances(&c8);
        let oracle: Vec<usize> = (0..8usize).map(|k| k.min(8 - k).div_ceil(2)).collect();
        let row: Vec<usize> = (1..=8).map(|v| t.get(1, v).unwrap()).collect();
        assert_eq!(row, oracle);
        assert_eq!(oracle.iter().sum::<usize>(), 10);
        let m = status_and_median(&c8).unwrap();
        assert_eq!(m.medians.len(), 8);
        assert_eq!(m.delta, 10);
    }

    #[test]
    fn petersen_status() {
        let p = families::generalized_petersen(5, 2).unwrap();
        let m = status_and_median(&p).unwrap();
        assert_eq!(m.medians.len(), 10);
        assert_eq!(m.delta, 3 + 2 * 6);
    }

    #[test]
    fn shells_of_small_graphs() {
        let s5 = families::star(5).unwrap();
        assert_eq!(shells(&s5, 1).unwrap().sizes(), vec![4]);
        let c6 = families::cycle(6).unwrap();
        let sh = shells(&c6, 4).unwrap();
        assert_eq!(sh.sizes(), vec![2, 2, 1]);
        assert_eq!(sh.shell(3), &[1]);
        assert_eq!(sh.shell(0), &[] as &[Vertex]);
        assert!(matches!(shells(&c6, 7), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn wheel_degrees() {
        let w8 = families::wheel(8).unwrap();
        assert_eq!(w8.universal_vertex(), Some(1));
        assert_eq!(w8.max_degree(), 7);
    }
}

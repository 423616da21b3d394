//! Exhaustive optimum of dilation, congestion and wirelength over all
//! vertex bijections of small instances.
//!
//! Bijections are enumerated depth-first, assigning guest vertices `1, 2,
//! ...` to unused host vertices in increasing order, so the first optimal
//! map met is the lexicographically least one. The search is split by the
//! image of guest vertex 1 and run in parallel; the reduce keeps the
//! smallest `(value, vmap)` pair, so the answer does not depend on
//! scheduling.
//!
//! Dilation and wirelength use shortest-path routing, which is optimal for
//! both once the vertex map is fixed. Congestion additionally enumerates
//! every combination of shortest paths per bijection, up to a cap.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceTable};
use crate::embedding::lex_shortest_path;
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMetric {
    Dilation,
    Congestion,
    Wirelength,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest order accepted.
    pub limit: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Branch-and-bound pruning; disabling it evaluates all `n!` maps.
    pub prune: bool,
    /// Largest number of shortest-path combinations tried per bijection in
    /// the congestion search.
    pub routing_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            limit: 9,
            jobs: None,
            prune: true,
            routing_cap: 1 << 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub metric: OracleMetric,
    pub optimum: usize,
    pub witness_vmap: Vec<Vertex>,
    /// Complete bijections evaluated.
    pub search_space: u64,
    /// False when some bijection had more shortest-path combinations than
    /// the cap; the optimum is then only an upper bound.
    pub exact: bool,
    /// True when routes were restricted to shortest paths in a host where
    /// that restriction can matter (congestion on a host with cycles).
    pub shortest_paths_only: bool,
}

fn prepare(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<DistanceTable> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            guest: g.order(),
            host: h.order(),
        });
    }
    if g.order() > config.limit {
        return Err(Error::TooLarge {
            order: g.order(),
            limit: config.limit,
        });
    }
    let dist = all_pairs_distances(h);
    if !dist.is_connected() {
        return Err(Error::Disconnected(h.name().to_string()));
    }
    Ok(dist)
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Guest edges grouped by their later endpoint: `back[g]` holds the
/// neighbours of `g` smaller than `g`.
fn back_edges(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut back = vec![Vec::new(); g.order() + 1];
    for (u, v) in g.edges() {
        back[v].push(u);
    }
    back
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Aggregate {
    Max,
    Sum,
}

struct DistSearch<'a> {
    dist: &'a DistanceTable,
    back: &'a [Vec<Vertex>],
    n: usize,
    agg: Aggregate,
    prune: bool,
    global: &'a AtomicUsize,
    // remaining[g] = guest edges whose later endpoint is > g
    remaining: Vec<usize>,
    vmap: Vec<Vertex>,
    used: Vec<bool>,
    best: TaskBest,
    leaves: u64,
}

impl DistSearch<'_> {
    fn local_best(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.0)
    }

    fn dfs(&mut self, g: Vertex, partial: usize) {
        if g > self.n {
            self.leaves += 1;
            if partial < self.local_best() {
                self.best = Some((partial, self.vmap[1..].to_vec()));
                self.global.fetch_min(partial, Ordering::Relaxed);
            }
            return;
        }
        for h in 1..=self.n {
            if self.used[h] {
                continue;
            }
            let mut value = partial;
            for &p in &self.back[g] {
                let d = self.dist.hop(self.vmap[p], h);
                value = match self.agg {
                    Aggregate::Max => value.max(d),
                    Aggregate::Sum => value + d,
                };
            }
            if self.prune {
                let bound = match self.agg {
                    Aggregate::Max => value,
                    // every edge still to place costs at least 1
                    Aggregate::Sum => value + self.remaining[g],
                };
                if bound >= self.local_best() || bound > self.global.load(Ordering::Relaxed) {
                    continue;
                }
            }
            self.used[h] = true;
            self.vmap[g] = h;
            self.dfs(g + 1, value);
            self.used[h] = false;
        }
    }
}

/// Best `(value, vmap)` found by one task.
type TaskBest = Option<(usize, Vec<Vertex>)>;

fn reduce(results: Vec<(TaskBest, u64)>) -> (usize, Vec<Vertex>, u64) {
    let leaves = results.iter().map(|r| r.1).sum();
    let (value, vmap) = results
        .into_iter()
        .filter_map(|r| r.0)
        .min()
        .unwrap_or((0, Vec::new()));
    (value, vmap, leaves)
}

fn distance_oracle(g: &Graph, h: &Graph, agg: Aggregate, config: &OracleConfig) -> Result<OracleResult> {
    let dist = prepare(g, h, config)?;
    let n = g.order();
    let metric = match agg {
        Aggregate::Max => OracleMetric::Dilation,
        Aggregate::Sum => OracleMetric::Wirelength,
    };
    if n == 0 {
        return Ok(OracleResult {
            metric,
            optimum: 0,
            witness_vmap: Vec::new(),
            search_space: 1,
            exact: true,
            shortest_paths_only: false,
        });
    }
    let back = back_edges(g);
    let mut remaining = vec![0; n + 1];
    for (i, slot) in remaining.iter_mut().enumerate() {
        *slot = back[i + 1..].iter().map(Vec::len).sum();
    }
    let global = AtomicUsize::new(usize::MAX);
    let results = in_pool(config.jobs, || {
        (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut s = DistSearch {
                    dist: &dist,
                    back: &back,
                    n,
                    agg,
                    prune: config.prune,
                    global: &global,
                    remaining: remaining.clone(),
                    vmap: vec![0; n + 1],
                    used: vec![false; n + 1],
                    best: None,
                    leaves: 0,
                };
                s.used[first] = true;
                s.vmap[1] = first;
                s.dfs(2, 0);
                (s.best, s.leaves)
            })
            .collect::<Vec<_>>()
    });
    let (optimum, witness_vmap, search_space) = reduce(results);
    Ok(OracleResult {
        metric,
        optimum,
        witness_vmap,
        search_space,
        exact: true,
        shortest_paths_only: false,
    })
}

/// `min over bijections of max over guest edges of d_H(f(u), f(v))`.
pub fn exact_dilation(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<OracleResult> {
    distance_oracle(g, h, Aggregate::Max, config)
}

/// `min over bijections of sum over guest edges of d_H(f(u), f(v))`.
pub fn exact_wirelength(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<OracleResult> {
    distance_oracle(g, h, Aggregate::Sum, config)
}

/// All shortest paths between host vertex pairs, as host edge indices.
struct PathTable {
    n: usize,
    // paths[(a - 1) * n + (b - 1)] for a < b
    paths: Vec<Vec<Vec<usize>>>,
    edge_count: usize,
}

impl PathTable {
    fn build(h: &Graph, dist: &DistanceTable) -> Self {
        let n = h.order();
        let index: BTreeMap<Edge, usize> = h.edges().enumerate().map(|(i, e)| (e, i)).collect();
        let mut paths = vec![Vec::new(); n * n];
        for a in 1..=n {
            for b in a + 1..=n {
                let mut out = Vec::new();
                let mut stack = vec![a];
                all_shortest(h, dist, &index, b, &mut stack, &mut out);
                paths[(a - 1) * n + (b - 1)] = out;
            }
        }
        PathTable {
            n,
            paths,
            edge_count: index.len(),
        }
    }

    fn get(&self, a: Vertex, b: Vertex) -> &[Vec<usize>] {
        let (a, b) = canonical(a, b);
        &self.paths[(a - 1) * self.n + (b - 1)]
    }
}

fn all_shortest(
    h: &Graph,
    dist: &DistanceTable,
    index: &BTreeMap<Edge, usize>,
    target: Vertex,
    stack: &mut Vec<Vertex>,
    out: &mut Vec<Vec<usize>>,
) {
    let cur = *stack.last().unwrap();
    if cur == target {
        out.push(stack.windows(2).map(|w| index[&canonical(w[0], w[1])]).collect());
        return;
    }
    let d = dist.hop(cur, target);
    for &w in h.neighbors(cur) {
        if dist.hop(w, target) + 1 == d {
            stack.push(w);
            all_shortest(h, dist, index, target, stack, out);
            stack.pop();
        }
    }
}

struct CongestionSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    dist: &'a DistanceTable,
    table: &'a PathTable,
    back: &'a [Vec<Vertex>],
    n: usize,
    prune: bool,
    cap: u64,
    floor: usize,
    global: &'a AtomicUsize,
    vmap: Vec<Vertex>,
    used: Vec<bool>,
    // congestion forced by placed guest edges with a unique shortest path
    forced: Vec<usize>,
    best: TaskBest,
    leaves: u64,
    capped: bool,
}

impl CongestionSearch<'_> {
    fn local_best(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |b| b.0)
    }

    fn done(&self) -> bool {
        self.prune && self.local_best() <= self.floor
    }

    fn dfs(&mut self, g: Vertex) {
        if self.done() {
            return;
        }
        if g > self.n {
            self.leaves += 1;
            let limit = if self.prune {
                self.local_best().min(self.global.load(Ordering::Relaxed).saturating_add(1))
            } else {
                usize::MAX
            };
            if let Some(value) = self.route_leaf(limit) {
                if value < self.local_best() {
                    self.best = Some((value, self.vmap[1..].to_vec()));
                    self.global.fetch_min(value, Ordering::Relaxed);
                }
            }
            return;
        }
        for h in 1..=self.n {
            if self.used[h] {
                continue;
            }
            self.vmap[g] = h;
            let mut touched = Vec::new();
            for &p in &self.back[g] {
                if let [only] = self.table.get(self.vmap[p], h) {
                    for &e in only {
                        self.forced[e] += 1;
                        touched.push(e);
                    }
                }
            }
            let lower = touched.iter().map(|&e| self.forced[e]).max().unwrap_or(0);
            let pruned = self.prune
                && (lower >= self.local_best() || lower > self.global.load(Ordering::Relaxed));
            if !pruned {
                self.used[h] = true;
                self.dfs(g + 1);
                self.used[h] = false;
            }
            for e in touched {
                self.forced[e] -= 1;
            }
            if self.done() {
                return;
            }
        }
    }

    /// Minimum over shortest-path routings of the maximum congestion for
    /// the current complete map, if below `limit`.
    fn route_leaf(&mut self, limit: usize) -> Option<usize> {
        let mut load = vec![0usize; self.table.edge_count];
        let mut choices: Vec<&[Vec<usize>]> = Vec::new();
        let mut combos: u64 = 1;
        for (u, v) in self.g.edges() {
            let options = self.table.get(self.vmap[u], self.vmap[v]);
            if options.len() == 1 {
                for &e in &options[0] {
                    load[e] += 1;
                }
            } else {
                combos = combos.saturating_mul(options.len() as u64);
                choices.push(options);
            }
        }
        if !choices.is_empty() && combos > self.cap {
            // fall back to the deterministic lexicographic routing
            self.capped = true;
            let mut load = vec![0usize; self.table.edge_count];
            let index: BTreeMap<Edge, usize> = self.h.edges().enumerate().map(|(i, e)| (e, i)).collect();
            for (u, v) in self.g.edges() {
                let p = lex_shortest_path(self.h, self.dist, self.vmap[u], self.vmap[v]);
                for w in p.windows(2) {
                    load[index[&canonical(w[0], w[1])]] += 1;
                }
            }
            let value = load.into_iter().max().unwrap_or(0);
            return (value < limit).then_some(value);
        }
        let base = load.iter().copied().max().unwrap_or(0);
        if base >= limit {
            return None;
        }
        choices.sort_by_key(|c| c.len());
        let mut best = limit;
        route_choices(&choices, 0, &mut load, base, &mut best, self.prune);
        (best < limit).then_some(best)
    }
}

fn route_choices(
    choices: &[&[Vec<usize>]],
    i: usize,
    load: &mut [usize],
    current: usize,
    best: &mut usize,
    prune: bool,
) {
    if i == choices.len() {
        *best = (*best).min(current);
        return;
    }
    for path in choices[i] {
        let mut peak = current;
        for &e in path {
            load[e] += 1;
            peak = peak.max(load[e]);
        }
        if !prune || peak < *best {
            route_choices(choices, i + 1, load, peak, best, prune);
        }
        for &e in path {
            load[e] -= 1;
        }
    }
}

/// `min over bijections and shortest-path routings of the maximum host
/// edge congestion`.
pub fn exact_congestion(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<OracleResult> {
    let dist = prepare(g, h, config)?;
    let n = g.order();
    let is_forest = h.size() + 1 == h.order();
    if n == 0 || g.size() == 0 {
        return Ok(OracleResult {
            metric: OracleMetric::Congestion,
            optimum: 0,
            witness_vmap: (1..=n).collect(),
            search_space: 1,
            exact: true,
            shortest_paths_only: false,
        });
    }
    let table = PathTable::build(h, &dist);
    let back = back_edges(g);
    // every embedding of an edge loads some host edge; a universal vertex
    // loads the edges at its image at least ceil((n-1)/max_degree) times
    let floor = match g.universal_vertex() {
        Some(_) => (n - 1).div_ceil(h.max_degree().max(1)).max(1),
        None => 1,
    };
    let global = AtomicUsize::new(usize::MAX);
    let results = in_pool(config.jobs, || {
        (1..=n)
            .into_par_iter()
            .map(|first| {
                let mut s = CongestionSearch {
                    g,
                    h,
                    dist: &dist,
                    table: &table,
                    back: &back,
                    n,
                    prune: config.prune,
                    cap: config.routing_cap,
                    floor,
                    global: &global,
                    vmap: vec![0; n + 1],
                    used: vec![false; n + 1],
                    forced: vec![0; table.edge_count],
                    best: None,
                    leaves: 0,
                    capped: false,
                };
                s.used[first] = true;
                s.vmap[1] = first;
                s.dfs(2);
                (s.best, s.leaves, s.capped)
            })
            .collect::<Vec<_>>()
    });
    let capped = results.iter().any(|r| r.2);
    let (optimum, witness_vmap, search_space) =
        reduce(results.into_iter().map(|(b, l, _)| (b, l)).collect());
    Ok(OracleResult {
        metric: OracleMetric::Congestion,
        optimum,
        witness_vmap,
        search_space,
        exact: !capped,
        shortest_paths_only: !is_forest,
    })
}

pub fn exact(metric: OracleMetric, g: &Graph, h: &Graph, config: &OracleConfig) -> Result<OracleResult> {
    match metric {
        OracleMetric::Dilation => exact_dilation(g, h, config),
        OracleMetric::Congestion => exact_congestion(g, h, config),
        OracleMetric::Wirelength => exact_wirelength(g, h, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{evaluate, route_shortest};
    use crate::families;

    fn unpruned() -> OracleConfig {
        OracleConfig {
            prune: false,
            ..OracleConfig::default()
        }
    }

    #[test]
    fn cycle_into_path() {
        let c4 = families::cycle(4).unwrap();
        let p4 = families::path(4).unwrap();
        let cfg = OracleConfig::default();
        let wl = exact_wirelength(&c4, &p4, &cfg).unwrap();
        assert_eq!(wl.optimum, 6);
        assert_eq!(wl.witness_vmap, vec![1, 2, 3, 4]);
        let ec = exact_congestion(&c4, &p4, &cfg).unwrap();
        assert_eq!(ec.optimum, 2);
        assert!(ec.exact && !ec.shortest_paths_only);
        assert_eq!(exact_wirelength(&c4, &p4, &unpruned()).unwrap().search_space, 24);
    }

    #[test]
    fn star_into_itself() {
        let s4 = families::star(4).unwrap();
        let r = exact_congestion(&s4, &s4, &OracleConfig::default()).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(r.witness_vmap, vec![1, 2, 3, 4]);
    }

    #[test]
    fn star_into_small_hypertree() {
        let s7 = families::star(7).unwrap();
        let ht3 = families::hypertree(3).unwrap();
        let r = exact_dilation(&s7, &ht3, &unpruned()).unwrap();
        assert_eq!(r.optimum, 2);
        assert_eq!(r.search_space, 5040);
    }

    #[test]
    fn windmill_into_circulant() {
        let g = families::windmill(4).unwrap();
        let h = families::circulant(8, &[1, 2]).unwrap();
        let r = exact_congestion(&g, &h, &OracleConfig::default()).unwrap();
        assert_eq!(r.optimum, 2);
        assert!(r.shortest_paths_only);
    }

    #[test]
    fn witness_attains_optimum() {
        let g = families::wheel(7).unwrap();
        let h = families::circulant(7, &[1, 2]).unwrap();
        let r = exact_wirelength(&g, &h, &OracleConfig::default()).unwrap();
        let emb = route_shortest(&g, &h, r.witness_vmap.clone()).unwrap();
        assert_eq!(evaluate(&emb).wirelength, r.optimum);
        let d = exact_dilation(&g, &h, &OracleConfig::default()).unwrap();
        let emb = route_shortest(&g, &h, d.witness_vmap.clone()).unwrap();
        assert_eq!(evaluate(&emb).max_dilation, d.optimum);
    }

    #[test]
    fn limits_and_mismatches() {
        let g = families::wheel(10).unwrap();
        let h = families::generalized_petersen(5, 2).unwrap();
        assert!(matches!(
            exact_wirelength(&g, &h, &OracleConfig::default()),
            Err(Error::TooLarge { order: 10, limit: 9 })
        ));
        let c4 = families::cycle(4).unwrap();
        assert!(matches!(
            exact_dilation(&c4, &families::cycle(5).unwrap(), &OracleConfig::default()),
            Err(Error::OrderMismatch { .. })
        ));
        let disc = Graph::new(4, [(1, 2)]).unwrap();
        assert!(exact_dilation(&c4, &disc, &OracleConfig::default()).is_err());
    }

    #[test]
    fn tiny_routing_cap_flags_inexact() {
        let g = families::complete(5).unwrap();
        let h = families::cycle(5).unwrap();
        let cfg = OracleConfig {
            routing_cap: 0,
            ..OracleConfig::default()
        };
        // C_5 has unique shortest paths, so the cap is never exceeded
        assert!(exact_congestion(&g, &h, &cfg).unwrap().exact);
        let h = families::cycle(4).unwrap();
        let g = families::complete(4).unwrap();
        assert!(!exact_congestion(&g, &h, &cfg).unwrap().exact);
    }

    #[test]
    fn jobs_do_not_change_results() {
        let g = families::fan(7).unwrap();
        let h = families::hypertree(3).unwrap();
        let one = OracleConfig {
            jobs: Some(1),
            ..OracleConfig::default()
        };
        let many = OracleConfig {
            jobs: Some(4),
            ..OracleConfig::default()
        };
        for m in [OracleMetric::Dilation, OracleMetric::Congestion, OracleMetric::Wirelength] {
            let a = exact(m, &g, &h, &one).unwrap();
            let b = exact(m, &g, &h, &many).unwrap();
            assert_eq!((a.optimum, &a.witness_vmap), (b.optimum, &b.witness_vmap));
        }
    }
}

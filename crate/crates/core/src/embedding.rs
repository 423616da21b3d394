//! Embeddings of a guest graph into a host graph of the same order, their
//! cost metrics, and the constructive embeddings for wheel-like guests.
//!
//! An [`EmbeddingMap`] pairs a vertex bijection with an explicit host path
//! for every guest edge. Paths are stored rather than recomputed, so
//! congestion is well defined for routings that are not shortest paths
//! (the windmill construction uses such routes on purpose).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::distance::{all_pairs_distances, medians_of, DistanceTable};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::{canonical, Edge, Graph, Vertex};
use crate::hamiltonian::{self, Budget, Search};

/// Vertex bijection plus one host path per guest edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    guest: Graph,
    host: Graph,
    vmap: Vec<Vertex>,
    // guest edge (u < v) -> host path from vmap(u) to vmap(v)
    routes: BTreeMap<Edge, Vec<Vertex>>,
}

fn check_bijection(guest: &Graph, host: &Graph, vmap: &[Vertex]) -> Result<()> {
    if guest.order() != host.order() {
        return Err(Error::OrderMismatch {
            guest: guest.order(),
            host: host.order(),
        });
    }
    if vmap.len() != guest.order() {
        return Err(Error::NotBijective(format!(
            "{} images for {} guest vertices",
            vmap.len(),
            guest.order()
        )));
    }
    let mut seen = vec![false; host.order() + 1];
    for (i, &h) in vmap.iter().enumerate() {
        if !host.contains(h) {
            return Err(Error::NotBijective(format!(
                "image {h} of guest vertex {} is not a host vertex",
                i + 1
            )));
        }
        if std::mem::replace(&mut seen[h], true) {
            return Err(Error::NotBijective(format!("host vertex {h} is hit twice")));
        }
    }
    Ok(())
}

impl EmbeddingMap {
    /// Validates and assembles an embedding. Each route must run between
    /// the images of its guest edge (either orientation is accepted and
    /// normalized), follow host edges, and repeat no vertex.
    pub fn new(
        guest: Graph,
        host: Graph,
        vmap: Vec<Vertex>,
        routes: BTreeMap<Edge, Vec<Vertex>>,
    ) -> Result<Self> {
        check_bijection(&guest, &host, &vmap)?;
        let mut normalized = BTreeMap::new();
        for (u, v) in guest.edges() {
            let bad = |reason: &str| Error::InvalidRoute {
                u,
                v,
                reason: reason.to_string(),
            };
            let mut path = routes.get(&(u, v)).cloned().ok_or_else(|| bad("missing"))?;
            let (a, b) = (vmap[u - 1], vmap[v - 1]);
            if path.first() == Some(&b) && path.last() == Some(&a) {
                path.reverse();
            }
            if path.first() != Some(&a) || path.last() != Some(&b) {
                return Err(bad(&format!("does not join images {a} and {b}")));
            }
            if let Some(w) = path.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
                return Err(bad(&format!("({}, {}) is not a host edge", w[0], w[1])));
            }
            let distinct: BTreeSet<_> = path.iter().collect();
            if distinct.len() != path.len() {
                return Err(bad("repeats a vertex"));
            }
            normalized.insert((u, v), path);
        }
        if let Some(extra) = routes.keys().find(|e| !normalized.contains_key(e)) {
            return Err(Error::InvalidRoute {
                u: extra.0,
                v: extra.1,
                reason: "not a guest edge".into(),
            });
        }
        Ok(EmbeddingMap {
            guest,
            host,
            vmap,
            routes: normalized,
        })
    }

    pub fn guest(&self) -> &Graph {
        &self.guest
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Image of guest vertex `g`.
    pub fn image(&self, g: Vertex) -> Vertex {
        self.vmap[g - 1]
    }

    pub fn vmap(&self) -> &[Vertex] {
        &self.vmap
    }

    /// Host path of guest edge `(u, v)` (any orientation), oriented from
    /// the image of `min(u, v)`.
    pub fn route(&self, u: Vertex, v: Vertex) -> Option<&[Vertex]> {
        self.routes.get(&canonical(u, v)).map(Vec::as_slice)
    }

    pub fn routes(&self) -> &BTreeMap<Edge, Vec<Vertex>> {
        &self.routes
    }

    /// `{"vmap": [...], "routes": {"u-v": [...]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let record = EmbeddingRecord {
            vmap: self.vmap.clone(),
            routes: self
                .routes
                .iter()
                .map(|(&(u, v), p)| (format!("{u}-{v}"), p.clone()))
                .collect(),
        };
        serde_json::to_value(record).expect("embedding serialization cannot fail")
    }

    pub fn from_json(guest: Graph, host: Graph, text: &str) -> Result<Self> {
        let record: EmbeddingRecord = serde_json::from_str(text)
            .map_err(|e| Error::param("embedding", e.to_string()))?;
        let mut routes = BTreeMap::new();
        for (key, path) in record.routes {
            let parsed = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            let (u, v): (Vertex, Vertex) = parsed
                .ok_or_else(|| Error::param("embedding", format!("bad route key `{key}`")))?;
            routes.insert(canonical(u, v), path);
        }
        EmbeddingMap::new(guest, host, record.vmap, routes)
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddingRecord {
    vmap: Vec<Vertex>,
    routes: BTreeMap<String, Vec<Vertex>>,
}

/// Lexicographically smallest shortest path from `s` to `t`.
pub(crate) fn lex_shortest_path(host: &Graph, dist: &DistanceTable, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mut path = vec![s];
    let mut cur = s;
    while cur != t {
        let d = dist.hop(cur, t);
        cur = *host
            .neighbors(cur)
            .iter()
            .find(|&&w| dist.hop(w, t) + 1 == d)
            .expect("a connected host has a next hop");
        path.push(cur);
    }
    path
}

fn connected_distances(host: &Graph) -> Result<DistanceTable> {
    let dist = all_pairs_distances(host);
    if !dist.is_connected() {
        return Err(Error::Disconnected(host.name().to_string()));
    }
    Ok(dist)
}

/// Routes every guest edge along the lexicographically smallest shortest
/// host path between its images.
pub fn route_shortest(guest: &Graph, host: &Graph, vmap: Vec<Vertex>) -> Result<EmbeddingMap> {
    check_bijection(guest, host, &vmap)?;
    let dist = connected_distances(host)?;
    Ok(route_shortest_with(guest, host, vmap, &dist))
}

pub(crate) fn route_shortest_with(
    guest: &Graph,
    host: &Graph,
    vmap: Vec<Vertex>,
    dist: &DistanceTable,
) -> EmbeddingMap {
    let routes = guest
        .edges()
        .map(|(u, v)| ((u, v), lex_shortest_path(host, dist, vmap[u - 1], vmap[v - 1])))
        .collect();
    EmbeddingMap {
        guest: guest.clone(),
        host: host.clone(),
        vmap,
        routes,
    }
}

/// Identity vertex map with shortest-path routing.
pub fn embed_identity(guest: &Graph, host: &Graph) -> Result<EmbeddingMap> {
    route_shortest(guest, host, (1..=guest.order()).collect())
}

/// A uniformly random bijection with shortest-path routing.
pub fn embed_random<R: Rng + ?Sized>(guest: &Graph, host: &Graph, rng: &mut R) -> Result<EmbeddingMap> {
    let mut vmap: Vec<Vertex> = (1..=host.order()).collect();
    vmap.shuffle(rng);
    route_shortest(guest, host, vmap)
}

/// Per-edge dilation and congestion together with their aggregates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingMetrics {
    /// Route length of each guest edge.
    pub dilation: BTreeMap<Edge, usize>,
    /// Number of routes through each host edge (every host edge present).
    pub congestion: BTreeMap<Edge, usize>,
    pub max_dilation: usize,
    pub max_congestion: usize,
    pub wirelength: usize,
}

impl EmbeddingMetrics {
    pub fn dilation_sum(&self) -> usize {
        self.dilation.values().sum()
    }

    pub fn congestion_sum(&self) -> usize {
        self.congestion.values().sum()
    }

    /// Host edges carrying the maximum congestion.
    pub fn most_congested(&self) -> BTreeSet<Edge> {
        self.congestion
            .iter()
            .filter(|&(_, &c)| c == self.max_congestion)
            .map(|(&e, _)| e)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let keyed = |m: &BTreeMap<Edge, usize>| -> BTreeMap<String, usize> {
            m.iter().map(|(&(u, v), &x)| (format!("{u}-{v}"), x)).collect()
        };
        serde_json::json!({
            "max_dilation": self.max_dilation,
            "max_congestion": self.max_congestion,
            "wirelength": self.wirelength,
            "dilation": keyed(&self.dilation),
            "congestion": keyed(&self.congestion),
        })
    }
}

pub fn evaluate(emb: &EmbeddingMap) -> EmbeddingMetrics {
    let mut congestion: BTreeMap<Edge, usize> = emb.host.edges().map(|e| (e, 0)).collect();
    let mut dilation = BTreeMap::new();
    for (&e, path) in &emb.routes {
        dilation.insert(e, path.len() - 1);
        for w in path.windows(2) {
            *congestion
                .get_mut(&canonical(w[0], w[1]))
                .expect("routes follow host edges") += 1;
        }
    }
    let wirelength = dilation.values().sum();
    EmbeddingMetrics {
        max_dilation: dilation.values().copied().max().unwrap_or(0),
        max_congestion: congestion.values().copied().max().unwrap_or(0),
        wirelength,
        dilation,
        congestion,
    }
}

/// `|V(host)| / |V(guest)|`.
pub fn expansion(emb: &EmbeddingMap) -> Ratio<usize> {
    Ratio::new(emb.host.order(), emb.guest.order())
}

/// Guests with a hub adjacent to every other vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WheelLike {
    Wheel,
    Fan,
    Friendship,
    Star,
}

impl WheelLike {
    pub const ALL: [WheelLike; 4] = [
        WheelLike::Wheel,
        WheelLike::Fan,
        WheelLike::Friendship,
        WheelLike::Star,
    ];

    /// The guest of this kind with `n` vertices.
    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            WheelLike::Wheel => families::wheel(n),
            WheelLike::Fan => families::fan(n),
            WheelLike::Friendship if n % 2 == 1 => families::friendship((n - 1) / 2),
            WheelLike::Friendship => Err(Error::param("friendship", format!("even order {n}"))),
            WheelLike::Star => families::star(n),
        }
    }
}

impl fmt::Display for WheelLike {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WheelLike::Wheel => "wheel",
            WheelLike::Fan => "fan",
            WheelLike::Friendship => "friendship",
            WheelLike::Star => "star",
        })
    }
}

impl FromStr for WheelLike {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        WheelLike::ALL
            .into_iter()
            .find(|k| k.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Unknown {
                what: "guest kind",
                name: s.into(),
            })
    }
}

/// Tree-based hosts built on the complete binary tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeHost {
    Hypertree,
    SiblingTree,
    XTree,
}

impl TreeHost {
    pub const ALL: [TreeHost; 3] = [TreeHost::Hypertree, TreeHost::SiblingTree, TreeHost::XTree];

    pub fn build(self, l: usize) -> Result<Graph> {
        match self {
            TreeHost::Hypertree => families::hypertree(l),
            TreeHost::SiblingTree => families::sibling_tree(l),
            TreeHost::XTree => families::x_tree(l),
        }
    }
}

impl fmt::Display for TreeHost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeHost::Hypertree => "hypertree",
            TreeHost::SiblingTree => "sibling_tree",
            TreeHost::XTree => "x_tree",
        })
    }
}

/// Heap labels of the complete binary tree on `n` vertices in pre-order
/// (root, left subtree, right subtree). Entry `r - 1` is the label of rank `r`.
pub fn preorder_labels(n: usize) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(n);
    let mut stack = vec![1];
    while let Some(x) = stack.pop() {
        if x > n {
            continue;
        }
        out.push(x);
        stack.push(2 * x + 1);
        stack.push(2 * x);
    }
    out
}

fn tree_level(order: usize) -> Option<usize> {
    let l = (order + 1).trailing_zeros() as usize;
    (order >= 1 && (order + 1).is_power_of_two()).then_some(l)
}

/// Guest vertex `g` goes to the heap-labeled host vertex of pre-order rank
/// `g`, so the hub (label 1) lands on the root. Routes are shortest paths.
pub fn embed_preorder(guest: &Graph, host: &Graph) -> Result<EmbeddingMap> {
    if tree_level(host.order()).is_none() {
        return Err(Error::param(
            "preorder embedding",
            format!("host order {} is not 2^l - 1", host.order()),
        ));
    }
    route_shortest(guest, host, preorder_labels(host.order()))
}

/// Wheel-like guest of order `2^l - 1` into the `l`-level tree host via the
/// pre-order labeling.
pub fn embed_wheel_like_into_tree_host(kind: WheelLike, l: usize, host_kind: TreeHost) -> Result<EmbeddingMap> {
    if l < 3 {
        return Err(Error::param("tree embedding", format!("level {l} < 3")));
    }
    let host = host_kind.build(l)?;
    let guest = kind.build(host.order())?;
    embed_preorder(&guest, &host)
}

/// `(order 2^n, jump 2^(n-2))` when `host` is `G(2^n; ±{1, 2^(n-2)})` and
/// `guest` the windmill `WM_{2^(n-1)}` with the standard labeling.
fn windmill_shape(guest: &Graph, host: &Graph) -> Result<(usize, usize)> {
    let n = host.order();
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::param(
            "windmill routing",
            format!("host order {n} is not 2^k with k >= 3"),
        ));
    }
    let q = n / 4;
    if host.edge_set() != families::circulant(n, &[1, q])?.edge_set() {
        return Err(Error::param("windmill routing", format!("host is not G({n}; 1, {q})")));
    }
    if guest.edge_set() != families::windmill(n / 2)?.edge_set() || guest.order() != n {
        return Err(Error::param("windmill routing", format!("guest is not WM{}", n / 2)));
    }
    Ok((n, q))
}

/// Route of spoke `(1, i)` in `G(N; ±{1, q})` with `N = 4q`: clockwise
/// around the outer cycle for the first quarter, through the chord to
/// `q + 1` and then clockwise for the second, through the chord to
/// `3q + 1` and then anticlockwise for the third, anticlockwise around the
/// outer cycle for the last.
fn windmill_spoke(i: Vertex, q: usize) -> Vec<Vertex> {
    let n = 4 * q;
    if (2..=q + 1).contains(&i) {
        (1..=i).collect()
    } else if (3 * q + 1..=n).contains(&i) {
        std::iter::once(1).chain((i..=n).rev()).collect()
    } else if (q + 2..=2 * q + 1).contains(&i) {
        std::iter::once(1).chain(q + 1..=i).collect()
    } else {
        debug_assert!((2 * q + 2..=3 * q).contains(&i));
        std::iter::once(1).chain((i..=3 * q + 1).rev()).collect()
    }
}

/// Identity embedding of `WM_{2^(n-1)}` into `G(2^n; ±{1, 2^(n-2)})` with
/// the fixed four-range spoke routing; non-spoke guest edges use the host
/// edge with the same labels.
pub fn route_windmill(guest: &Graph, host: &Graph) -> Result<EmbeddingMap> {
    let (_, q) = windmill_shape(guest, host)?;
    let routes = guest
        .edges()
        .map(|(u, v)| {
            let path = if u == 1 { windmill_spoke(v, q) } else { vec![u, v] };
            ((u, v), path)
        })
        .collect();
    EmbeddingMap::new(guest.clone(), host.clone(), (1..=guest.order()).collect(), routes)
}

pub fn embed_windmill_into_circulant(n: u32) -> Result<EmbeddingMap> {
    if !(3..=24).contains(&n) {
        return Err(Error::param("windmill embedding", format!("n = {n} outside 3..=24")));
    }
    let order = 1usize << n;
    let guest = families::windmill(order / 2)?;
    let host = families::circulant(order, &[1, order / 4])?;
    route_windmill(&guest, &host)
}

/// Whether the rim of the guest must close into a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rim {
    Cycle,
    Path,
}

/// Hub onto `center`, rim onto the given hamiltonian cycle or path of
/// `host - center` (listed in host labels), spokes along shortest paths.
pub fn embed_with_rim(host: &Graph, center: Vertex, rim: &[Vertex], shape: Rim) -> Result<EmbeddingMap> {
    let n = host.order();
    let guest = match shape {
        Rim::Cycle => families::wheel(n)?,
        Rim::Path => families::fan(n)?,
    };
    let mut vmap = Vec::with_capacity(n);
    vmap.push(center);
    vmap.extend_from_slice(rim);
    check_bijection(&guest, host, &vmap)?;
    let dist = connected_distances(host)?;
    Ok(route_shortest_with(&guest, host, vmap, &dist))
}

fn embed_via_median(host: &Graph, shape: Rim, budget: Budget) -> Result<EmbeddingMap> {
    let dist = connected_distances(host)?;
    let u = medians_of(&dist).smallest();
    let (rest, labels) = host.remove_vertices(&BTreeSet::from([u]));
    let found = match shape {
        Rim::Cycle => hamiltonian::search_cycle(&rest, budget),
        Rim::Path => hamiltonian::search_path(&rest, None, budget),
    };
    match found {
        Search::Found(order) => {
            let rim: Vec<Vertex> = order.iter().map(|&x| labels[x - 1]).collect();
            embed_with_rim(host, u, &rim, shape)
        }
        Search::Absent => Err(Error::NoHamiltonian {
            what: if shape == Rim::Cycle { "cycle" } else { "path" },
            removed: u,
        }),
        Search::Inconclusive(nodes) => Err(Error::Inconclusive(nodes)),
    }
}

/// `W_n` into an `n`-vertex host: hub onto the smallest median `u`, rim
/// onto a hamiltonian cycle of `host - u`. Wirelength `n - 1 + status(u)`.
pub fn embed_wheel_via_median(host: &Graph) -> Result<EmbeddingMap> {
    embed_via_median(host, Rim::Cycle, Budget::default())
}

/// `F_n` into an `n`-vertex host: hub onto the smallest median `u`, rim
/// onto a hamiltonian path of `host - u`. Wirelength `n - 2 + status(u)`.
pub fn embed_fan_via_median(host: &Graph) -> Result<EmbeddingMap> {
    embed_via_median(host, Rim::Path, Budget::default())
}

pub fn embed_wheel_via_median_with(host: &Graph, budget: Budget) -> Result<EmbeddingMap> {
    embed_via_median(host, Rim::Cycle, budget)
}

pub fn embed_fan_via_median_with(host: &Graph, budget: Budget) -> Result<EmbeddingMap> {
    embed_via_median(host, Rim::Path, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_on_cycle() {
        let c4 = families::cycle(4).unwrap();
        let emb = embed_identity(&c4, &c4).unwrap();
        assert!(emb.routes().values().all(|p| p.len() == 2));
        let m = evaluate(&emb);
        assert_eq!((m.wirelength, m.max_dilation, m.max_congestion), (4, 1, 1));
        assert_eq!(expansion(&emb), Ratio::from_integer(1));
        let k2 = families::complete(2).unwrap();
        let m = evaluate(&embed_identity(&k2, &k2).unwrap());
        assert_eq!(m.wirelength, 1);
    }

    #[test]
    fn lexicographic_tie_break() {
        // C_4 has two shortest paths 1-2-3 and 1-4-3
        let c4 = families::cycle(4).unwrap();
        let p = Graph::new(4, [(1, 3)]).unwrap();
        let emb = route_shortest(&p, &c4, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(emb.route(1, 3).unwrap(), &[1, 2, 3]);
        let emb = route_shortest(&p, &c4, vec![3, 2, 1, 4]).unwrap();
        assert_eq!(emb.route(3, 1).unwrap(), &[3, 2, 1]);
    }

    #[test]
    fn rejects_bad_maps() {
        let c4 = families::cycle(4).unwrap();
        let c5 = families::cycle(5).unwrap();
        assert!(matches!(
            embed_identity(&c4, &c5),
            Err(Error::OrderMismatch { .. })
        ));
        assert!(matches!(
            route_shortest(&c4, &c4, vec![1, 1, 2, 3]),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            route_shortest(&c4, &c4, vec![1, 2, 3]),
            Err(Error::NotBijective(_))
        ));
        let mut routes: BTreeMap<Edge, Vec<Vertex>> =
            c4.edges().map(|(u, v)| ((u, v), vec![u, v])).collect();
        routes.insert((1, 4), vec![1, 3, 4]);
        assert!(matches!(
            EmbeddingMap::new(c4.clone(), c4.clone(), vec![1, 2, 3, 4], routes),
            Err(Error::InvalidRoute { u: 1, v: 4, .. })
        ));
    }

    #[test]
    fn wheel_into_circulant_spokes_follow_distances() {
        let w8 = families::wheel(8).unwrap();
        let host = families::circulant(8, &[1, 2]).unwrap();
        let emb = embed_identity(&w8, &host).unwrap();
        for v in 2..=8usize {
            let k = v - 1;
            assert_eq!(emb.route(1, v).unwrap().len() - 1, k.min(8 - k).div_ceil(2));
        }
    }

    #[test]
    fn preorder_ranks() {
        assert_eq!(preorder_labels(7), vec![1, 2, 4, 5, 3, 6, 7]);
        assert_eq!(preorder_labels(15)[..6], [1, 2, 4, 8, 9, 5]);
    }

    #[test]
    fn tree_host_examples() {
        let emb = embed_wheel_like_into_tree_host(WheelLike::Friendship, 4, TreeHost::Hypertree).unwrap();
        assert_eq!(evaluate(&emb).max_dilation, 3);
        let emb = embed_wheel_like_into_tree_host(WheelLike::Star, 3, TreeHost::Hypertree).unwrap();
        assert_eq!(evaluate(&emb).max_dilation, 2);
        let emb = embed_wheel_like_into_tree_host(WheelLike::Wheel, 3, TreeHost::SiblingTree).unwrap();
        let rim: Vec<_> = (2..=7).map(|g| emb.image(g)).collect();
        assert_eq!(rim, vec![2, 4, 5, 3, 6, 7]);
        assert_eq!(evaluate(&emb).max_dilation, 2);
        assert!(embed_wheel_like_into_tree_host(WheelLike::Star, 2, TreeHost::XTree).is_err());
    }

    #[test]
    fn windmill_routing_n4() {
        let emb = embed_windmill_into_circulant(4).unwrap();
        assert_eq!(emb.route(1, 9).unwrap(), &[1, 5, 6, 7, 8, 9]);
        assert_eq!(emb.route(1, 10).unwrap(), &[1, 13, 12, 11, 10]);
        assert_eq!(emb.route(1, 14).unwrap(), &[1, 16, 15, 14]);
        let m = evaluate(&emb);
        assert_eq!(m.max_congestion, 4);
        for e in [(1, 2), (1, 5), (5, 6), (1, 16)] {
            assert_eq!(m.congestion[&e], 4, "{e:?}");
        }
        assert!(embed_windmill_into_circulant(2).is_err());
    }

    #[test]
    fn windmill_routing_rejects_other_hosts() {
        let guest = families::windmill(4).unwrap();
        let host = families::circulant(8, &[1, 3]).unwrap();
        assert!(route_windmill(&guest, &host).is_err());
    }

    #[test]
    fn median_constructions() {
        let host = families::circulant(8, &[1, 2]).unwrap();
        assert_eq!(evaluate(&embed_wheel_via_median(&host).unwrap()).wirelength, 17);
        assert_eq!(evaluate(&embed_fan_via_median(&host).unwrap()).wirelength, 16);
        let petersen = families::generalized_petersen(5, 2).unwrap();
        assert_eq!(evaluate(&embed_wheel_via_median(&petersen).unwrap()).wirelength, 24);
        let torus = families::torus(&[3, 3]).unwrap();
        assert_eq!(evaluate(&embed_wheel_via_median(&torus).unwrap()).wirelength, 20);
        let star = families::star(8).unwrap();
        assert!(matches!(
            embed_wheel_via_median(&star),
            Err(Error::NoHamiltonian { removed: 1, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let emb = embed_windmill_into_circulant(3).unwrap();
        let text = emb.to_json().to_string();
        let back = EmbeddingMap::from_json(emb.guest().clone(), emb.host().clone(), &text).unwrap();
        assert_eq!(back, emb);
        assert!(EmbeddingMap::from_json(emb.guest().clone(), emb.host().clone(), "{}").is_err());
    }
}

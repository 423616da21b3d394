//! Generators for the guest and host families.
//!
//! Labelings follow fixed conventions so that constructive embeddings can
//! refer to vertices by id:
//!
//! * wheel-like guests put the hub at 1 and the rim at `2..=n` in order;
//! * tree hosts use heap labels (root 1, children `2x` and `2x + 1`);
//! * circulants shift `0..n-1` to `1..=n`, preserving rotation order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::param("wheel", format!("order {n} < 4")));
    }
    let spokes = (2..=n).map(|v| (1, v));
    let rim = (2..n).map(|v| (v, v + 1)).chain([(n, 2)]);
    Ok(Graph::new(n, spokes.chain(rim))?.with_name(format!("W{n}")))
}

pub fn fan(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("fan", format!("order {n} < 3")));
    }
    let spokes = (2..=n).map(|v| (1, v));
    let rim = (2..n).map(|v| (v, v + 1));
    Ok(Graph::new(n, spokes.chain(rim))?.with_name(format!("F{n}")))
}

/// `k` triangles `{1, 2i, 2i + 1}` sharing the hub 1; order `2k + 1`.
pub fn friendship(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::param("friendship", "needs at least one triangle"));
    }
    let edges = (1..=k).flat_map(|i| [(1, 2 * i), (1, 2 * i + 1), (2 * i, 2 * i + 1)]);
    Ok(Graph::new(2 * k + 1, edges)?.with_name(format!("T{k}")))
}

/// Friendship graph `T_k` with one degree-2 vertex deleted; order `2k`.
///
/// Hub is 1, the pendent vertex is `2k`, and `(i, i + 1)` are adjacent for
/// even `i <= 2k - 2`.
pub fn windmill(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::param("windmill", format!("k = {k} < 2")));
    }
    let n = 2 * k;
    let spokes = (2..=n).map(|v| (1, v));
    let pairs = (2..=n - 2).step_by(2).map(|i| (i, i + 1));
    Ok(Graph::new(n, spokes.chain(pairs))?.with_name(format!("WM{k}")))
}

/// `K_{1, n-1}` with hub 1.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param("star", format!("order {n} < 2")));
    }
    Ok(Graph::new(n, (2..=n).map(|v| (1, v)))?.with_name(format!("S{n}")))
}

fn check_level(family: &str, l: usize) -> Result<()> {
    if l < 2 {
        return Err(Error::param(family, format!("level {l} < 2")));
    }
    if l > 24 {
        return Err(Error::param(family, format!("level {l} is too large")));
    }
    Ok(())
}

/// Heap labels present on level `i` (1-based): `2^(i-1) ..= 2^i - 1`.
fn level_labels(i: usize) -> std::ops::RangeInclusive<Vertex> {
    (1 << (i - 1))..=((1 << i) - 1)
}

fn tree_edges(l: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (2..(1usize << l)).map(|x| (x / 2, x))
}

/// Complete binary tree with `l` levels and heap labels.
pub fn complete_binary_tree(l: usize) -> Result<Graph> {
    check_level("complete_binary_tree", l)?;
    Ok(Graph::new((1 << l) - 1, tree_edges(l))?.with_name(format!("T({l})")))
}

/// Hypertree `HT(l)`: the complete binary tree plus, on each level `i >= 2`,
/// an edge between same-level labels that differ by `2^(i-2)`.
pub fn hypertree(l: usize) -> Result<Graph> {
    check_level("hypertree", l)?;
    let horizontal = (2..=l).flat_map(|i| {
        let half = 1usize << (i - 2);
        let first = 1usize << (i - 1);
        (first..first + half).map(move |x| (x, x + half))
    });
    Ok(Graph::new((1 << l) - 1, tree_edges(l).chain(horizontal))?.with_name(format!("HT({l})")))
}

/// Sibling tree `ST(l)`: the complete binary tree plus `(2x, 2x + 1)` for
/// every internal vertex `x`.
pub fn sibling_tree(l: usize) -> Result<Graph> {
    check_level("sibling_tree", l)?;
    let siblings = (1..(1usize << (l - 1))).map(|x| (2 * x, 2 * x + 1));
    Ok(Graph::new((1 << l) - 1, tree_edges(l).chain(siblings))?.with_name(format!("ST({l})")))
}

/// X-tree `XT(l)`: the complete binary tree plus a path through each level.
pub fn x_tree(l: usize) -> Result<Graph> {
    check_level("x_tree", l)?;
    let level_paths = (2..=l).flat_map(|i| {
        let labels = level_labels(i);
        (*labels.start()..*labels.end()).map(|x| (x, x + 1))
    });
    Ok(Graph::new((1 << l) - 1, tree_edges(l).chain(level_paths))?.with_name(format!("XT({l})")))
}

/// Circulant `G(n; ±S)` on `1..=n`: `i ~ i ± s (mod n)` for every `s` in `S`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("circulant", format!("order {n} < 3")));
    }
    if jumps.is_empty() {
        return Err(Error::param("circulant", "empty jump set"));
    }
    let mut sorted = jumps.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != jumps.len() {
        return Err(Error::param("circulant", "repeated jump"));
    }
    if let Some(&s) = sorted.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(Error::param(
            "circulant",
            format!("jump {s} outside 1..={}", n / 2),
        ));
    }
    let mut edges = Vec::new();
    for &s in &sorted {
        for i in 0..n {
            let j = (i + s) % n;
            // the jump n/2 pairs each vertex with its antipode only once
            if 2 * s == n && j < i {
                continue;
            }
            edges.push((i + 1, j + 1));
        }
    }
    let tag = sorted
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    Ok(Graph::new(n, edges)?.with_name(format!("G({n};{tag})")))
}

/// Generalized Petersen graph `P(n, m)`: outer cycle `1..=n`, inner vertex
/// `n + i` joined to outer `i` and to inner `n + (i + m mod n)`.
pub fn generalized_petersen(n: usize, m: usize) -> Result<Graph> {
    if n < 3 || m < 1 || 2 * m >= n {
        return Err(Error::param(
            "generalized_petersen",
            format!("need n >= 3 and 1 <= m < n/2, got ({n}, {m})"),
        ));
    }
    let outer = (0..n).map(|i| (i + 1, (i + 1) % n + 1));
    let spokes = (0..n).map(|i| (i + 1, n + i + 1));
    let inner = (0..n).map(|i| (n + i + 1, n + (i + m) % n + 1));
    let edges = outer.chain(spokes).chain(inner);
    Ok(Graph::new(2 * n, edges)?.with_name(format!("P({n},{m})")))
}

/// Cartesian product of cycles `C_{d1} x C_{d2} x ...`, vertices numbered in
/// row-major order of their coordinates.
pub fn torus(dims: &[usize]) -> Result<Graph> {
    if dims.is_empty() {
        return Err(Error::param("torus", "no dimensions"));
    }
    if let Some(d) = dims.iter().find(|&&d| d < 3) {
        return Err(Error::param("torus", format!("dimension {d} < 3")));
    }
    let order: usize = dims.iter().product();
    let mut strides = vec![1usize; dims.len()];
    for k in (0..dims.len() - 1).rev() {
        strides[k] = strides[k + 1] * dims[k + 1];
    }
    let mut edges = Vec::with_capacity(order * dims.len());
    for idx in 0..order {
        for (k, &d) in dims.iter().enumerate() {
            let coord = (idx / strides[k]) % d;
            let next = idx - coord * strides[k] + ((coord + 1) % d) * strides[k];
            edges.push((idx + 1, next + 1));
        }
    }
    let tag = dims
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join("x");
    Ok(Graph::new(order, edges)?.with_name(format!("Torus({tag})")))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("path", "order 0"));
    }
    Ok(Graph::new(n, (1..n).map(|v| (v, v + 1)))?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::param("cycle", format!("order {n} < 3")));
    }
    let edges = (1..n).map(|v| (v, v + 1)).chain([(n, 1)]);
    Ok(Graph::new(n, edges)?.with_name(format!("C{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("complete", "order 0"));
    }
    let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    Ok(Graph::new(n, edges)?.with_name(format!("K{n}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Wheel,
    Fan,
    Friendship,
    Windmill,
    Star,
    CompleteBinaryTree,
    Hypertree,
    SiblingTree,
    XTree,
    Circulant,
    GeneralizedPetersen,
    Torus,
    Path,
    Cycle,
    Complete,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 15] = [
        FamilyKind::Wheel,
        FamilyKind::Fan,
        FamilyKind::Friendship,
        FamilyKind::Windmill,
        FamilyKind::Star,
        FamilyKind::CompleteBinaryTree,
        FamilyKind::Hypertree,
        FamilyKind::SiblingTree,
        FamilyKind::XTree,
        FamilyKind::Circulant,
        FamilyKind::GeneralizedPetersen,
        FamilyKind::Torus,
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Complete,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Wheel => "wheel",
            FamilyKind::Fan => "fan",
            FamilyKind::Friendship => "friendship",
            FamilyKind::Windmill => "windmill",
            FamilyKind::Star => "star",
            FamilyKind::CompleteBinaryTree => "complete_binary_tree",
            FamilyKind::Hypertree => "hypertree",
            FamilyKind::SiblingTree => "sibling_tree",
            FamilyKind::XTree => "x_tree",
            FamilyKind::Circulant => "circulant",
            FamilyKind::GeneralizedPetersen => "generalized_petersen",
            FamilyKind::Torus => "torus",
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        let alias = match norm.as_str() {
            "binary_tree" | "cbt" => "complete_binary_tree",
            "petersen" | "gp" => "generalized_petersen",
            "xtree" => "x_tree",
            "sibling" => "sibling_tree",
            other => other,
        };
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.as_str() == alias)
            .ok_or_else(|| Error::Unknown {
                what: "family",
                name: s.to_string(),
            })
    }
}

/// A family name together with its integer parameters, e.g. `circulant 8 1 2`
/// (order followed by jumps) or `torus 3 3` (dimensions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec {
            kind,
            params: params.into(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        let p = &self.params;
        let one = |family: &str| -> Result<usize> {
            match p.as_slice() {
                [x] => Ok(*x),
                _ => Err(Error::param(family, format!("expected 1 parameter, got {}", p.len()))),
            }
        };
        match self.kind {
            FamilyKind::Wheel => wheel(one("wheel")?),
            FamilyKind::Fan => fan(one("fan")?),
            FamilyKind::Friendship => friendship(one("friendship")?),
            FamilyKind::Windmill => windmill(one("windmill")?),
            FamilyKind::Star => star(one("star")?),
            FamilyKind::CompleteBinaryTree => complete_binary_tree(one("complete_binary_tree")?),
            FamilyKind::Hypertree => hypertree(one("hypertree")?),
            FamilyKind::SiblingTree => sibling_tree(one("sibling_tree")?),
            FamilyKind::XTree => x_tree(one("x_tree")?),
            FamilyKind::Circulant => match p.split_first() {
                Some((&n, jumps)) => circulant(n, jumps),
                None => Err(Error::param("circulant", "missing order")),
            },
            FamilyKind::GeneralizedPetersen => match p.as_slice() {
                [n, m] => generalized_petersen(*n, *m),
                _ => Err(Error::param("generalized_petersen", "expected n and m")),
            },
            FamilyKind::Torus => torus(p),
            FamilyKind::Path => path(one("path")?),
            FamilyKind::Cycle => cycle(one("cycle")?),
            FamilyKind::Complete => complete(one("complete")?),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for x in &self.params {
            write!(f, " {x}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `name p1 p2 ...`; parameters may also be comma separated.
    fn from_str(s: &str) -> Result<Self> {
        let mut tokens = s.split([' ', ',', ':']).filter(|t| !t.is_empty());
        let kind: FamilyKind = tokens
            .next()
            .ok_or_else(|| Error::param("family", "empty specification"))?
            .parse()?;
        let params = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::param(kind.as_str(), format!("bad parameter `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { kind, params })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_and_fan_shapes() {
        let w12 = wheel(12).unwrap();
        assert_eq!((w12.order(), w12.size()), (12, 22));
        assert_eq!(wheel(4).unwrap().edge_set(), complete(4).unwrap().edge_set());
        assert_eq!(wheel(17).unwrap().order(), 17);
        assert!(wheel(3).is_err());
        assert_eq!(fan(5).unwrap().size(), 7);
        assert_eq!(fan(3).unwrap().edge_set(), complete(3).unwrap().edge_set());
        assert!(fan(2).is_err());
    }

    #[test]
    fn friendship_and_windmill() {
        let t8 = friendship(8).unwrap();
        assert_eq!((t8.order(), t8.size()), (17, 24));
        assert_eq!(friendship(1).unwrap().edge_set(), complete(3).unwrap().edge_set());
        let wm8 = windmill(8).unwrap();
        assert_eq!((wm8.order(), wm8.size()), (16, 22));
        assert_eq!(wm8.neighbors(16), &[1]);
        assert!(wm8.has_edge(14, 15) && !wm8.has_edge(15, 16));
        assert!(windmill(1).is_err() && friendship(0).is_err());
    }

    #[test]
    fn windmill_is_friendship_minus_degree_two_vertex() {
        for k in 2..10 {
            let t = friendship(k).unwrap();
            let (g, _) = t.remove_vertices(&[2 * k + 1].into());
            assert_eq!(g.edge_set(), windmill(k).unwrap().edge_set());
        }
    }

    #[test]
    fn star_shapes() {
        assert_eq!(star(7).unwrap().size(), 6);
        assert_eq!(star(2).unwrap().edge_set(), complete(2).unwrap().edge_set());
        assert!(star(1).is_err());
    }

    #[test]
    fn tree_hosts() {
        let ht4 = hypertree(4).unwrap();
        assert_eq!((ht4.order(), ht4.size()), (15, 21));
        assert!(ht4.has_edge(2, 3) && ht4.has_edge(4, 6) && ht4.has_edge(8, 12));
        assert!(!ht4.has_edge(4, 5));
        let st5 = sibling_tree(5).unwrap();
        assert_eq!((st5.order(), st5.size()), (31, 45));
        let xt4 = x_tree(4).unwrap();
        assert_eq!((xt4.order(), xt4.size()), (15, 25));
        assert!(xt4.has_edge(11, 12) && !xt4.has_edge(7, 8));
        assert!(hypertree(1).is_err());
    }

    #[test]
    fn hypertree_contains_binary_tree() {
        for l in 2..8 {
            let tree = complete_binary_tree(l).unwrap();
            let ht = hypertree(l).unwrap();
            assert!(tree.edge_set().is_subset(ht.edge_set()));
            let heap: Vec<_> = ht.edges().filter(|&(u, v)| v / 2 == u).collect();
            assert_eq!(heap, tree.edges().collect::<Vec<_>>());
        }
    }

    #[test]
    fn circulants() {
        assert_eq!(circulant(8, &[1, 2]).unwrap().size(), 16);
        assert_eq!(circulant(7, &[1]).unwrap().edge_set(), cycle(7).unwrap().edge_set());
        assert_eq!(
            circulant(6, &[1, 2, 3]).unwrap().edge_set(),
            complete(6).unwrap().edge_set()
        );
        assert!(circulant(8, &[5]).is_err());
        assert!(circulant(8, &[0]).is_err());
        assert!(circulant(8, &[]).is_err());
        assert!(circulant(8, &[1, 1]).is_err());
    }

    #[test]
    fn other_hosts() {
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        assert!(generalized_petersen(4, 2).is_err());
        let t = torus(&[3, 3]).unwrap();
        assert_eq!((t.order(), t.size()), (9, 18));
        assert!(t.vertices().all(|v| t.degree(v) == 4));
        assert!(torus(&[2, 3]).is_err());
        assert_eq!(path(4).unwrap().size(), 3);
        assert_eq!(complete(5).unwrap().size(), 10);
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "circulant 8 1,2".parse().unwrap();
        assert_eq!(s, FamilySpec::new(FamilyKind::Circulant, vec![8, 1, 2]));
        assert_eq!(s.to_string(), "circulant 8 1 2");
        assert_eq!(s.build().unwrap().size(), 16);
        assert!("hypercube 3".parse::<FamilySpec>().is_err());
        assert!("wheel x".parse::<FamilySpec>().is_err());
        assert!("wheel 4 5".parse::<FamilySpec>().unwrap().build().is_err());
        assert_eq!("x-tree 3".parse::<FamilySpec>().unwrap().kind, FamilyKind::XTree);
    }
}

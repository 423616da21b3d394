//! Lower bounds for embeddings of guests with a universal vertex, and
//! sharpness verdicts that pair each bound with a constructive witness.
//!
//! * dilation is at least the radius of the host;
//! * congestion is at least `ceil((n - 1) / max_degree(host))`;
//! * a wheel (fan) costs at least `n - 1 + status(u)` (`n - 2 + status(u)`)
//!   in wirelength for a median `u` of the host, with equality exactly when
//!   the rim fits on a hamiltonian cycle (path) of the host minus a median.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distance::{all_pairs_distances, medians_of, radius_diameter_of};
use crate::embedding::{self, evaluate, EmbeddingMap, Rim, TreeHost, WheelLike};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::hamiltonian::{self, Budget, Search};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Dilation,
    Congestion,
    Wirelength,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Dilation => "dilation",
            Metric::Congestion => "congestion",
            Metric::Wirelength => "wirelength",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub instance: String,
    pub metric: Metric,
    pub bound: usize,
    pub achieved: Option<usize>,
    pub sharp: Option<bool>,
    pub witness: Option<EmbeddingMap>,
    /// A search budget ran out before sharpness was decided.
    pub inconclusive: bool,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(instance: impl Into<String>, metric: Metric, bound: usize) -> Self {
        BoundReport {
            instance: instance.into(),
            metric,
            bound,
            achieved: None,
            sharp: None,
            witness: None,
            inconclusive: false,
            notes: Vec::new(),
        }
    }

    /// Records the value a witness attains and derives the verdict.
    fn achieve(&mut self, witness: EmbeddingMap) {
        let m = evaluate(&witness);
        let achieved = match self.metric {
            Metric::Dilation => m.max_dilation,
            Metric::Congestion => m.max_congestion,
            Metric::Wirelength => m.wirelength,
        };
        if achieved < self.bound {
            self.notes.push(format!(
                "VIOLATION: witness attains {achieved} below the lower bound {}",
                self.bound
            ));
        }
        self.achieved = Some(achieved);
        self.sharp = Some(achieved == self.bound);
        self.witness = Some(witness);
    }

    pub fn to_json(&self, with_witness: bool) -> serde_json::Value {
        let mut v = serde_json::json!({
            "instance": self.instance,
            "metric": self.metric,
            "bound": self.bound,
            "achieved": self.achieved,
            "sharp": self.sharp,
            "inconclusive": self.inconclusive,
            "notes": self.notes,
        });
        if with_witness {
            v["witness"] = self
                .witness
                .as_ref()
                .map_or(serde_json::Value::Null, EmbeddingMap::to_json);
        }
        v
    }
}

fn universal_guest(g: &Graph, h: &Graph) -> Result<Vertex> {
    if g.order() != h.order() {
        return Err(Error::OrderMismatch {
            guest: g.order(),
            host: h.order(),
        });
    }
    g.universal_vertex()
        .ok_or_else(|| Error::NoUniversalVertex(g.name().to_string()))
}

/// Any embedding of `g` (which has a universal vertex) into `h` has
/// dilation at least `radius(h)`. When `radius = diameter` no embedding can
/// do worse, so the bound is attained; the identity embedding is recorded
/// as witness in that case.
pub fn dilation_lower_bound(g: &Graph, h: &Graph) -> Result<BoundReport> {
    universal_guest(g, h)?;
    let dist = all_pairs_distances(h);
    if !dist.is_connected() {
        return Err(Error::Disconnected(h.name().to_string()));
    }
    let (r, d) = radius_diameter_of(&dist);
    let mut report = BoundReport::new(format!("{} -> {}", g.name(), h.name()), Metric::Dilation, r);
    if r == d {
        report.notes.push(format!(
            "radius equals diameter ({d}): every embedding has dilation exactly {d}"
        ));
        report.achieve(embedding::embed_identity(g, h)?);
    }
    Ok(report)
}

/// `ceil((n - 1) / max_degree(h))`: the hub's `n - 1` spokes leave its image
/// through at most `max_degree(h)` host edges.
pub fn congestion_lower_bound(g: &Graph, h: &Graph) -> Result<BoundReport> {
    universal_guest(g, h)?;
    let n = h.order();
    let delta = h.max_degree();
    let bound = if delta == 0 { 0 } else { (n - 1).div_ceil(delta) };
    let mut report = BoundReport::new(format!("{} -> {}", g.name(), h.name()), Metric::Congestion, bound);
    report
        .notes
        .push(format!("n - 1 = {}, max degree = {delta}", n - 1));
    Ok(report)
}

/// Wirelength bound for a wheel (`Rim::Cycle`) or fan (`Rim::Path`) of the
/// host's order. Sharpness is decided by exact search for a hamiltonian
/// cycle (path) of the host minus a median, trying medians in id order; a
/// found rim is turned into an embedding and evaluated.
pub fn wirelength_lower_bound(rim: Rim, h: &Graph, budget: Budget) -> Result<BoundReport> {
    let n = h.order();
    let min_order = if rim == Rim::Cycle { 4 } else { 3 };
    if n < min_order {
        return Err(Error::param("wirelength bound", format!("host order {n} < {min_order}")));
    }
    let dist = all_pairs_distances(h);
    if !dist.is_connected() {
        return Err(Error::Disconnected(h.name().to_string()));
    }
    let medians = medians_of(&dist);
    let (guest, base) = match rim {
        Rim::Cycle => ("W", n - 1),
        Rim::Path => ("F", n - 2),
    };
    let mut report = BoundReport::new(
        format!("{guest}{n} -> {}", h.name()),
        Metric::Wirelength,
        base + medians.delta,
    );
    report.notes.push(format!(
        "median status {} at {:?}",
        medians.delta, medians.medians
    ));
    let what = if rim == Rim::Cycle { "cycle" } else { "path" };
    let mut inconclusive = false;
    for &u in &medians.medians {
        let (rest, labels) = h.remove_vertices(&[u].into());
        let found = match rim {
            Rim::Cycle => hamiltonian::search_cycle(&rest, budget),
            Rim::Path => hamiltonian::search_path(&rest, None, budget),
        };
        match found {
            Search::Found(order) => {
                let rim_labels: Vec<Vertex> = order.iter().map(|&x| labels[x - 1]).collect();
                if u != medians.smallest() {
                    report
                        .notes
                        .push(format!("host minus median {u} used; smaller medians fail"));
                }
                report.achieve(embedding::embed_with_rim(h, u, &rim_labels, rim)?);
                return Ok(report);
            }
            Search::Absent => {}
            Search::Inconclusive(_) => inconclusive = true,
        }
    }
    if inconclusive {
        report.inconclusive = true;
        report
            .notes
            .push("hamiltonicity search exhausted its budget; sharpness undecided".into());
    } else {
        report.sharp = Some(false);
        report
            .notes
            .push(format!("host minus every median has no hamiltonian {what}: bound not attained"));
    }
    Ok(report)
}

/// One theorem instance to build, embed and check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremInstance {
    /// Wheel-like guest of order `2^level - 1` into a tree host; claimed
    /// dilation `level - 1`.
    TreeDilation {
        host: TreeHost,
        guest: WheelLike,
        level: usize,
    },
    /// `WM_{2^(n-1)}` into `G(2^n; ±{1, 2^(n-2)})`; claimed congestion `2^(n-2)`.
    WindmillCongestion { n: u32 },
    /// Wheel or fan into the given host; claimed wirelength `n - 1 + status`
    /// or `n - 2 + status` when the host minus a median is hamiltonian.
    MedianWirelength { rim: Rim, host: FamilySpec },
}

pub const THEOREM_IDS: [&str; 6] = [
    "dil-hypertree",
    "dil-sibling",
    "dil-xtree",
    "ec-windmill",
    "wl-wheel",
    "wl-fan",
];

impl TheoremInstance {
    pub fn id(&self) -> &'static str {
        match self {
            TheoremInstance::TreeDilation { host, .. } => match host {
                TreeHost::Hypertree => "dil-hypertree",
                TreeHost::SiblingTree => "dil-sibling",
                TreeHost::XTree => "dil-xtree",
            },
            TheoremInstance::WindmillCongestion { .. } => "ec-windmill",
            TheoremInstance::MedianWirelength { rim: Rim::Cycle, .. } => "wl-wheel",
            TheoremInstance::MedianWirelength { rim: Rim::Path, .. } => "wl-fan",
        }
    }

    /// Parses `id` plus free-form parameters:
    /// `dil-* <guest-kind> <level>`, `ec-windmill <n>`, `wl-* <family> <params...>`.
    pub fn parse(id: &str, params: &[String]) -> Result<Self> {
        let bad = |reason: &str| Error::param(id, reason);
        let number = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("bad number `{s}`")));
        let tree = match id {
            "dil-hypertree" => Some(TreeHost::Hypertree),
            "dil-sibling" => Some(TreeHost::SiblingTree),
            "dil-xtree" => Some(TreeHost::XTree),
            _ => None,
        };
        if let Some(host) = tree {
            return match params {
                [kind, level] => Ok(TheoremInstance::TreeDilation {
                    host,
                    guest: kind.parse()?,
                    level: number(level)?,
                }),
                _ => Err(bad("expected <guest-kind> <level>")),
            };
        }
        match id {
            "ec-windmill" => match params {
                [n] => Ok(TheoremInstance::WindmillCongestion {
                    n: u32::try_from(number(n)?).map_err(|_| bad("n too large"))?,
                }),
                _ => Err(bad("expected <n>")),
            },
            "wl-wheel" | "wl-fan" => {
                let host: FamilySpec = params.join(" ").parse()?;
                let rim = if id == "wl-wheel" { Rim::Cycle } else { Rim::Path };
                Ok(TheoremInstance::MedianWirelength { rim, host })
            }
            _ => Err(Error::Unknown {
                what: "theorem id",
                name: id.to_string(),
            }),
        }
    }

    /// Same instance with its size parameter replaced: level, `n`, or the
    /// first host family parameter.
    pub fn with_size(&self, size: usize) -> Self {
        let mut out = self.clone();
        match &mut out {
            TheoremInstance::TreeDilation { level, .. } => *level = size,
            TheoremInstance::WindmillCongestion { n } => *n = size as u32,
            TheoremInstance::MedianWirelength { host, .. } => {
                if let Some(first) = host.params.first_mut() {
                    *first = size;
                }
            }
        }
        out
    }

    pub fn params(&self) -> String {
        match self {
            TheoremInstance::TreeDilation { guest, level, .. } => format!("{guest} l={level}"),
            TheoremInstance::WindmillCongestion { n } => format!("n={n}"),
            TheoremInstance::MedianWirelength { host, .. } => host.to_string(),
        }
    }
}

impl fmt::Display for TheoremInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.params())
    }
}

impl FromStr for TheoremInstance {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut words = s.split_whitespace();
        let id = words.next().unwrap_or_default();
        let rest: Vec<String> = words.map(str::to_string).collect();
        TheoremInstance::parse(id, &rest)
    }
}

/// Builds the instance, runs its construction and compares the achieved
/// value with both the lower bound and the value the theorem claims.
pub fn verify_theorem(instance: &TheoremInstance, budget: Budget) -> Result<BoundReport> {
    let mut report = match instance {
        TheoremInstance::TreeDilation { host, guest, level } => {
            let emb = embedding::embed_wheel_like_into_tree_host(*guest, *level, *host)?;
            let mut report = dilation_lower_bound(emb.guest(), emb.host())?;
            let claimed = level - 1;
            if report.bound != claimed {
                report.notes.push(format!(
                    "host radius {} differs from the claimed value {claimed}",
                    report.bound
                ));
            }
            report.achieve(emb);
            if report.achieved.is_some_and(|a| a > claimed) {
                report.notes.push(format!(
                    "construction exceeds the claimed dilation {claimed}"
                ));
            }
            report
        }
        TheoremInstance::WindmillCongestion { n } => {
            let emb = embedding::embed_windmill_into_circulant(*n)?;
            let mut report = congestion_lower_bound(emb.guest(), emb.host())?;
            let claimed = 1usize << (n - 2);
            if report.bound != claimed {
                report.notes.push(format!(
                    "lower bound {} differs from the claimed value {claimed}",
                    report.bound
                ));
            }
            report.achieve(emb);
            if report.achieved != Some(claimed) {
                report
                    .notes
                    .push(format!("construction does not attain the claimed congestion {claimed}"));
            }
            report
        }
        TheoremInstance::MedianWirelength { rim, host } => {
            let h = host.build()?;
            wirelength_lower_bound(*rim, &h, budget)?
        }
    };
    report.instance = instance.to_string();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn dilation_bounds() {
        let w15 = families::wheel(15).unwrap();
        let ht4 = families::hypertree(4).unwrap();
        assert_eq!(dilation_lower_bound(&w15, &ht4).unwrap().bound, 3);
        let r = dilation_lower_bound(&families::star(7).unwrap(), &families::cycle(7).unwrap()).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (3, Some(3), Some(true)));
        let c5 = families::cycle(5).unwrap();
        assert!(matches!(
            dilation_lower_bound(&c5, &c5),
            Err(Error::NoUniversalVertex(_))
        ));
        assert!(matches!(
            dilation_lower_bound(&w15, &c5),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn congestion_bounds() {
        let r = congestion_lower_bound(
            &families::windmill(8).unwrap(),
            &families::circulant(16, &[1, 4]).unwrap(),
        )
        .unwrap();
        assert_eq!(r.bound, 4);
        let r = congestion_lower_bound(
            &families::wheel(8).unwrap(),
            &families::circulant(8, &[1, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(r.bound, 2);
        let r = congestion_lower_bound(&families::star(9).unwrap(), &families::cycle(9).unwrap()).unwrap();
        assert_eq!(r.bound, 4);
    }

    #[test]
    fn wirelength_bounds() {
        let c8 = families::circulant(8, &[1, 2]).unwrap();
        let r = wirelength_lower_bound(Rim::Cycle, &c8, Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (17, Some(17), Some(true)));
        let r = wirelength_lower_bound(Rim::Path, &c8, Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (16, Some(16), Some(true)));
        let s8 = families::star(8).unwrap();
        let r = wirelength_lower_bound(Rim::Cycle, &s8, Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (14, None, Some(false)));
        let disc = Graph::new(4, [(1, 2)]).unwrap();
        assert!(wirelength_lower_bound(Rim::Cycle, &disc, Budget::UNLIMITED).is_err());
    }

    #[test]
    fn wirelength_uses_any_median() {
        // medians {1, 2, 3, 5} with status 5; H - 1 leaves 4 pendent, H - 2
        // has the cycle 1-3-5-4
        let h = Graph::new(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert!(matches!(
            embedding::embed_wheel_via_median(&h),
            Err(Error::NoHamiltonian { removed: 1, .. })
        ));
        let r = wirelength_lower_bound(Rim::Cycle, &h, Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (9, Some(9), Some(true)));
        assert_eq!(r.witness.unwrap().image(1), 2);
    }

    #[test]
    fn verify_examples() {
        let inst: TheoremInstance = "dil-hypertree star 4".parse().unwrap();
        let r = verify_theorem(&inst, Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (3, Some(3), Some(true)));
        let r = verify_theorem(&"ec-windmill 5".parse().unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (8, Some(8), Some(true)));
        let r = verify_theorem(&"wl-wheel torus 3 3".parse().unwrap(), Budget::UNLIMITED).unwrap();
        assert_eq!((r.bound, r.achieved, r.sharp), (20, Some(20), Some(true)));
        assert!("dil-cube star 4".parse::<TheoremInstance>().is_err());
        assert!(verify_theorem(&"ec-windmill 2".parse().unwrap(), Budget::UNLIMITED).is_err());
    }

    #[test]
    fn sizes_swap_in() {
        let inst: TheoremInstance = "wl-fan circulant 8 1 2".parse().unwrap();
        assert_eq!(inst.with_size(10).to_string(), "wl-fan circulant 10 1 2");
    }
}

//! Command line front end. [`run`] parses arguments and returns the exit
//! status together with what should be written to stdout and stderr, so it
//! can be driven from tests without spawning a process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::bounds::{self, BoundReport, TheoremInstance};
use crate::dot::export_dot;
use crate::embedding::{self, evaluate, EmbeddingMap, EmbeddingMetrics, Rim};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, Vertex};
use crate::hamiltonian::{self, Budget, HamiltonicityReport, Verdict};
use crate::oracle::{self, OracleConfig, OracleMetric};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wheelnet", version, about = "Embed wheel-like graphs into interconnection networks and measure dilation, congestion and wirelength")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for oracle runs and sweeps.
    #[arg(long, global = true, env = "WHEELNET_JOBS")]
    jobs: Option<usize>,
    /// Node cap for hamiltonian searches.
    #[arg(long, global = true)]
    node_limit: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a named family.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an embedding of a guest into a host.
    Embed {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        method: Method,
        /// Seed for `--method random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dilation, congestion and wirelength of an embedding.
    Metrics {
        #[command(flatten)]
        pair: Pair,
        /// Embedding JSON as written by `embed`.
        #[arg(long, conflicts_with = "method")]
        embedding: Option<PathBuf>,
        /// Build the embedding instead of reading it.
        #[arg(long, value_enum)]
        method: Option<Method>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lower bound for one metric, with a constructive witness when known.
    Bound {
        #[arg(long)]
        guest: Option<PathBuf>,
        #[arg(long)]
        host: PathBuf,
        #[arg(long, value_enum)]
        metric: MetricArg,
        /// Guest shape for wirelength; inferred from the guest when omitted.
        #[arg(long, value_enum)]
        kind: Option<RimArg>,
    },
    /// Check a theorem instance or a sweep of instances.
    Verify {
        id: String,
        params: Vec<String>,
        /// Inclusive range `a..b` substituted for the size parameter.
        #[arg(long)]
        sweep: Option<String>,
    },
    /// Hamiltonicity and fault-tolerance queries.
    Ham {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        query: Query,
        #[arg(long, default_value_t = 1)]
        f: usize,
        /// Required endpoints `u,v` for a path query.
        #[arg(long)]
        ends: Option<String>,
    },
    /// Exact optimum by exhaustive search over bijections.
    Oracle {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long, default_value_t = 9)]
        limit: usize,
        /// Evaluate every bijection without pruning.
        #[arg(long)]
        no_prune: bool,
        /// Largest number of shortest-path routings tried per bijection.
        #[arg(long, default_value_t = 1 << 16)]
        routing_cap: u64,
    },
    /// Graphviz DOT of a graph, or of a host annotated with congestion.
    Export {
        #[arg(long)]
        graph: PathBuf,
        /// Guest of the embedding whose congestion annotates `--graph`.
        #[arg(long, requires = "embedding")]
        guest: Option<PathBuf>,
        #[arg(long, requires = "guest")]
        embedding: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long)]
    guest: PathBuf,
    #[arg(long)]
    host: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Preorder,
    Windmill,
    MedianWheel,
    MedianFan,
    Identity,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MetricArg {
    Dil,
    Ec,
    Wl,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RimArg {
    Wheel,
    Fan,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Query {
    Cycle,
    Path,
    FfaultHam,
    FfaultTrace,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

struct Ctx {
    format: Format,
    jobs: Option<usize>,
    budget: Budget,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    if cli.jobs == Some(0) {
        return failure(Error::Precondition("--jobs must be positive".into()));
    }
    let ctx = Ctx {
        format: cli.format,
        jobs: cli.jobs,
        budget: cli.node_limit.map_or(Budget::UNLIMITED, Budget::nodes),
    };
    match dispatch(&ctx, cli.command) {
        Ok(out) => out,
        Err(e) => failure(e),
    }
}

fn failure(e: Error) -> Outcome {
    let code = match e {
        Error::Inconclusive(_) => EXIT_INCONCLUSIVE,
        _ => EXIT_INVALID,
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_json(&text).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn write_or_return(out: Option<PathBuf>, text: String) -> Result<String> {
    match out {
        Some(path) => {
            fs::write(&path, &text)
                .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<Outcome> {
    match command {
        Command::Gen { family, params, out } => {
            let spec = FamilySpec::new(family.parse()?, params);
            let g = spec.build()?;
            let text = match ctx.format {
                Format::Json => format!("{}\n", g.to_json()),
                Format::Text => graph_text(&g),
                Format::Dot => export_dot(&g, None),
            };
            write_or_return(out, text).map(Outcome::ok)
        }
        Command::Embed {
            pair,
            method,
            seed,
            out,
        } => {
            let (guest, host) = (read_graph(&pair.guest)?, read_graph(&pair.host)?);
            let emb = build_embedding(ctx, &guest, &host, method, seed)?;
            let text = match ctx.format {
                Format::Json => pretty(&emb.to_json()),
                Format::Text => embedding_text(&emb),
                Format::Dot => export_dot(emb.host(), Some(&evaluate(&emb))),
            };
            write_or_return(out, text).map(Outcome::ok)
        }
        Command::Metrics {
            pair,
            embedding,
            method,
            seed,
        } => {
            let (guest, host) = (read_graph(&pair.guest)?, read_graph(&pair.host)?);
            let emb = match (embedding, method) {
                (Some(path), _) => load_embedding(guest, host, &path)?,
                (None, Some(m)) => build_embedding(ctx, &guest, &host, m, seed)?,
                (None, None) => return Err(Error::Precondition("give --embedding or --method".into())),
            };
            let m = evaluate(&emb);
            Ok(Outcome::ok(match ctx.format {
                Format::Json => pretty(&m.to_json()),
                Format::Text => metrics_text(&m),
                Format::Dot => export_dot(emb.host(), Some(&m)),
            }))
        }
        Command::Bound {
            guest,
            host,
            metric,
            kind,
        } => {
            let h = read_graph(&host)?;
            let g = guest.as_deref().map(read_graph).transpose()?;
            let report = match metric {
                MetricArg::Dil => bounds::dilation_lower_bound(need_guest(&g)?, &h)?,
                MetricArg::Ec => bounds::congestion_lower_bound(need_guest(&g)?, &h)?,
                MetricArg::Wl => {
                    let rim = match (kind, &g) {
                        (Some(RimArg::Wheel), _) => Rim::Cycle,
                        (Some(RimArg::Fan), _) => Rim::Path,
                        (None, Some(g)) => infer_rim(g)?,
                        (None, None) => return Err(Error::Precondition("give --kind or --guest".into())),
                    };
                    bounds::wirelength_lower_bound(rim, &h, ctx.budget)?
                }
            };
            bound_outcome(ctx, std::slice::from_ref(&report))
        }
        Command::Verify { id, params, sweep } => {
            let base = TheoremInstance::parse(&id, &params)?;
            let instances = match sweep {
                None => vec![base],
                Some(range) => {
                    let (lo, hi) = parse_range(&range)?;
                    (lo..=hi).map(|s| base.with_size(s)).collect()
                }
            };
            let budget = ctx.budget;
            let reports = in_pool(ctx.jobs, || {
                instances
                    .par_iter()
                    .map(|inst| bounds::verify_theorem(inst, budget))
                    .collect::<Result<Vec<_>>>()
            })?;
            bound_outcome(ctx, &reports)
        }
        Command::Ham { graph, query, f, ends } => {
            let g = read_graph(&graph)?;
            let report = match query {
                Query::Cycle => hamiltonian::cycle_report(&g, ctx.budget),
                Query::Path => {
                    let ends = ends.as_deref().map(parse_pair).transpose()?;
                    if let Some((u, v)) = ends {
                        g.check_vertex(u)?;
                        g.check_vertex(v)?;
                    }
                    hamiltonian::path_report(&g, ends, ctx.budget)
                }
                Query::FfaultHam => {
                    in_pool(ctx.jobs, || hamiltonian::is_f_fault_hamiltonian(&g, f, ctx.budget))
                }
                Query::FfaultTrace => {
                    in_pool(ctx.jobs, || hamiltonian::is_f_fault_traceable(&g, f, ctx.budget))
                }
            };
            Ok(ham_outcome(ctx, &report))
        }
        Command::Oracle {
            pair,
            metric,
            limit,
            no_prune,
            routing_cap,
        } => {
            if limit == 0 {
                return Err(Error::Precondition("--limit must be positive".into()));
            }
            let (guest, host) = (read_graph(&pair.guest)?, read_graph(&pair.host)?);
            let config = OracleConfig {
                limit,
                jobs: ctx.jobs,
                prune: !no_prune,
                routing_cap,
            };
            let metric = match metric {
                MetricArg::Dil => OracleMetric::Dilation,
                MetricArg::Ec => OracleMetric::Congestion,
                MetricArg::Wl => OracleMetric::Wirelength,
            };
            let r = oracle::exact(metric, &guest, &host, &config)?;
            Ok(Outcome::ok(match ctx.format {
                Format::Text => {
                    let mut s = format!(
                        "metric        {:?}\noptimum       {}\nwitness       {:?}\nsearch space  {}\nexact         {}\n",
                        r.metric, r.optimum, r.witness_vmap, r.search_space, r.exact
                    );
                    if r.shortest_paths_only {
                        s.push_str("routing       shortest paths only\n");
                    }
                    s
                }
                _ => pretty(&serde_json::to_value(&r).expect("serializable")),
            }))
        }
        Command::Export {
            graph,
            guest,
            embedding,
        } => {
            let host = read_graph(&graph)?;
            let text = match (guest, embedding) {
                (Some(gp), Some(ep)) => {
                    let emb = load_embedding(read_graph(&gp)?, host, &ep)?;
                    export_dot(emb.host(), Some(&evaluate(&emb)))
                }
                _ => export_dot(&host, None),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn need_guest(g: &Option<Graph>) -> Result<&Graph> {
    g.as_ref()
        .ok_or_else(|| Error::Precondition("this metric needs --guest".into()))
}

/// Wheel if the guest minus its universal vertex is 2-regular, fan if it is
/// a path.
fn infer_rim(g: &Graph) -> Result<Rim> {
    let hub = g
        .universal_vertex()
        .ok_or_else(|| Error::NoUniversalVertex(g.name().to_string()))?;
    let n = g.order();
    if n >= 4 && g.size() == 2 * (n - 1) {
        let (rest, _) = g.remove_vertices(&[hub].into());
        if rest.min_degree() == 2 && rest.max_degree() == 2 && rest.is_connected() {
            return Ok(Rim::Cycle);
        }
    }
    if n >= 3 && g.size() == 2 * n - 3 {
        let (rest, _) = g.remove_vertices(&[hub].into());
        if rest.max_degree() <= 2 && rest.is_connected() {
            return Ok(Rim::Path);
        }
    }
    Err(Error::Precondition(format!(
        "{} is neither a wheel nor a fan; pass --kind",
        g.name()
    )))
}

fn build_embedding(ctx: &Ctx, guest: &Graph, host: &Graph, method: Method, seed: u64) -> Result<EmbeddingMap> {
    match method {
        Method::Preorder => embedding::embed_preorder(guest, host),
        Method::Windmill => embedding::route_windmill(guest, host),
        Method::Identity => embedding::embed_identity(guest, host),
        Method::Random => embedding::embed_random(guest, host, &mut ChaCha8Rng::seed_from_u64(seed)),
        Method::MedianWheel | Method::MedianFan => {
            let emb = if method == Method::MedianWheel {
                embedding::embed_wheel_via_median_with(host, ctx.budget)?
            } else {
                embedding::embed_fan_via_median_with(host, ctx.budget)?
            };
            if emb.guest().edge_set() != guest.edge_set() || emb.guest().order() != guest.order() {
                return Err(Error::Precondition(format!(
                    "guest {} is not the standard labelled {}",
                    guest.name(),
                    emb.guest().name()
                )));
            }
            Ok(emb)
        }
    }
}

fn load_embedding(guest: Graph, host: Graph, path: &Path) -> Result<EmbeddingMap> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
    EmbeddingMap::from_json(guest, host, &text)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Precondition(format!("bad range `{s}`, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_pair(s: &str) -> Result<(Vertex, Vertex)> {
    let bad = || Error::Precondition(format!("bad vertex pair `{s}`, expected u,v"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn bound_outcome(ctx: &Ctx, reports: &[BoundReport]) -> Result<Outcome> {
    let stdout = match ctx.format {
        Format::Text => bound_table(reports),
        Format::Dot => match reports {
            [BoundReport {
                witness: Some(emb), ..
            }] => export_dot(emb.host(), Some(&evaluate(emb))),
            _ => return Err(Error::Precondition("dot output needs a single report with a witness".into())),
        },
        Format::Json => {
            let rows: Vec<Value> = reports.iter().map(|r| r.to_json(false)).collect();
            pretty(&Value::Array(rows))
        }
    };
    let code = if reports.iter().any(|r| r.inconclusive) {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn ham_outcome(ctx: &Ctx, report: &HamiltonicityReport) -> Outcome {
    let stdout = match ctx.format {
        Format::Text => ham_text(report),
        _ => pretty(&serde_json::to_value(report).expect("serializable")),
    };
    Outcome {
        code: if report.verdict == Verdict::Inconclusive {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        },
        stdout,
        stderr: String::new(),
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn bound_table(reports: &[BoundReport]) -> String {
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.instance.clone(),
                r.metric.to_string(),
                r.bound.to_string(),
                opt(r.achieved),
                if r.inconclusive {
                    "?".to_string()
                } else {
                    opt(r.sharp)
                },
            ]
        })
        .collect();
    let header = ["instance", "metric", "bound", "achieved", "sharp"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (cell, w))| if i == 0 { format!("{cell:<w$}") } else { format!("{cell:>w$}") })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    for r in reports {
        for note in &r.notes {
            writeln!(out, "# {}: {note}", r.instance).unwrap();
        }
    }
    out
}

fn graph_text(g: &Graph) -> String {
    let mut out = format!("{} order {} size {}\n", g.name(), g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn embedding_text(emb: &EmbeddingMap) -> String {
    let mut out = format!("{} -> {}\n", emb.guest().name(), emb.host().name());
    for (g, h) in emb.vmap().iter().enumerate() {
        writeln!(out, "{} -> {h}", g + 1).unwrap();
    }
    for ((u, v), path) in emb.routes() {
        let hops: Vec<String> = path.iter().map(Vertex::to_string).collect();
        writeln!(out, "{u}-{v}: {}", hops.join(" ")).unwrap();
    }
    out
}

fn metrics_text(m: &EmbeddingMetrics) -> String {
    let mut out = format!(
        "max dilation    {}\nmax congestion  {}\nwirelength      {}\n",
        m.max_dilation, m.max_congestion, m.wirelength
    );
    out.push_str("\nguest edge  dilation\n");
    for ((u, v), d) in &m.dilation {
        writeln!(out, "{:<10}  {d:>8}", format!("{u}-{v}")).unwrap();
    }
    out.push_str("\nhost edge   congestion\n");
    for ((u, v), c) in &m.congestion {
        writeln!(out, "{:<10}  {c:>10}", format!("{u}-{v}")).unwrap();
    }
    out
}

fn ham_text(r: &HamiltonicityReport) -> String {
    let verdict = match r.verdict {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Inconclusive => "inconclusive",
    };
    let mut out = format!("{}: {verdict}\n", r.query);
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {w:?}").unwrap();
    }
    if let Some(f) = &r.failing_fault {
        writeln!(
            out,
            "failing fault: vertices {:?} edges {:?}",
            f.faulty_vertices, f.faulty_edges
        )
        .unwrap();
    }
    if let Some(p) = r.failing_pair {
        writeln!(out, "failing pair: {p:?}").unwrap();
    }
    if r.faults_checked > 0 {
        writeln!(out, "fault sets checked: {}", r.faults_checked).unwrap();
    }
    if let Some(h) = r.hypohamiltonian {
        writeln!(out, "hypohamiltonian: {h}").unwrap();
    }
    for note in &r.notes {
        writeln!(out, "# {note}").unwrap();
    }
    out
}

/// Help text is part of the stable interface.
pub fn help() -> String {
    use clap::CommandFactory;
    Cli::command().render_help().to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let out = run(std::iter::once("wheelnet").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{}", out.stderr);
        out.stdout
    }

    #[test]
    fn gen_hypertree() {
        let v: Value = serde_json::from_str(&run_ok(&["gen", "hypertree", "4"])).unwrap();
        assert_eq!(v["order"], 15);
        assert_eq!(v["edges"].as_array().unwrap().len(), 21);
    }

    #[test]
    fn verify_windmill_sweep() {
        let v: Value = serde_json::from_str(&run_ok(&["verify", "ec-windmill", "3", "--sweep", "3..6"])).unwrap();
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 4);
        for (row, n) in rows.iter().zip(3..) {
            assert_eq!(row["sharp"], true);
            assert_eq!(row["achieved"], 1 << (n - 2));
        }
        let text = run_ok(&["--format", "text", "verify", "ec-windmill", "3", "--sweep", "3..6"]);
        assert_eq!(text.lines().next().unwrap().split_whitespace().next(), Some("instance"));
    }

    #[test]
    fn errors_exit_one() {
        let out = run(["wheelnet", "gen", "nosuch", "3"]);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("nosuch"));
        assert_eq!(run(["wheelnet", "gen", "wheel", "2"]).code, 1);
        assert_eq!(run(["wheelnet", "frobnicate"]).code, 1);
        assert_eq!(run(["wheelnet", "verify", "dil-nope", "star", "3"]).code, 1);
    }

    #[test]
    fn help_and_version_exit_zero() {
        let out = run(["wheelnet", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("oracle"));
        assert!(run(["wheelnet", "--version"]).stdout.contains(env!("CARGO_PKG_VERSION")));
        assert!(help().contains("verify"));
    }

    #[test]
    fn ranges_and_pairs() {
        assert_eq!(parse_range("3..6").unwrap(), (3, 6));
        assert_eq!(parse_range("3..=6").unwrap(), (3, 6));
        assert!(parse_range("6..3").is_err());
        assert!(parse_range("x").is_err());
        assert_eq!(parse_pair("1, 4").unwrap(), (1, 4));
    }

    #[test]
    fn rim_inference() {
        let w = crate::families::wheel(8).unwrap();
        assert_eq!(infer_rim(&w).unwrap(), Rim::Cycle);
        let f = crate::families::fan(8).unwrap();
        assert_eq!(infer_rim(&f).unwrap(), Rim::Path);
        assert!(infer_rim(&crate::families::star(5).unwrap()).is_err());
    }
}

//! Exact hamiltonian cycle and path search, and fault-tolerant
//! hamiltonicity / traceability classification.
//!
//! The search is plain backtracking from the smallest admissible start,
//! branching on neighbours in increasing id order, so the first witness
//! found is the lexicographically least one. Two cuts keep it fast on the
//! small hosts used here: every unvisited vertex must keep enough usable
//! neighbours, and the unvisited vertices must stay reachable from the
//! current endpoint. Neither cut discards a feasible extension.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// Node-expansion cap for a single search; `None` means unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }
}

/// Outcome of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    /// The budget ran out after this many expansions.
    Inconclusive(u64),
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Cycle,
    Path,
    PathTo(Vertex),
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct Searcher<'a> {
    g: &'a Graph,
    mode: Mode,
    visited: Vec<bool>,
    path: Vec<Vertex>,
    nodes: u64,
    limit: Option<u64>,
    // scratch for the reachability cut
    seen: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, mode: Mode, budget: Budget) -> Self {
        let n = g.order();
        Searcher {
            g,
            mode,
            visited: vec![false; n + 1],
            path: Vec::with_capacity(n),
            nodes: 0,
            limit: budget.max_nodes,
            seen: vec![false; n + 1],
            queue: VecDeque::with_capacity(n),
        }
    }

    fn run_from(&mut self, start: Vertex) -> Step {
        self.path.clear();
        self.visited.iter_mut().for_each(|b| *b = false);
        self.path.push(start);
        self.visited[start] = true;
        self.dfs()
    }

    fn complete(&self) -> bool {
        let cur = *self.path.last().unwrap();
        match self.mode {
            Mode::Cycle => self.g.has_edge(cur, self.path[0]),
            Mode::Path => true,
            Mode::PathTo(t) => cur == t,
        }
    }

    /// Necessary conditions for extending the current path to a witness.
    fn feasible(&mut self) -> bool {
        let g = self.g;
        let n = g.order();
        let cur = *self.path.last().unwrap();
        let start = self.path[0];
        let mut low_degree = 0;
        for w in 1..=n {
            if self.visited[w] {
                continue;
            }
            let avail = g
                .neighbors(w)
                .iter()
                .filter(|&&x| {
                    !self.visited[x] || x == cur || (self.mode == Mode::Cycle && x == start)
                })
                .count();
            match self.mode {
                Mode::Cycle => {
                    if avail < 2 {
                        return false;
                    }
                }
                Mode::PathTo(t) => {
                    if avail < if w == t { 1 } else { 2 } {
                        return false;
                    }
                }
                Mode::Path => {
                    if avail == 0 {
                        return false;
                    }
                    if avail == 1 {
                        low_degree += 1;
                        if low_degree > 1 {
                            return false;
                        }
                    }
                }
            }
        }
        if self.mode == Mode::Cycle && self.path.len() > 1 {
            let closable = g.neighbors(start).iter().any(|&x| !self.visited[x]);
            if !closable {
                return false;
            }
        }
        // every unvisited vertex reachable from cur through unvisited vertices
        self.seen.iter_mut().for_each(|b| *b = false);
        self.queue.clear();
        self.queue.push_back(cur);
        self.seen[cur] = true;
        let mut reached = 0;
        while let Some(x) = self.queue.pop_front() {
            for &y in g.neighbors(x) {
                if !self.visited[y] && !self.seen[y] {
                    self.seen[y] = true;
                    reached += 1;
                    self.queue.push_back(y);
                }
            }
        }
        reached == n - self.path.len()
    }

    fn dfs(&mut self) -> Step {
        self.nodes += 1;
        if self.limit.is_some_and(|cap| self.nodes > cap) {
            return Step::OutOfBudget;
        }
        let n = self.g.order();
        if self.path.len() == n {
            return if self.complete() { Step::Found } else { Step::Dead };
        }
        if !self.feasible() {
            return Step::Dead;
        }
        let cur = *self.path.last().unwrap();
        let g = self.g;
        for &next in g.neighbors(cur) {
            if self.visited[next] {
                continue;
            }
            if let Mode::PathTo(t) = self.mode {
                if next == t && self.path.len() + 1 < n {
                    continue;
                }
            }
            self.visited[next] = true;
            self.path.push(next);
            match self.dfs() {
                Step::Dead => {}
                other => return other,
            }
            self.path.pop();
            self.visited[next] = false;
        }
        Step::Dead
    }
}

/// Hamiltonian cycle search. Graphs with fewer than three vertices have no
/// cycle. The witness starts at vertex 1.
pub fn search_cycle(g: &Graph, budget: Budget) -> Search<Vec<Vertex>> {
    if g.order() < 3 {
        return Search::Absent;
    }
    let mut s = Searcher::new(g, Mode::Cycle, budget);
    match s.run_from(1) {
        Step::Found => Search::Found(s.path),
        Step::Dead => Search::Absent,
        Step::OutOfBudget => Search::Inconclusive(s.nodes),
    }
}

/// Hamiltonian path search, optionally between fixed ends `(u, v)`.
/// A single vertex is a path of length 0; the empty graph has none.
pub fn search_path(g: &Graph, ends: Option<(Vertex, Vertex)>, budget: Budget) -> Search<Vec<Vertex>> {
    let n = g.order();
    if n == 0 {
        return Search::Absent;
    }
    match ends {
        Some((u, v)) => {
            if !g.contains(u) || !g.contains(v) || (u == v && n > 1) {
                return Search::Absent;
            }
            let mode = if u == v { Mode::Path } else { Mode::PathTo(v) };
            let mut s = Searcher::new(g, mode, budget);
            match s.run_from(u) {
                Step::Found => Search::Found(s.path),
                Step::Dead => Search::Absent,
                Step::OutOfBudget => Search::Inconclusive(s.nodes),
            }
        }
        None => {
            let mut s = Searcher::new(g, Mode::Path, budget);
            for start in 1..=n {
                match s.run_from(start) {
                    Step::Found => return Search::Found(s.path),
                    Step::Dead => {}
                    Step::OutOfBudget => return Search::Inconclusive(s.nodes),
                }
            }
            Search::Absent
        }
    }
}

pub fn find_hamiltonian_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    search_cycle(g, Budget::UNLIMITED).found()
}

pub fn find_hamiltonian_path(g: &Graph, ends: Option<(Vertex, Vertex)>) -> Option<Vec<Vertex>> {
    search_path(g, ends, Budget::UNLIMITED).found()
}

/// A set of faulty vertices and edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FaultSpec {
    pub faulty_vertices: BTreeSet<Vertex>,
    pub faulty_edges: BTreeSet<Edge>,
}

impl FaultSpec {
    pub fn size(&self) -> usize {
        self.faulty_vertices.len() + self.faulty_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Surviving graph (labels compacted) and the new-to-old label map.
    pub fn apply(&self, g: &Graph) -> (Graph, Vec<Vertex>) {
        g.remove_edges(&self.faulty_edges)
            .remove_vertices(&self.faulty_vertices)
    }
}

fn combinations<T: Copy>(items: &[T], k: usize, out: &mut Vec<Vec<T>>) {
    fn rec<T: Copy>(items: &[T], k: usize, from: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), out);
}

/// All fault sets of total size at most `f`, in canonical order: by size;
/// within a size, vertex-only sets, then edge-only sets, then mixed sets
/// with more vertices first. Each group is lexicographic. Mixed sets skip
/// edges incident to a faulty vertex (the vertex already removes them).
pub fn enumerate_faults(g: &Graph, f: usize) -> Vec<FaultSpec> {
    let vertices: Vec<Vertex> = g.vertices().collect();
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = vec![FaultSpec::default()];
    for k in 1..=f {
        let mut vs = Vec::new();
        combinations(&vertices, k, &mut vs);
        out.extend(vs.into_iter().map(|v| FaultSpec {
            faulty_vertices: v.into_iter().collect(),
            faulty_edges: BTreeSet::new(),
        }));
        let mut es = Vec::new();
        combinations(&edges, k, &mut es);
        out.extend(es.into_iter().map(|e| FaultSpec {
            faulty_vertices: BTreeSet::new(),
            faulty_edges: e.into_iter().collect(),
        }));
        for j in (1..k).rev() {
            let mut vs = Vec::new();
            combinations(&vertices, j, &mut vs);
            for v in vs {
                let free: Vec<Edge> = edges
                    .iter()
                    .copied()
                    .filter(|(a, b)| !v.contains(a) && !v.contains(b))
                    .collect();
                let mut es = Vec::new();
                combinations(&free, k - j, &mut es);
                out.extend(es.into_iter().map(|e| FaultSpec {
                    faulty_vertices: v.iter().copied().collect(),
                    faulty_edges: e.into_iter().collect(),
                }));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HamiltonicityReport {
    pub query: String,
    pub verdict: Verdict,
    /// Witness cycle or path of the fault-free graph, when one was found.
    pub witness: Option<Vec<Vertex>>,
    /// First failing fault set in canonical order.
    pub failing_fault: Option<FaultSpec>,
    /// For traceability: the pair left without a spanning path.
    pub failing_pair: Option<(Vertex, Vertex)>,
    pub faults_checked: usize,
    /// Set when the graph fails at the empty fault set: whether every
    /// single-vertex deletion is hamiltonian.
    pub hypohamiltonian: Option<bool>,
    pub notes: Vec<String>,
}

impl HamiltonicityReport {
    fn new(query: impl Into<String>, verdict: Verdict) -> Self {
        HamiltonicityReport {
            query: query.into(),
            verdict,
            witness: None,
            failing_fault: None,
            failing_pair: None,
            faults_checked: 0,
            hypohamiltonian: None,
            notes: Vec::new(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Report for a plain cycle or path query.
pub fn cycle_report(g: &Graph, budget: Budget) -> HamiltonicityReport {
    search_report("cycle", search_cycle(g, budget))
}

pub fn path_report(g: &Graph, ends: Option<(Vertex, Vertex)>, budget: Budget) -> HamiltonicityReport {
    search_report("path", search_path(g, ends, budget))
}

fn search_report(query: &str, s: Search<Vec<Vertex>>) -> HamiltonicityReport {
    match s {
        Search::Found(w) => {
            let mut r = HamiltonicityReport::new(query, Verdict::Holds);
            r.witness = Some(w);
            r
        }
        Search::Absent => HamiltonicityReport::new(query, Verdict::Fails),
        Search::Inconclusive(nodes) => {
            let mut r = HamiltonicityReport::new(query, Verdict::Inconclusive);
            r.notes.push(format!("search budget exhausted after {nodes} expansions"));
            r
        }
    }
}

enum FaultOutcome {
    Ok,
    Fail(Option<(Vertex, Vertex)>),
    Unknown,
}

const CHUNK: usize = 64;

/// Evaluates `check` over the faults in canonical order, in parallel chunks,
/// stopping after the first chunk that contains a failure. The reported
/// failure is the earliest one regardless of scheduling.
fn sweep<F>(g: &Graph, f: usize, query: String, check: F) -> HamiltonicityReport
where
    F: Fn(&FaultSpec) -> FaultOutcome + Sync,
{
    let faults = enumerate_faults(g, f);
    let mut inconclusive = 0usize;
    let mut checked = 0usize;
    for chunk in faults.chunks(CHUNK) {
        let outcomes: Vec<FaultOutcome> = chunk.par_iter().map(&check).collect();
        for (fault, outcome) in chunk.iter().zip(outcomes) {
            checked += 1;
            match outcome {
                FaultOutcome::Ok => {}
                FaultOutcome::Unknown => inconclusive += 1,
                FaultOutcome::Fail(pair) => {
                    let mut r = HamiltonicityReport::new(query, Verdict::Fails);
                    r.failing_fault = Some(fault.clone());
                    r.failing_pair = pair;
                    r.faults_checked = checked;
                    return r;
                }
            }
        }
    }
    let verdict = if inconclusive > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Holds
    };
    let mut r = HamiltonicityReport::new(query, verdict);
    r.faults_checked = checked;
    if inconclusive > 0 {
        r.notes
            .push(format!("{inconclusive} fault sets exhausted the search budget"));
    }
    r
}

/// Whether the graph is not hamiltonian but every single-vertex deletion is.
/// `None` if some search ran out of budget.
pub fn is_hypohamiltonian(g: &Graph, budget: Budget) -> Option<bool> {
    match search_cycle(g, budget) {
        Search::Found(_) => return Some(false),
        Search::Inconclusive(_) => return None,
        Search::Absent => {}
    }
    let mut all = true;
    for v in g.vertices() {
        match search_cycle(&g.remove_vertices(&BTreeSet::from([v])).0, budget) {
            Search::Found(_) => {}
            Search::Absent => all = false,
            Search::Inconclusive(_) => return None,
        }
        if !all {
            break;
        }
    }
    Some(all)
}

/// `g` is f-fault hamiltonian when, for every fault set of size at most
/// `f`, the surviving graph has a cycle through all surviving vertices.
/// The definition is applied literally, so a non-hamiltonian graph fails at
/// the empty fault set for every `f`; the report then records whether the
/// graph is hypohamiltonian.
pub fn is_f_fault_hamiltonian(g: &Graph, f: usize, budget: Budget) -> HamiltonicityReport {
    let mut report = sweep(g, f, format!("{f}-fault hamiltonian"), |fault| {
        let (rest, _) = fault.apply(g);
        match search_cycle(&rest, budget) {
            Search::Found(_) => FaultOutcome::Ok,
            Search::Absent => FaultOutcome::Fail(None),
            Search::Inconclusive(_) => FaultOutcome::Unknown,
        }
    });
    if let Search::Found(c) = search_cycle(g, budget) {
        report.witness = Some(c);
    }
    if report.failing_fault.as_ref().is_some_and(FaultSpec::is_empty) {
        report.notes.push(
            "fails at the empty fault set: the graph itself has no hamiltonian cycle".into(),
        );
        report.hypohamiltonian = is_hypohamiltonian(g, budget);
        if report.hypohamiltonian == Some(true) {
            report.notes.push(
                "every single-vertex deletion is hamiltonian (hypohamiltonian); \
                 fault tolerance holds for vertex faults only, not under the literal definition"
                    .into(),
            );
        }
    }
    report
}

/// `g` is f-fault traceable when, for every fault set of size at most `f`
/// and every pair of surviving vertices, a hamiltonian path of the
/// surviving graph joins the pair.
pub fn is_f_fault_traceable(g: &Graph, f: usize, budget: Budget) -> HamiltonicityReport {
    let mut report = sweep(g, f, format!("{f}-fault traceable"), |fault| {
        let (rest, labels) = fault.apply(g);
        let mut unknown = false;
        for u in rest.vertices() {
            for v in u + 1..=rest.order() {
                match search_path(&rest, Some((u, v)), budget) {
                    Search::Found(_) => {}
                    Search::Absent => return FaultOutcome::Fail(Some((labels[u - 1], labels[v - 1]))),
                    Search::Inconclusive(_) => unknown = true,
                }
            }
        }
        if unknown {
            FaultOutcome::Unknown
        } else {
            FaultOutcome::Ok
        }
    });
    if let Search::Found(p) = search_path(g, None, budget) {
        report.witness = Some(p);
    }
    report
}

/// A hamiltonian path of a 2-fault hamiltonian graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaPath {
    pub path: Vec<Vertex>,
    /// The two vertices deleted before taking the cycle, when the
    /// cycle-plus-attachment construction produced the path.
    pub deleted: Option<(Vertex, Vertex)>,
    /// False when the construction did not span and direct search was used.
    pub via_construction: bool,
}

/// Deletes two vertices `a, b`, takes a hamiltonian cycle `C` of the rest,
/// opens `C` at a neighbour `w` of `a` (dropping one cycle edge `(z, w)`),
/// hangs `a` on `w`, and then tries to attach `b` at either end of the
/// resulting path. Pairs are tried in lexicographic order; if no pair
/// spans, falls back to direct search.
pub fn path_from_2fault_hamiltonian(g: &Graph, budget: Budget) -> Result<LemmaPath> {
    let check = is_f_fault_hamiltonian(g, 2, budget);
    match check.verdict {
        Verdict::Holds => {}
        Verdict::Fails => {
            return Err(Error::Precondition(format!(
                "{} is not 2-fault hamiltonian",
                g.name()
            )))
        }
        Verdict::Inconclusive => return Err(Error::Inconclusive(budget.max_nodes.unwrap_or(0))),
    }
    if let Some(p) = lemma_construction(g, budget) {
        return Ok(p);
    }
    match search_path(g, None, budget) {
        Search::Found(path) => Ok(LemmaPath {
            path,
            deleted: None,
            via_construction: false,
        }),
        Search::Absent => Err(Error::Precondition(format!(
            "{} has no hamiltonian path",
            g.name()
        ))),
        Search::Inconclusive(n) => Err(Error::Inconclusive(n)),
    }
}

fn lemma_construction(g: &Graph, budget: Budget) -> Option<LemmaPath> {
    let n = g.order();
    for u in 1..=n {
        for v in u + 1..=n {
            let (rest, labels) = g.remove_vertices(&BTreeSet::from([u, v]));
            let Search::Found(c) = search_cycle(&rest, budget) else {
                continue;
            };
            let cycle: Vec<Vertex> = c.iter().map(|&x| labels[x - 1]).collect();
            let len = cycle.len();
            for (a, b) in [(u, v), (v, u)] {
                for i in 0..len {
                    let w = cycle[i];
                    if !g.has_edge(a, w) {
                        continue;
                    }
                    for forward in [true, false] {
                        // a, w, then around the cycle away from the dropped edge
                        let mut path = vec![a];
                        path.extend((0..len).map(|k| {
                            if forward {
                                cycle[(i + k) % len]
                            } else {
                                cycle[(i + len - k) % len]
                            }
                        }));
                        let z = *path.last().unwrap();
                        if g.has_edge(z, b) {
                            path.push(b);
                        } else if g.has_edge(b, a) {
                            path.insert(0, b);
                        } else {
                            continue;
                        }
                        return Some(LemmaPath {
                            path,
                            deleted: Some((u, v)),
                            via_construction: true,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Checks that `walk` is a hamiltonian path of `g` (or a cycle when
/// `closed`).
pub fn is_hamiltonian_walk(g: &Graph, walk: &[Vertex], closed: bool) -> bool {
    let distinct: BTreeSet<_> = walk.iter().copied().collect();
    if walk.len() != g.order() || distinct.len() != walk.len() || !walk.iter().all(|&v| g.contains(v)) {
        return false;
    }
    if !walk.windows(2).all(|w| g.has_edge(w[0], w[1])) {
        return false;
    }
    !closed || (walk.len() >= 3 && g.has_edge(walk[0], walk[walk.len() - 1]))
}

//! End-to-end list-3-coloring: K4 screening, per-component dominating-set
//! construction, certificate extraction, and enumeration over colorings of
//! the dominating set.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::Certificate;
use crate::dominator::{self, DominatorError, DominatorTrace};
use crate::graph::Graph;
use crate::lists::{Color, ColorSet, Coloring, ListAssignment};
use crate::ramsey;
use crate::two_list;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("t and s must be at least 1 (got t={t}, s={s})")]
    InvalidConfig { t: usize, s: usize },
    #[error("list assignment covers {lists} vertices, graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
    #[error("vertex {0} is not dominated")]
    NotDominating(usize),
    #[error("vertex {0} of the dominating set has no color")]
    MissingColor(usize),
    #[error(transparent)]
    Dominator(#[from] DominatorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub t: usize,
    pub s: usize,
    /// Emit certificates for inputs outside the class instead of assuming
    /// membership.
    pub robust: bool,
    /// Keep the dominator traces of every component.
    pub trace: bool,
    /// Worker threads for the enumeration; `1` runs inline.
    pub jobs: usize,
}

impl SolverConfig {
    pub fn new(t: usize, s: usize) -> Self {
        Self {
            t,
            s,
            robust: true,
            trace: false,
            jobs: 1,
        }
    }

    pub fn promise(mut self) -> Self {
        self.robust = false;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Colored(Coloring),
    /// No coloring exists. When the reason is a 4-clique, it is attached.
    Uncolorable { explanation_k4: Option<[usize; 4]> },
    /// The graph is outside the `(P_t, SDK_s)`-free class.
    NotInClass(Certificate),
}

/// Outcome plus, when requested, one trace per component that reached the
/// construction (vertex ids are global).
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub outcome: SolveOutcome,
    pub traces: Vec<dominator::TraceJson>,
    pub timings: PhaseTimings,
    /// Total size of the dominating sets built, over all components.
    pub dominating_set_size: usize,
}

/// Wall-clock time spent per pipeline phase.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub k4: Duration,
    pub domset: Duration,
    pub enumeration: Duration,
    pub total: Duration,
}

/// Lexicographically smallest 4-clique `a < b < c < d`, if any.
pub fn find_k4(g: &Graph) -> Option<[usize; 4]> {
    for a in 0..g.n() {
        let na = g.neighbors(a);
        for &b in na.iter().filter(|&&b| b > a) {
            let common_ab: Vec<usize> = na
                .iter()
                .copied()
                .filter(|&c| c > b && g.has_edge(b, c))
                .collect();
            for (i, &c) in common_ab.iter().enumerate() {
                if let Some(&d) = common_ab[i + 1..].iter().find(|&&d| g.has_edge(c, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// `L_c`: members of `d` keep only their assigned color; every other vertex
/// loses the color of its smallest-id neighbor in `d`.
pub fn derive_reduced_lists(
    g: &Graph,
    lists: &ListAssignment,
    d: &VertexSet,
    c: &[Option<Color>],
) -> Result<ListAssignment, SolveError> {
    let dominators = dominating_neighbors(g, d)?;
    let mut colors = vec![0; g.n()];
    for v in d.iter() {
        colors[v] = c.get(v).copied().flatten().ok_or(SolveError::MissingColor(v))?;
    }
    Ok(ListAssignment::new(reduce(lists, &dominators, &colors)))
}

/// For every vertex, itself if in `d`, else its smallest-id neighbor in `d`.
fn dominating_neighbors(g: &Graph, d: &VertexSet) -> Result<Vec<usize>, SolveError> {
    (0..g.n())
        .map(|v| {
            if d.contains(v) {
                Ok(v)
            } else {
                g.neighbors(v)
                    .iter()
                    .copied()
                    .find(|&u| d.contains(u))
                    .ok_or(SolveError::NotDominating(v))
            }
        })
        .collect()
}

fn reduce(lists: &ListAssignment, dominators: &[usize], colors: &[Color]) -> Vec<ColorSet> {
    dominators
        .iter()
        .enumerate()
        .map(|(v, &u)| {
            if u == v {
                ColorSet::single(colors[v])
            } else {
                lists.get(v).without(colors[u])
            }
        })
        .collect()
}

struct Enumeration<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    order: Vec<usize>,
    dominators: Vec<usize>,
}

impl Enumeration<'_> {
    /// Depth-first over proper list colorings of `G|D`, members in
    /// increasing id order, colors in increasing order.
    fn search(&self, depth: usize, colors: &mut Vec<Color>) -> Option<Coloring> {
        if depth == self.order.len() {
            let reduced = reduce(self.lists, &self.dominators, colors);
            return two_list::solve_unchecked(self.g, reduced);
        }
        let v = self.order[depth];
        for c in self.lists.get(v).colors() {
            if self.conflicts(v, c, colors) {
                continue;
            }
            colors[v] = c;
            if let Some(f) = self.search(depth + 1, colors) {
                return Some(f);
            }
            colors[v] = 0;
        }
        None
    }

    fn conflicts(&self, v: usize, c: Color, colors: &[Color]) -> bool {
        self.g.neighbors(v).iter().any(|&u| colors[u] == c)
    }

    /// Partial colorings of the first `depth` members, in enumeration order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<Color>> {
        let mut out = vec![vec![0; self.g.n()]];
        for &v in &self.order[..depth] {
            out = out
                .into_iter()
                .flat_map(|colors| {
                    self.lists
                        .get(v)
                        .colors()
                        .filter(|&c| !self.conflicts(v, c, &colors))
                        .map(|c| {
                            let mut next = colors.clone();
                            next[v] = c;
                            next
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out
    }
}

/// Tries every proper coloring of `G|D` and extends the first one that
/// works through the two-list solver.
///
/// With `jobs > 1` the search is split into independent prefixes evaluated
/// in parallel; the reported coloring is still the one from the
/// lexicographically first successful coloring of `D`.
pub fn enumerate_and_solve(
    g: &Graph,
    lists: &ListAssignment,
    d: &VertexSet,
    jobs: usize,
) -> Result<Option<Coloring>, SolveError> {
    if lists.len() != g.n() {
        return Err(SolveError::SizeMismatch { lists: lists.len(), n: g.n() });
    }
    let e = Enumeration {
        g,
        lists,
        order: d.to_vec(),
        dominators: dominating_neighbors(g, d)?,
    };
    if jobs <= 1 || e.order.len() < 2 {
        return Ok(e.search(0, &mut vec![0; g.n()]));
    }
    let mut depth = 0;
    while depth < e.order.len() && 3usize.pow(depth as u32) < 8 * jobs {
        depth += 1;
    }
    let prefixes = e.prefixes(depth);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    Ok(pool.install(|| {
        prefixes
            .into_par_iter()
            .find_map_first(|mut colors| e.search(depth, &mut colors))
    }))
}

/// Solves `(G, L)`. See [`solve_report`].
pub fn solve(g: &Graph, lists: &ListAssignment, cfg: &SolverConfig) -> Result<SolveOutcome, SolveError> {
    solve_report(g, lists, cfg).map(|r| r.outcome)
}

/// Runs the full pipeline.
///
/// A 4-clique anywhere makes the instance uncolorable. Otherwise each
/// component (in order of smallest vertex) is solved on its own: build the
/// dominating set from its smallest vertex; in robust mode, a hitting set of
/// at least `UB(4, UB(4, s))` vertices yields an SDK certificate and a
/// vertex at distance at least `t - 1` from the root (in particular any
/// undominated vertex) yields an induced-path certificate; then enumerate. An uncolorable component ends
/// the search at once. A certificate is reported only if no later component
/// proves the instance uncolorable.
pub fn solve_report(
    g: &Graph,
    lists: &ListAssignment,
    cfg: &SolverConfig,
) -> Result<SolveReport, SolveError> {
    if cfg.t == 0 || cfg.s == 0 {
        return Err(SolveError::InvalidConfig { t: cfg.t, s: cfg.s });
    }
    if lists.len() != g.n() {
        return Err(SolveError::SizeMismatch { lists: lists.len(), n: g.n() });
    }
    let started = Instant::now();
    let mut report = SolveReport {
        outcome: SolveOutcome::Uncolorable { explanation_k4: None },
        traces: Vec::new(),
        timings: PhaseTimings::default(),
        dominating_set_size: 0,
    };
    let k4 = find_k4(g);
    report.timings.k4 = started.elapsed();
    if let Some(k4) = k4 {
        report.outcome = SolveOutcome::Uncolorable {
            explanation_k4: Some(k4),
        };
        report.timings.total = started.elapsed();
        return Ok(report);
    }

    let threshold = ramsey::sdk_threshold(cfg.s).ok();
    let mut colors = vec![0; g.n()];
    let mut certificate = None;
    let mut uncolorable = false;
    for comp in g.connected_components() {
        let verts = comp.to_vec();
        let sub = g.induced_subgraph(&verts);
        let sub_lists = lists.restrict(&verts);
        if sub_lists.iter().any(|l| l.is_empty()) {
            uncolorable = true;
            break;
        }

        let phase = Instant::now();
        let trace = dominator::build_dominating_set(&sub, cfg.t, 0);
        report.timings.domset += phase.elapsed();
        report.dominating_set_size += trace.final_s.len();
        if cfg.trace {
            report.traces.push(trace.to_json_with(|v| verts[v]));
        }
        if cfg.robust && certificate.is_none() {
            if let Some(cert) = find_certificate(&sub, &trace, cfg, threshold)? {
                certificate = Some(relabel(cert, &verts));
            }
        }
        if certificate.is_some() {
            continue;
        }

        let phase = Instant::now();
        let mut d = trace.final_s.clone();
        d.union_with(&trace.final_w);
        let found = enumerate_and_solve(&sub, &sub_lists, &d, cfg.jobs)?;
        report.timings.enumeration += phase.elapsed();
        match found {
            Some(f) => {
                for (i, &v) in verts.iter().enumerate() {
                    colors[v] = f.color(i);
                }
            }
            None => {
                uncolorable = true;
                break;
            }
        }
    }

    report.outcome = match certificate {
        _ if uncolorable => SolveOutcome::Uncolorable { explanation_k4: None },
        Some(cert) => SolveOutcome::NotInClass(cert),
        None => SolveOutcome::Colored(Coloring::new(colors)),
    };
    report.timings.total = started.elapsed();
    Ok(report)
}

fn find_certificate(
    g: &Graph,
    trace: &DominatorTrace,
    cfg: &SolverConfig,
    threshold: Option<u64>,
) -> Result<Option<Certificate>, SolveError> {
    if let Some(threshold) = threshold {
        for layer in &trace.layers {
            for hitter in &layer.hitters {
                if hitter.members.len() as u64 >= threshold {
                    let x = VertexSet::from_vertices(g.n(), hitter.members.iter().copied());
                    let private = dominator::private_neighbor_map(g, &x, &layer.w)?;
                    let cert = dominator::extract_sdk_certificate(g, hitter.v, &x, &private, cfg.s)?;
                    return Ok(Some(cert));
                }
            }
        }
    }
    // Any vertex at distance >= t - 1 from the root ends an induced P_t.
    // Undominated vertices lie at distance >= t, so this also covers W != ∅.
    match dominator::extract_path_certificate(g, trace.root, cfg.t) {
        Ok(cert) => Ok(Some(cert)),
        Err(DominatorError::NoFarVertex { .. }) => {
            debug_assert!(trace.final_w.is_empty());
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn relabel(cert: Certificate, verts: &[usize]) -> Certificate {
    let map = |xs: Vec<usize>| xs.into_iter().map(|v| verts[v]).collect();
    match cert {
        Certificate::InducedPath { path } => Certificate::InducedPath { path: map(path) },
        Certificate::Sdk {
            center,
            middles,
            leaves,
        } => Certificate::Sdk {
            center: verts[center],
            middles: map(middles),
            leaves: map(leaves),
        },
        Certificate::CliqueFour { vertices } => Certificate::CliqueFour {
            vertices: vertices.map(|v| verts[v]),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Colored,
    Uncolorable,
    NotInClass,
}

/// Wire form of a [`SolveOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeJson {
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<usize, Color>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explanation_k4: Option<Vec<usize>>,
}

impl From<&SolveOutcome> for OutcomeJson {
    fn from(outcome: &SolveOutcome) -> Self {
        let mut out = OutcomeJson {
            status: Status::Colored,
            coloring: None,
            certificate: None,
            explanation_k4: None,
        };
        match outcome {
            SolveOutcome::Colored(f) => {
                out.coloring = Some(f.as_slice().iter().copied().enumerate().collect());
            }
            SolveOutcome::Uncolorable { explanation_k4 } => {
                out.status = Status::Uncolorable;
                out.explanation_k4 = explanation_k4.map(|k| k.to_vec());
            }
            SolveOutcome::NotInClass(cert) => {
                out.status = Status::NotInClass;
                out.certificate = Some(cert.clone());
            }
        }
        out
    }
}

//! Layered construction of a bounded dominating set.
//!
//! Starting from `S_1 = {root}`, each round splits the frontier `B_i` into
//! blocks owned by the members of `S_i`, picks an inclusion-minimal hitting
//! set `X_i^j` inside every block for the vertices `W_i` not yet dominated,
//! and grows `S_{i+1} = S_i ∪ X_i`. After `t - 2` rounds, `S_{t-1}`
//! dominates any connected P_t-free graph, and on (P_t, SDK_s, K4)-free
//! graphs every `X_i^j` stays below the Ramsey threshold. When either
//! property fails, the helpers here turn the failure into a certificate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::Certificate;
use crate::graph::Graph;
use crate::ramsey::{self, RamseyError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominatorError {
    #[error("hitting set is not inclusion-minimal: {0} has no private neighbor")]
    MinimalityViolated(usize),
    #[error("no vertex lies at distance >= {min_distance} from root {root}")]
    NoFarVertex { root: usize, min_distance: usize },
    #[error("vertex {x} is not adjacent to the center {center}")]
    NotAdjacentToCenter { x: usize, center: usize },
    #[error("no private neighbor given for {0}")]
    MissingPrivateNeighbor(usize),
    #[error(transparent)]
    Ramsey(#[from] RamseyError),
}

/// A vertex of `S_i` together with the vertex set it owns in this round.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub v: usize,
    pub members: Vec<usize>,
}

/// One round `i` of the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerRecord {
    /// 1-based round index.
    pub i: usize,
    /// `S_i` in insertion order (root first); this order fixes `v_1, v_2, …`.
    pub s_order: Vec<usize>,
    pub s: VertexSet,
    /// `N(S_i) ∖ S_i`.
    pub b: VertexSet,
    /// `(v_j, B_i^j)` for every `v_j` in `s_order`, including empty blocks.
    pub partition: Vec<Block>,
    /// `(v_j, X_i^j)`, aligned with `partition`.
    pub hitters: Vec<Block>,
    /// `V ∖ (B_i ∪ S_i)`.
    pub w: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatorTrace {
    pub root: usize,
    pub layers: Vec<LayerRecord>,
    /// `S_{t-1}` in insertion order.
    pub final_s_order: Vec<usize>,
    pub final_s: VertexSet,
    /// `V ∖ (S_{t-1} ∪ N(S_{t-1}))`; empty on connected P_t-free inputs.
    pub final_w: VertexSet,
}

/// Runs the construction for rounds `i = 1..=t-2` from `S_1 = {root}`.
///
/// For `t < 3` no round runs and `S_{t-1} = {root}`.
pub fn build_dominating_set(g: &Graph, t: usize, root: usize) -> DominatorTrace {
    let n = g.n();
    let mut s_order = vec![root];
    let mut s = VertexSet::from_vertices(n, [root]);
    let mut layers = Vec::new();
    let mut counts = vec![0u32; n];

    for i in 1..=t.saturating_sub(2) {
        // B_i excludes S_i itself; only B_{i+1} ∖ (B_i ∪ S_i) is ever used,
        // so dropping the overlap changes nothing downstream.
        let mut b = g.neighborhood(&s);
        b.difference_with(&s);
        let mut w = b.union(&s).complement();

        let mut claimed = VertexSet::new(n);
        let mut partition = Vec::with_capacity(s_order.len());
        let mut hitters = Vec::with_capacity(s_order.len());
        for &v in &s_order {
            let members: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| b.contains(u) && !claimed.contains(u))
                .collect();
            for &u in &members {
                claimed.insert(u);
            }
            let x = minimal_hitting(g, &members, &w, &mut counts);
            partition.push(Block { v, members });
            hitters.push(Block { v, members: x });
        }

        let mut added: Vec<usize> = hitters.iter().flat_map(|h| h.members.iter().copied()).collect();
        added.sort_unstable();

        layers.push(LayerRecord {
            i,
            s_order: s_order.clone(),
            s: s.clone(),
            b,
            partition,
            hitters,
            w: std::mem::take(&mut w),
        });

        for x in added {
            s.insert(x);
            s_order.push(x);
        }
    }

    let mut covered = g.neighborhood(&s);
    covered.union_with(&s);
    DominatorTrace {
        root,
        layers,
        final_s_order: s_order,
        final_s: s,
        final_w: covered.complement(),
    }
}

/// Core of [`minimal_hitting_subset`]. `counts` must be all zero on entry
/// and is restored to zero on exit.
fn minimal_hitting(g: &Graph, block: &[usize], w: &VertexSet, counts: &mut [u32]) -> Vec<usize> {
    for &x in block {
        for &y in g.neighbors(x) {
            if w.contains(y) {
                counts[y] += 1;
            }
        }
    }
    let mut kept = Vec::new();
    for &x in block {
        let removable = g
            .neighbors(x)
            .iter()
            .filter(|&&y| w.contains(y))
            .all(|&y| counts[y] >= 2);
        if removable {
            for &y in g.neighbors(x) {
                if w.contains(y) {
                    counts[y] -= 1;
                }
            }
        } else {
            kept.push(x);
        }
    }
    for &x in block {
        for &y in g.neighbors(x) {
            counts[y] = 0;
        }
    }
    kept
}

/// An inclusion-minimal `X ⊆ block` such that every vertex of `w` with a
/// neighbor in `block` keeps a neighbor in `X`.
///
/// Starts from `X = block` and makes one removal pass in increasing id order.
pub fn minimal_hitting_subset(g: &Graph, block: &VertexSet, w: &VertexSet) -> VertexSet {
    let mut counts = vec![0u32; g.n()];
    let kept = minimal_hitting(g, &block.to_vec(), w, &mut counts);
    VertexSet::from_vertices(g.n(), kept)
}

/// For each `x` in `x_block`, the smallest `y ∈ w` whose only neighbor in
/// `x_block` is `x`.
pub fn private_neighbor_map(
    g: &Graph,
    x_block: &VertexSet,
    w: &VertexSet,
) -> Result<BTreeMap<usize, usize>, DominatorError> {
    let mut out = BTreeMap::new();
    for x in x_block.iter() {
        let y = g
            .neighbors(x)
            .iter()
            .copied()
            .filter(|&y| w.contains(y))
            .find(|&y| g.neighbors(y).iter().filter(|&&z| x_block.contains(z)).count() == 1)
            .ok_or(DominatorError::MinimalityViolated(x))?;
        out.insert(x, y);
    }
    Ok(out)
}

/// The shortest path from `root` to the smallest-id vertex at distance at
/// least `t - 1`. Shortest paths are induced, so this is an induced path
/// on at least `t` vertices.
pub fn extract_path_certificate(
    g: &Graph,
    root: usize,
    t: usize,
) -> Result<Certificate, DominatorError> {
    let min_distance = t.saturating_sub(1);
    let dist = g.bfs_distances(root);
    let far = (0..g.n())
        .find(|&v| matches!(dist[v], Some(d) if d >= min_distance))
        .ok_or(DominatorError::NoFarVertex { root, min_distance })?;
    let mut path = g.shortest_path(far, root).expect("reachable by construction");
    path.reverse();
    Ok(Certificate::InducedPath { path })
}

/// Turns an oversized hitting set into an induced SDK_s centered at its
/// owner, following the double Ramsey argument: an independent `X'` of
/// size `UB(4, s)` inside `x_block`, then an independent set of `s` private
/// neighbors of `X'`. A 4-clique met on the way is returned instead.
pub fn extract_sdk_certificate(
    g: &Graph,
    center: usize,
    x_block: &VertexSet,
    private_neighbors: &BTreeMap<usize, usize>,
    s: usize,
) -> Result<Certificate, DominatorError> {
    let inner = ramsey::ramsey_upper_bound(4, s)?;
    let need = ramsey::sdk_threshold(s)?;
    if (x_block.len() as u64) < need {
        return Err(RamseyError::PoolTooSmall {
            have: x_block.len(),
            need,
            k: 4,
            l: inner as usize,
        }
        .into());
    }
    for x in x_block.iter() {
        if !g.has_edge(center, x) {
            return Err(DominatorError::NotAdjacentToCenter { x, center });
        }
        if !private_neighbors.contains_key(&x) {
            return Err(DominatorError::MissingPrivateNeighbor(x));
        }
    }

    let stable_x = match ramsey::independent_set_in_k4_free(g, x_block, inner as usize) {
        Ok(set) => set,
        Err(RamseyError::CliqueFound(vertices)) => return Ok(Certificate::CliqueFour { vertices }),
        Err(e) => return Err(e.into()),
    };
    let partner_of: BTreeMap<usize, usize> =
        stable_x.iter().map(|&x| (private_neighbors[&x], x)).collect();
    let ys = VertexSet::from_vertices(g.n(), partner_of.keys().copied());
    let leaves = match ramsey::independent_set_in_k4_free(g, &ys, s) {
        Ok(set) => set,
        Err(RamseyError::CliqueFound(vertices)) => return Ok(Certificate::CliqueFour { vertices }),
        Err(e) => return Err(e.into()),
    };
    let middles = leaves.iter().map(|y| partner_of[y]).collect();
    Ok(Certificate::Sdk {
        center,
        middles,
        leaves,
    })
}

/// `(1 + UB(4, UB(4, s)))^(t-2)`; `None` when it does not fit in a `u128`.
pub fn domset_size_cap(s: usize, t: usize) -> Option<u128> {
    let base = 1 + ramsey::sdk_threshold(s).ok()? as u128;
    base.checked_pow(u32::try_from(t.saturating_sub(2)).ok()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `|S_{i+1}| > |S_i| (1 + UB(4, UB(4, s)))`.
    SizeRecurrence { i: usize, before: usize, after: usize },
    /// `B_{i+1} ∖ (B_i ∪ S_i)` differs from the BFS layer at distance `i + 1`.
    LayerMismatch {
        i: usize,
        missing: Vec<usize>,
        extra: Vec<usize>,
    },
    /// `W_{t-1}` is not empty.
    Undominated(Vec<usize>),
    /// `|S_{t-1}|` exceeds the cap.
    SizeCap { size: usize, cap: u128 },
}

/// Checks the layer size recurrence, the BFS-layer equality for every round,
/// and the final domination and size cap. Empty result iff all hold.
pub fn verify_layer_invariants(g: &Graph, trace: &DominatorTrace, t: usize, s: usize) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = g.n();
    let factor = ramsey::sdk_threshold(s).ok().map(|u| 1 + u as u128);

    let sizes: Vec<usize> = trace
        .layers
        .iter()
        .map(|l| l.s.len())
        .chain(std::iter::once(trace.final_s.len()))
        .collect();
    if let Some(factor) = factor {
        for (idx, pair) in sizes.windows(2).enumerate() {
            if pair[1] as u128 > pair[0] as u128 * factor {
                out.push(Violation::SizeRecurrence {
                    i: idx + 1,
                    before: pair[0],
                    after: pair[1],
                });
            }
        }
    }

    // (S_i, B_i) for i = 0..=t-1 with S_0 = ∅, B_0 = {root}, and the last
    // entry built from S_{t-1}.
    let mut rounds: Vec<(VertexSet, VertexSet)> = vec![(
        VertexSet::new(n),
        VertexSet::from_vertices(n, [trace.root]),
    )];
    for layer in &trace.layers {
        rounds.push((layer.s.clone(), layer.b.clone()));
    }
    if t >= 2 {
        let mut b = g.neighborhood(&trace.final_s);
        b.difference_with(&trace.final_s);
        rounds.push((trace.final_s.clone(), b));
    }
    let dist = g.bfs_distances(trace.root);
    for i in 0..rounds.len().saturating_sub(1) {
        let (s_i, b_i) = &rounds[i];
        let fresh = rounds[i + 1].1.difference(&b_i.union(s_i));
        let layer = VertexSet::from_vertices(n, (0..n).filter(|&v| dist[v] == Some(i + 1)));
        if fresh != layer {
            out.push(Violation::LayerMismatch {
                i,
                missing: layer.difference(&fresh).to_vec(),
                extra: fresh.difference(&layer).to_vec(),
            });
        }
    }

    if !trace.final_w.is_empty() {
        out.push(Violation::Undominated(trace.final_w.to_vec()));
    }
    if let Some(cap) = domset_size_cap(s, t) {
        if trace.final_s.len() as u128 > cap {
            out.push(Violation::SizeCap {
                size: trace.final_s.len(),
                cap,
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerJson {
    pub i: usize,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    pub partition: Vec<BlockJson>,
    pub hitters: Vec<HitterJson>,
    #[serde(rename = "W")]
    pub w: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub v: usize,
    pub block: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitterJson {
    pub v: usize,
    #[serde(rename = "X")]
    pub x: Vec<usize>,
}

/// Serialized form of a [`DominatorTrace`]. `S` arrays keep insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub root: usize,
    pub layers: Vec<LayerJson>,
    pub final_s: Vec<usize>,
    pub final_w: Vec<usize>,
}

impl DominatorTrace {
    /// JSON form with every vertex id passed through `label`.
    pub fn to_json_with(&self, label: impl Fn(usize) -> usize) -> TraceJson {
        let map = |xs: &mut dyn Iterator<Item = usize>| xs.map(&label).collect::<Vec<_>>();
        TraceJson {
            root: label(self.root),
            layers: self
                .layers
                .iter()
                .map(|l| LayerJson {
                    i: l.i,
                    s: map(&mut l.s_order.iter().copied()),
                    b: map(&mut l.b.iter()),
                    partition: l
                        .partition
                        .iter()
                        .map(|p| BlockJson {
                            v: label(p.v),
                            block: map(&mut p.members.iter().copied()),
                        })
                        .collect(),
                    hitters: l
                        .hitters
                        .iter()
                        .map(|h| HitterJson {
                            v: label(h.v),
                            x: map(&mut h.members.iter().copied()),
                        })
                        .collect(),
                    w: map(&mut l.w.iter()),
                })
                .collect(),
            final_s: map(&mut self.final_s_order.iter().copied()),
            final_w: map(&mut self.final_w.iter()),
        }
    }

    pub fn to_json(&self) -> TraceJson {
        self.to_json_with(|v| v)
    }
}

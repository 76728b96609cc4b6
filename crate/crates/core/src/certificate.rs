//! Witnesses that an input lies outside the promised graph class.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// An induced subgraph proving that `G` is not `(P_t, SDK_s)`-free, or that
/// it contains a K4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// An induced path, listed end to end.
    InducedPath { path: Vec<usize> },
    /// An induced one-subdivision of `K_{1,s}`: `middles[j]` joins `center`
    /// to `leaves[j]`.
    Sdk {
        center: usize,
        middles: Vec<usize>,
        leaves: Vec<usize>,
    },
    #[serde(rename = "k4")]
    CliqueFour { vertices: [usize; 4] },
}

impl Certificate {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            Certificate::InducedPath { path } => path.clone(),
            Certificate::Sdk {
                center,
                middles,
                leaves,
            } => std::iter::once(*center)
                .chain(middles.iter().copied())
                .chain(leaves.iter().copied())
                .collect(),
            Certificate::CliqueFour { vertices } => vertices.to_vec(),
        }
    }

    /// Checks the witness against `g`: every listed pair must be adjacent or
    /// non-adjacent exactly as the pattern demands. Paths need at least `t`
    /// vertices and SDK witnesses exactly `s` branches.
    pub fn is_valid(&self, g: &Graph, t: usize, s: usize) -> bool {
        let verts = self.vertices();
        if verts.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = verts.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != verts.len() {
            return false;
        }
        match self {
            Certificate::InducedPath { path } => {
                path.len() >= t
                    && (0..path.len()).all(|i| {
                        (i + 1..path.len()).all(|j| g.has_edge(path[i], path[j]) == (j == i + 1))
                    })
            }
            Certificate::Sdk {
                center,
                middles,
                leaves,
            } => {
                if middles.len() != s || leaves.len() != s {
                    return false;
                }
                let c = *center;
                middles.iter().all(|&m| g.has_edge(c, m))
                    && leaves.iter().all(|&y| !g.has_edge(c, y))
                    && (0..s).all(|i| {
                        (i + 1..s).all(|j| {
                            !g.has_edge(middles[i], middles[j]) && !g.has_edge(leaves[i], leaves[j])
                        })
                    })
                    && (0..s).all(|i| (0..s).all(|j| g.has_edge(middles[i], leaves[j]) == (i == j)))
            }
            Certificate::CliqueFour { vertices } => (0..4)
                .all(|i| (i + 1..4).all(|j| g.has_edge(vertices[i], vertices[j]))),
        }
    }
}

//! Brute-force ground truth for tests and the `oracle`/`check` commands.
//!
//! Nothing here calls into the solver pipeline: adjacency is read once into
//! a boolean matrix and every search walks that matrix directly.

use std::collections::BTreeSet;

use crate::certificate::Certificate;
use crate::dominator::{Block, DominatorTrace, LayerRecord};
use crate::graph::Graph;
use crate::lists::{Coloring, ListAssignment};
use crate::vertex_set::VertexSet;

struct Matrix {
    n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        Self { n, adj }
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v][u])
    }
}

/// The lexicographically first `L`-coloring (vertex 0 first, smallest color
/// first), or `None` if there is none.
pub fn brute_force_color(g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    let m = Matrix::new(g);
    let n = m.n;
    let domains: Vec<u8> = (0..n).map(|v| lists.get(v).bits()).collect();
    let mut colors = vec![0u8; n];
    fn go(m: &Matrix, v: usize, domains: &mut Vec<u8>, colors: &mut Vec<u8>) -> bool {
        if v == m.n {
            return true;
        }
        for c in 1..=3u8 {
            let bit = 1 << (c - 1);
            if domains[v] & bit == 0 {
                continue;
            }
            // forward check: later neighbors must keep some color
            let saved = domains.clone();
            let mut ok = true;
            for u in v + 1..m.n {
                if m.adj[v][u] {
                    domains[u] &= !bit;
                    if domains[u] == 0 {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                colors[v] = c;
                if go(m, v + 1, domains, colors) {
                    return true;
                }
            }
            *domains = saved;
        }
        false
    }
    let mut domains = domains;
    go(&m, 0, &mut domains, &mut colors).then(|| Coloring::new(colors))
}

/// A forbidden induced pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// Path on `t` vertices.
    Path(usize),
    /// One-subdivision of `K_{1,s}`.
    Sdk(usize),
    K4,
}

/// Pattern graph in embedding order: each vertex after the first has an
/// earlier neighbor (`parent`), which seeds its candidate list.
struct PatternGraph {
    k: usize,
    adj: Vec<Vec<bool>>,
    parent: Vec<Option<usize>>,
    /// `order_after[k] = Some(j)`: the image of `k` must exceed that of `j`.
    order_after: Vec<Option<usize>>,
}

impl PatternGraph {
    fn new(pattern: Pattern) -> Self {
        let mut edges = Vec::new();
        let mut order_after = Vec::new();
        let k = match pattern {
            Pattern::Path(t) => {
                for i in 1..t {
                    edges.push((i - 1, i));
                }
                order_after.resize(t, None);
                t
            }
            Pattern::K4 => {
                for a in 0..4 {
                    for b in a + 1..4 {
                        edges.push((a, b));
                    }
                }
                order_after = vec![None, None, Some(1), Some(2)];
                4
            }
            Pattern::Sdk(s) => {
                // 0 = center, 2j+1 = middle j, 2j+2 = leaf j
                order_after.resize(2 * s + 1, None);
                for j in 0..s {
                    edges.push((0, 2 * j + 1));
                    edges.push((2 * j + 1, 2 * j + 2));
                    if j > 0 {
                        order_after[2 * j + 1] = Some(2 * j - 1);
                    }
                }
                2 * s + 1
            }
        };
        let mut adj = vec![vec![false; k]; k];
        for &(a, b) in &edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        let parent = (0..k).map(|i| (0..i).find(|&j| adj[i][j])).collect();
        Self {
            k,
            adj,
            parent,
            order_after,
        }
    }
}

fn embed(m: &Matrix, p: &PatternGraph, image: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let i = image.len();
    if i == p.k {
        return true;
    }
    let candidates: Vec<usize> = match p.parent[i] {
        Some(par) => m.nbrs(image[par]).collect(),
        None => (0..m.n).collect(),
    };
    let floor = p.order_after[i].map(|j| image[j]);
    for v in candidates {
        if used[v] || floor.is_some_and(|f| v <= f) {
            continue;
        }
        if (0..i).all(|j| m.adj[v][image[j]] == p.adj[i][j]) {
            used[v] = true;
            image.push(v);
            if embed(m, p, image, used) {
                return true;
            }
            image.pop();
            used[v] = false;
        }
    }
    false
}

/// Searches for an induced copy of `pattern` and returns it as a
/// certificate, listing image vertices in pattern order.
pub fn contains_induced(g: &Graph, pattern: Pattern) -> Option<Certificate> {
    let m = Matrix::new(g);
    let p = PatternGraph::new(pattern);
    let mut image = Vec::with_capacity(p.k);
    let mut used = vec![false; m.n];
    if !embed(&m, &p, &mut image, &mut used) {
        return None;
    }
    Some(match pattern {
        Pattern::Path(_) => Certificate::InducedPath { path: image },
        Pattern::K4 => Certificate::CliqueFour {
            vertices: [image[0], image[1], image[2], image[3]],
        },
        Pattern::Sdk(s) => Certificate::Sdk {
            center: image[0],
            middles: (0..s).map(|j| image[2 * j + 1]).collect(),
            leaves: (0..s).map(|j| image[2 * j + 2]).collect(),
        },
    })
}

/// True iff the certificate's vertices induce exactly the claimed pattern in
/// `g` (paths: at least `t` vertices; SDK: exactly `s` branches).
pub fn verify_certificate(g: &Graph, cert: &Certificate, t: usize, s: usize) -> bool {
    let m = Matrix::new(g);
    let (verts, pattern) = match cert {
        Certificate::InducedPath { path } => {
            if path.len() < t {
                return false;
            }
            (path.clone(), PatternGraph::new(Pattern::Path(path.len())))
        }
        Certificate::Sdk {
            center,
            middles,
            leaves,
        } => {
            if middles.len() != s || leaves.len() != s {
                return false;
            }
            let mut v = vec![*center];
            for (a, b) in middles.iter().zip(leaves) {
                v.push(*a);
                v.push(*b);
            }
            (v, PatternGraph::new(Pattern::Sdk(s)))
        }
        Certificate::CliqueFour { vertices } => (vertices.to_vec(), PatternGraph::new(Pattern::K4)),
    };
    if verts.iter().any(|&v| v >= m.n) || verts.iter().collect::<BTreeSet<_>>().len() != verts.len() {
        return false;
    }
    (0..verts.len()).all(|i| (0..i).all(|j| m.adj[verts[i]][verts[j]] == pattern.adj[i][j]))
}

/// A direct re-implementation of the layered dominating-set construction,
/// written for clarity rather than speed. Shares tie-breaking with the
/// production builder: `S_i` in insertion order, hitters shrunk by one
/// removal pass in increasing id order, new members appended in increasing
/// id order.
pub fn replay_construction(g: &Graph, t: usize, root: usize) -> DominatorTrace {
    let m = Matrix::new(g);
    let n = m.n;
    let to_set = |xs: &BTreeSet<usize>| VertexSet::from_vertices(n, xs.iter().copied());
    let mut order = vec![root];
    let mut s: BTreeSet<usize> = BTreeSet::from([root]);
    let mut layers = Vec::new();

    let mut i = 1;
    while i + 2 <= t {
        let b: BTreeSet<usize> = s
            .iter()
            .flat_map(|&v| m.nbrs(v))
            .filter(|u| !s.contains(u))
            .collect();
        let w: BTreeSet<usize> = (0..n).filter(|v| !b.contains(v) && !s.contains(v)).collect();

        let mut partition = Vec::new();
        let mut hitters = Vec::new();
        let mut taken = BTreeSet::new();
        for &v in &order {
            let block: Vec<usize> = b
                .iter()
                .copied()
                .filter(|&u| m.adj[v][u] && !taken.contains(&u))
                .collect();
            taken.extend(block.iter().copied());

            let needs: Vec<usize> = w
                .iter()
                .copied()
                .filter(|&y| block.iter().any(|&x| m.adj[x][y]))
                .collect();
            let mut x: Vec<usize> = block.clone();
            for &cand in &block {
                let rest: Vec<usize> = x.iter().copied().filter(|&z| z != cand).collect();
                if needs.iter().all(|&y| rest.iter().any(|&z| m.adj[z][y])) {
                    x = rest;
                }
            }
            partition.push(Block { v, members: block });
            hitters.push(Block { v, members: x });
        }

        layers.push(LayerRecord {
            i,
            s_order: order.clone(),
            s: to_set(&s),
            b: to_set(&b),
            partition,
            hitters: hitters.clone(),
            w: to_set(&w),
        });

        let new: BTreeSet<usize> = hitters.iter().flat_map(|h| h.members.iter().copied()).collect();
        for x in new {
            if s.insert(x) {
                order.push(x);
            }
        }
        i += 1;
    }

    let dominated: BTreeSet<usize> = s.iter().flat_map(|&v| m.nbrs(v)).chain(s.iter().copied()).collect();
    let final_w: BTreeSet<usize> = (0..n).filter(|v| !dominated.contains(v)).collect();
    DominatorTrace {
        root,
        layers,
        final_s_order: order,
        final_s: to_set(&s),
        final_w: to_set(&final_w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dominator::build_dominating_set;
    use crate::generators::families::{complete, cycle, path, star};
    use crate::lists::ColorSet;

    #[test]
    fn brute_force_examples() {
        let tri = cycle(3);
        let l = ListAssignment::uniform(3, ColorSet::from_colors(&[1, 2]).unwrap());
        assert_eq!(brute_force_color(&tri, &l), None);
        let single = Graph::empty(1);
        assert_eq!(brute_force_color(&single, &ListAssignment::uniform(1, ColorSet::EMPTY)), None);
        let p3 = path(3);
        assert_eq!(
            brute_force_color(&p3, &ListAssignment::full(3)),
            Some(Coloring::new(vec![1, 2, 1]))
        );
        assert_eq!(brute_force_color(&complete(4), &ListAssignment::full(4)), None);
    }

    #[test]
    fn induced_examples() {
        assert_eq!(
            contains_induced(&cycle(5), Pattern::Path(4)),
            Some(Certificate::InducedPath {
                path: vec![0, 1, 2, 3]
            })
        );
        assert_eq!(contains_induced(&cycle(5), Pattern::Path(5)), None);
        assert_eq!(
            contains_induced(&complete(4), Pattern::K4),
            Some(Certificate::CliqueFour {
                vertices: [0, 1, 2, 3]
            })
        );
        assert_eq!(contains_induced(&cycle(5), Pattern::K4), None);
        // SDK_1 is P_3: a leaf of the star, the center, another leaf
        let cert = contains_induced(&star(3), Pattern::Sdk(1)).unwrap();
        assert_eq!(
            cert,
            Certificate::Sdk {
                center: 1,
                middles: vec![0],
                leaves: vec![2]
            }
        );
        assert_eq!(contains_induced(&star(3), Pattern::Sdk(2)), None);
        assert!(contains_induced(&complete(6), Pattern::Path(3)).is_none());
        assert!(contains_induced(&complete(6), Pattern::Sdk(2)).is_none());
    }

    #[test]
    fn verify_examples() {
        let cert = Certificate::InducedPath {
            path: vec![0, 1, 2, 3],
        };
        assert!(verify_certificate(&path(4), &cert, 4, 1));
        let tri = Certificate::InducedPath {
            path: vec![0, 1, 2],
        };
        assert!(!verify_certificate(&cycle(3), &tri, 3, 1));
        let g = crate::generators::families::sdk_gadget(20, false);
        let sdk = Certificate::Sdk {
            center: 0,
            middles: vec![1, 2],
            leaves: vec![21, 22],
        };
        assert!(verify_certificate(&g, &sdk, 1, 2));
        let bad = Certificate::Sdk {
            center: 0,
            middles: vec![1, 2],
            leaves: vec![22, 21],
        };
        assert!(!verify_certificate(&g, &bad, 1, 2));
    }

    #[test]
    fn replay_matches_examples() {
        for (g, t) in [(star(3), 4), (path(4), 5), (cycle(5), 4), (cycle(9), 6)] {
            assert_eq!(replay_construction(&g, t, 0), build_dominating_set(&g, t, 0));
        }
    }
}

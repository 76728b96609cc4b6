//! Seeded instance generators.
//!
//! All randomness comes from SplitMix64 (state `x`; each step does
//! `x += 0x9E3779B97F4A7C15`, then `z = x`, `z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9`,
//! `z = (z ^ z >> 27) * 0x94D049BB133111EB`, output `z ^ z >> 31`, all mod 2^64),
//! seeded with the user seed as the initial state. Uniform reals are
//! `(next >> 11) * 2^-53`. Random graphs test pairs `(u, v)`, `u < v`, in
//! lexicographic order, one draw per pair.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::Graph;
use crate::lists::{ColorSet, ListAssignment};
use crate::oracle::{contains_induced, Pattern};

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `0..bound` by modulo reduction.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn gen_random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are in range")
}

/// How a promise instance was obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum PromiseInstance {
    /// Attempt `attempt` (0-based) at edge probability `p` was accepted.
    Sampled { graph: Graph, attempt: usize, p: f64 },
    /// Sampling failed; `K_n` was checked and returned instead.
    CompleteFallback(Graph),
}

impl PromiseInstance {
    pub fn graph(&self) -> &Graph {
        match self {
            PromiseInstance::Sampled { graph, .. } | PromiseInstance::CompleteFallback(graph) => graph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("no (P_{t}, SDK_{s})-free graph on {n} vertices found in {attempts} attempts")]
pub struct PromiseExhausted {
    pub n: usize,
    pub t: usize,
    pub s: usize,
    pub attempts: usize,
}

/// True iff the oracle finds neither an induced `P_t` nor an induced `SDK_s`.
pub fn in_promise_class(g: &Graph, t: usize, s: usize) -> bool {
    contains_induced(g, Pattern::Path(t)).is_none() && contains_induced(g, Pattern::Sdk(s)).is_none()
}

/// Rejection-samples `G(n, p)` for `p = 0.1, 0.2, …, 0.9` round-robin, each
/// attempt seeded with the next output of a SplitMix64 stream started at
/// `seed`. Falls back to `K_n` when it is itself in the class.
pub fn gen_promise_instance(
    n: usize,
    t: usize,
    s: usize,
    seed: u64,
    attempts: usize,
) -> Result<PromiseInstance, PromiseExhausted> {
    let mut seeds = Rng::new(seed);
    for attempt in 0..attempts {
        let p = (attempt % 9 + 1) as f64 / 10.0;
        let graph = gen_random_graph(n, p, seeds.next_u64());
        if in_promise_class(&graph, t, s) {
            return Ok(PromiseInstance::Sampled { graph, attempt, p });
        }
    }
    let k = families::complete(n);
    if in_promise_class(&k, t, s) {
        return Ok(PromiseInstance::CompleteFallback(k));
    }
    Err(PromiseExhausted { n, t, s, attempts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListMode {
    /// Every list is `{1, 2, 3}`.
    Full,
    /// Each list is a uniformly chosen nonempty subset of `{1, 2, 3}`.
    Random(u64),
    /// Each list is a uniformly chosen subset of size 1 or 2.
    Adversarial(u64),
}

const SMALL_LISTS: [u8; 6] = [0b001, 0b010, 0b100, 0b011, 0b101, 0b110];

/// Random modes draw one value per vertex in id order: `Random` maps
/// `1 + next % 7` to the bitmask (bit `c - 1` for color `c`), `Adversarial`
/// indexes `[{1}, {2}, {3}, {1,2}, {1,3}, {2,3}]` with `next % 6`.
pub fn gen_lists(g: &Graph, mode: ListMode) -> ListAssignment {
    let n = g.n();
    match mode {
        ListMode::Full => ListAssignment::full(n),
        ListMode::Random(seed) => {
            let mut rng = Rng::new(seed);
            ListAssignment::new(
                (0..n)
                    .map(|_| ColorSet::from_bits(1 + rng.below(7) as u8))
                    .collect(),
            )
        }
        ListMode::Adversarial(seed) => {
            let mut rng = Rng::new(seed);
            ListAssignment::new(
                (0..n)
                    .map(|_| ColorSet::from_bits(SMALL_LISTS[rng.below(6) as usize]))
                    .collect(),
            )
        }
    }
}

/// Fixed graph families.
pub mod families {
    use crate::graph::Graph;

    fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph::from_edges(n, edges).expect("family edges are valid")
    }

    pub fn path(n: usize) -> Graph {
        build(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        build(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Graph {
        build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect())
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect())
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// `rows × cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        build(rows * cols, edges)
    }

    /// Grid with about `n` vertices: `round(sqrt(n))` rows.
    pub fn grid_near(n: usize) -> Graph {
        let rows = ((n as f64).sqrt().round() as usize).max(1);
        grid(rows, n.div_ceil(rows))
    }

    /// Center 0 joined to middles `1..=k`, middle `j` joined to its private
    /// leaf `j + k`. With `dense_core`, middles `1..=11` are made pairwise
    /// adjacent, which forces Ramsey extraction over the middles into a K4.
    pub fn sdk_gadget(k: usize, dense_core: bool) -> Graph {
        let mut edges = Vec::new();
        for j in 1..=k {
            edges.push((0, j));
            edges.push((j, j + k));
        }
        if dense_core {
            let top = k.min(11);
            for a in 1..=top {
                for b in a + 1..=top {
                    edges.push((a, b));
                }
            }
        }
        build(2 * k + 1, edges)
    }
}

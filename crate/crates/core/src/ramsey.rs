//! Ramsey bounds and constructive clique / independent-set extraction.
//!
//! Exact Ramsey numbers are unknown for the sizes needed here, so every
//! threshold uses the Erdős–Szekeres bound `R(k, l) <= C(k + l - 2, k - 1)`.
//! The extraction below is the constructive proof of that bound.

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("clique and independent-set targets must be positive (got k={k}, l={l})")]
    NonPositive { k: usize, l: usize },
    #[error("Ramsey bound for k={k}, l={l} overflows")]
    Overflow { k: usize, l: usize },
    #[error("pool has {have} vertices but the bound for k={k}, l={l} is {need}")]
    PoolTooSmall { have: usize, need: u64, k: usize, l: usize },
    #[error("K4-free precondition violated: {0:?} is a 4-clique")]
    CliqueFound([usize; 4]),
}

/// A witness from [`extract_clique_or_independent`], sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyWitness {
    Clique(Vec<usize>),
    Independent(Vec<usize>),
}

/// `C(k + l - 2, k - 1)`, an upper bound on `R(k, l)`.
pub fn ramsey_upper_bound(k: usize, l: usize) -> Result<u64, RamseyError> {
    if k == 0 || l == 0 {
        return Err(RamseyError::NonPositive { k, l });
    }
    let n = (k + l - 2) as u128;
    let r = (k - 1).min(l - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=r {
        // acc * (n - r + i) / i is exact at every step
        acc = acc
            .checked_mul(n - r + i)
            .ok_or(RamseyError::Overflow { k, l })?
            / i;
    }
    u64::try_from(acc).map_err(|_| RamseyError::Overflow { k, l })
}

/// The size threshold `UB(4, UB(4, s))` above which a hitting set must
/// contain an SDK_s (or a K4).
pub fn sdk_threshold(s: usize) -> Result<u64, RamseyError> {
    let inner = ramsey_upper_bound(4, s)?;
    let inner = usize::try_from(inner).map_err(|_| RamseyError::Overflow { k: 4, l: s })?;
    ramsey_upper_bound(4, inner)
}

fn bound_or_max(k: usize, l: usize) -> u64 {
    ramsey_upper_bound(k, l).unwrap_or(u64::MAX)
}

/// Finds a `k`-clique or an `l`-independent set inside `pool`.
///
/// Pivots on the smallest id; the neighbor side is preferred when both sides
/// are large enough.
pub fn extract_clique_or_independent(
    g: &Graph,
    pool: &VertexSet,
    k: usize,
    l: usize,
) -> Result<RamseyWitness, RamseyError> {
    let need = ramsey_upper_bound(k, l)?;
    let have = pool.len();
    if (have as u64) < need {
        return Err(RamseyError::PoolTooSmall { have, need, k, l });
    }
    let mut witness = extract(g, pool.to_vec(), k, l);
    match &mut witness {
        RamseyWitness::Clique(v) | RamseyWitness::Independent(v) => v.sort_unstable(),
    }
    Ok(witness)
}

fn extract(g: &Graph, pool: Vec<usize>, k: usize, l: usize) -> RamseyWitness {
    let pivot = pool[0];
    if k == 1 {
        return RamseyWitness::Clique(vec![pivot]);
    }
    if l == 1 {
        return RamseyWitness::Independent(vec![pivot]);
    }
    let (adjacent, other): (Vec<usize>, Vec<usize>) =
        pool[1..].iter().partition(|&&u| g.has_edge(pivot, u));
    if adjacent.len() as u64 >= bound_or_max(k - 1, l) {
        match extract(g, adjacent, k - 1, l) {
            RamseyWitness::Clique(mut c) => {
                c.push(pivot);
                RamseyWitness::Clique(c)
            }
            w => w,
        }
    } else {
        debug_assert!(other.len() as u64 >= bound_or_max(k, l - 1));
        match extract(g, other, k, l - 1) {
            RamseyWitness::Independent(mut i) => {
                i.push(pivot);
                RamseyWitness::Independent(i)
            }
            w => w,
        }
    }
}

/// An independent set of exactly `l` vertices from a K4-free `pool` with
/// at least `UB(4, l)` members.
pub fn independent_set_in_k4_free(
    g: &Graph,
    pool: &VertexSet,
    l: usize,
) -> Result<Vec<usize>, RamseyError> {
    match extract_clique_or_independent(g, pool, 4, l)? {
        RamseyWitness::Independent(set) => Ok(set),
        RamseyWitness::Clique(c) => Err(RamseyError::CliqueFound([c[0], c[1], c[2], c[3]])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{complete, complete_bipartite};
    use crate::generators::gen_random_graph;
    use proptest::prelude::*;

    fn pairwise(g: &Graph, set: &[usize], adjacent: bool) -> bool {
        set.iter().enumerate().all(|(i, &a)| {
            set[i + 1..].iter().all(|&b| g.has_edge(a, b) == adjacent)
        })
    }

    #[test]
    fn bound_examples() {
        assert_eq!(ramsey_upper_bound(2, 5), Ok(5));
        assert_eq!(ramsey_upper_bound(4, 4), Ok(20));
        let inner = ramsey_upper_bound(4, 2).unwrap() as usize;
        assert_eq!(inner, 4);
        assert_eq!(ramsey_upper_bound(4, inner), Ok(20));
        assert_eq!(sdk_threshold(2), Ok(20));
        assert_eq!(sdk_threshold(1), Ok(1));
        assert_eq!(sdk_threshold(3), Ok(220));
        assert!(matches!(ramsey_upper_bound(0, 3), Err(RamseyError::NonPositive { .. })));
        assert!(matches!(ramsey_upper_bound(80, 80), Err(RamseyError::Overflow { .. })));
    }

    #[test]
    fn bound_edges_of_table() {
        for l in 1..30 {
            assert_eq!(ramsey_upper_bound(2, l), Ok(l as u64));
            assert_eq!(ramsey_upper_bound(l, 2), Ok(l as u64));
            assert_eq!(ramsey_upper_bound(1, l), Ok(1));
            assert_eq!(ramsey_upper_bound(l, 1), Ok(1));
        }
    }

    #[test]
    fn pascal_recurrence() {
        for k in 2..15 {
            for l in 2..15 {
                assert_eq!(
                    ramsey_upper_bound(k, l).unwrap(),
                    ramsey_upper_bound(k - 1, l).unwrap() + ramsey_upper_bound(k, l - 1).unwrap()
                );
            }
        }
    }

    #[test]
    fn extraction_examples() {
        let edgeless = Graph::empty(4);
        let pool = VertexSet::full(4);
        assert_eq!(
            extract_clique_or_independent(&edgeless, &pool, 2, 4),
            Ok(RamseyWitness::Independent(vec![0, 1, 2, 3]))
        );
        let k4 = complete(4);
        assert_eq!(
            extract_clique_or_independent(&k4, &pool, 4, 2),
            Ok(RamseyWitness::Clique(vec![0, 1, 2, 3]))
        );
        assert!(matches!(
            extract_clique_or_independent(&edgeless, &pool, 4, 4),
            Err(RamseyError::PoolTooSmall { need: 20, .. })
        ));
    }

    #[test]
    fn k4_free_union_of_five_cycles() {
        let mut edges = Vec::new();
        for c in 0..5 {
            for i in 0..5 {
                edges.push((5 * c + i, 5 * c + (i + 1) % 5));
            }
        }
        let g = Graph::from_edges(25, edges).unwrap();
        match extract_clique_or_independent(&g, &VertexSet::full(25), 4, 4).unwrap() {
            RamseyWitness::Independent(set) => {
                assert_eq!(set.len(), 4);
                assert!(pairwise(&g, &set, false));
            }
            w => panic!("unexpected {w:?}"),
        }
    }

    #[test]
    fn independent_set_examples() {
        let g = Graph::empty(20);
        let set = independent_set_in_k4_free(&g, &VertexSet::full(20), 4).unwrap();
        assert_eq!(set.len(), 4);

        let kb = complete_bipartite(10, 10);
        let set = independent_set_in_k4_free(&kb, &VertexSet::full(20), 4).unwrap();
        assert_eq!(set.len(), 4);
        assert!(pairwise(&kb, &set, false));
        assert!(set.iter().all(|&v| v < 10) || set.iter().all(|&v| v >= 10));

        let k4 = complete(4);
        assert_eq!(
            independent_set_in_k4_free(&k4, &VertexSet::full(4), 2),
            Err(RamseyError::CliqueFound([0, 1, 2, 3]))
        );
    }

    proptest! {
        #[test]
        fn witnesses_verify(seed in any::<u64>(), p in 0.0f64..1.0, k in 1usize..=4, l in 1usize..=4, extra in 0usize..6) {
            let n = ramsey_upper_bound(k, l).unwrap() as usize + extra;
            let g = gen_random_graph(n, p, seed);
            let pool = VertexSet::full(n);
            let w = extract_clique_or_independent(&g, &pool, k, l).unwrap();
            prop_assert_eq!(&w, &extract_clique_or_independent(&g, &pool, k, l).unwrap());
            match w {
                RamseyWitness::Clique(c) => {
                    prop_assert_eq!(c.len(), k);
                    prop_assert!(pairwise(&g, &c, true));
                }
                RamseyWitness::Independent(i) => {
                    prop_assert_eq!(i.len(), l);
                    prop_assert!(pairwise(&g, &i, false));
                }
            }
        }
    }
}

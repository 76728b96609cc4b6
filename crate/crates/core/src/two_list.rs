//! List coloring when every list has at most two colors, via 2-SAT.
//!
//! Singleton lists are propagated first (their color is removed from every
//! neighbor's list until nothing changes). Every remaining vertex has exactly
//! two candidate colors and becomes a boolean variable: `true` picks the
//! smaller color. Each edge whose endpoints share a candidate color `c`
//! yields the clause "not both `c`". Satisfiability and an assignment come
//! from Tarjan's SCC algorithm on the implication graph. Everything is
//! linear in `|V| + |E|`.

use thiserror::Error;

use crate::graph::Graph;
use crate::lists::{Color, ColorSet, Coloring, ListAssignment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoListError {
    #[error("vertex {0} has a list of size 3")]
    ListTooLarge(usize),
    #[error("list assignment covers {lists} vertices, graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
}

/// A proper `L`-coloring, or `None` if none exists.
pub fn solve_two_lists(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>, TwoListError> {
    let n = g.n();
    if lists.len() != n {
        return Err(TwoListError::SizeMismatch { lists: lists.len(), n });
    }
    if let Some(v) = (0..n).find(|&v| lists.get(v).len() > 2) {
        return Err(TwoListError::ListTooLarge(v));
    }
    Ok(solve_unchecked(g, lists.iter().collect()))
}

pub(crate) fn solve_unchecked(g: &Graph, mut lists: Vec<ColorSet>) -> Option<Coloring> {
    let n = g.n();
    if lists.iter().any(|l| l.is_empty()) {
        return None;
    }

    // A singleton reached again by the scan finds its color already gone
    // from every neighbor, so each vertex costs O(degree) at most twice.
    let mut pending = Vec::new();
    for start in 0..n {
        if lists[start].len() != 1 {
            continue;
        }
        pending.push(start);
        while let Some(v) = pending.pop() {
            let c = lists[v].min().unwrap();
            for &u in g.neighbors(v) {
                if lists[u].contains(c) {
                    lists[u] = lists[u].without(c);
                    match lists[u].len() {
                        0 => return None,
                        1 => pending.push(u),
                        _ => {}
                    }
                }
            }
        }
    }

    // variable index for each two-color vertex
    let mut var = vec![usize::MAX; n];
    let mut pair: Vec<(Color, Color)> = Vec::new();
    let mut owner = Vec::new();
    for v in 0..n {
        if lists[v].len() == 2 {
            let mut cs = lists[v].colors();
            var[v] = pair.len();
            pair.push((cs.next().unwrap(), cs.next().unwrap()));
            owner.push(v);
        }
    }

    // literal 2x = "x true", 2x+1 = "x false"
    let lit = |x: usize, c: Color, pair: &[(Color, Color)]| {
        if pair[x].0 == c {
            2 * x
        } else {
            2 * x + 1
        }
    };
    let mut implications = Vec::new();
    for (u, v) in g.edges() {
        if var[u] == usize::MAX || var[v] == usize::MAX {
            continue;
        }
        let (a, b) = (var[u], var[v]);
        for c in [pair[a].0, pair[a].1] {
            if pair[b].0 == c || pair[b].1 == c {
                let (la, lb) = (lit(a, c, &pair), lit(b, c, &pair));
                implications.push((la, lb ^ 1));
                implications.push((lb, la ^ 1));
            }
        }
    }

    let comp = scc(2 * pair.len(), &implications);
    let mut colors: Vec<Color> = lists.iter().map(|l| l.min().unwrap_or(0)).collect();
    for (x, &v) in owner.iter().enumerate() {
        let (t, f) = (comp[2 * x], comp[2 * x + 1]);
        if t == f {
            return None;
        }
        // Tarjan numbers components in reverse topological order
        colors[v] = if t < f { pair[x].0 } else { pair[x].1 };
    }
    Some(Coloring::new(colors))
}

/// Component index of every node; components are numbered in the order
/// Tarjan completes them (sinks first). Iterative, so deep implication
/// chains cannot overflow the stack.
fn scc(nodes: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut start = vec![0usize; nodes + 1];
    for &(a, _) in arcs {
        start[a + 1] += 1;
    }
    for i in 0..nodes {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut targets = vec![0usize; arcs.len()];
    for &(a, b) in arcs {
        targets[fill[a]] = b;
        fill[a] += 1;
    }

    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; nodes];
    let mut low = vec![0usize; nodes];
    let mut comp = vec![UNSEEN; nodes];
    let mut next_edge = start.clone();
    let mut stack = Vec::new();
    let mut call = Vec::new();
    let mut counter = 0;
    let mut n_comp = 0;

    for root in 0..nodes {
        if index[root] != UNSEEN {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        call.push(root);
        while let Some(&v) = call.last() {
            if next_edge[v] < start[v + 1] {
                let u = targets[next_edge[v]];
                next_edge[v] += 1;
                if index[u] == UNSEEN {
                    index[u] = counter;
                    low[u] = counter;
                    counter += 1;
                    stack.push(u);
                    call.push(u);
                } else if comp[u] == UNSEEN {
                    low[v] = low[v].min(index[u]);
                }
            } else {
                call.pop();
                if low[v] == index[v] {
                    loop {
                        let u = stack.pop().unwrap();
                        comp[u] = n_comp;
                        if u == v {
                            break;
                        }
                    }
                    n_comp += 1;
                }
                if let Some(&p) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{cycle, path};
    use crate::generators::{gen_lists, gen_random_graph, ListMode};
    use crate::lists::check_coloring;
    use crate::oracle::brute_force_color;

    fn lists(v: &[&[u8]]) -> ListAssignment {
        ListAssignment::from_colors(&v.iter().map(|l| l.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn examples() {
        let single = Graph::empty(1);
        assert_eq!(
            solve_two_lists(&single, &lists(&[&[1]])),
            Ok(Some(Coloring::new(vec![1])))
        );
        let edge = path(2);
        assert_eq!(solve_two_lists(&edge, &lists(&[&[1], &[1]])), Ok(None));
        let c5 = cycle(5);
        let l = ListAssignment::uniform(5, ColorSet::from_colors(&[1, 2]).unwrap());
        assert_eq!(solve_two_lists(&c5, &l), Ok(None));
        let c6 = cycle(6);
        let l6 = ListAssignment::uniform(6, ColorSet::from_colors(&[1, 2]).unwrap());
        let f = solve_two_lists(&c6, &l6).unwrap().unwrap();
        assert!(check_coloring(&c6, &l6, &f));
    }

    #[test]
    fn c5_two_colorings_by_enumeration() {
        let c5 = cycle(5);
        let proper = (0u32..32).filter(|mask| {
            c5.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1))
        });
        assert_eq!(proper.count(), 0);
    }

    #[test]
    fn errors_and_empty_lists() {
        let g = path(2);
        assert_eq!(
            solve_two_lists(&g, &lists(&[&[1, 2, 3], &[1]])),
            Err(TwoListError::ListTooLarge(0))
        );
        assert_eq!(solve_two_lists(&g, &lists(&[&[], &[1]])), Ok(None));
        assert_eq!(
            solve_two_lists(&g, &lists(&[&[1]])),
            Err(TwoListError::SizeMismatch { lists: 1, n: 2 })
        );
    }

    #[test]
    fn propagation_chain() {
        // 1 forces 2 forces 3 along the path; last vertex must take 1 or 2
        let g = path(4);
        let l = lists(&[&[1], &[1, 2], &[2, 3], &[3, 1]]);
        assert_eq!(
            solve_two_lists(&g, &l),
            Ok(Some(Coloring::new(vec![1, 2, 3, 1])))
        );
    }

    #[test]
    fn long_path_does_not_overflow() {
        let g = path(200_000);
        let l = ListAssignment::uniform(g.n(), ColorSet::from_colors(&[2, 3]).unwrap());
        let f = solve_two_lists(&g, &l).unwrap().unwrap();
        assert!(check_coloring(&g, &l, &f));
    }

    #[test]
    fn agrees_with_oracle_on_random_instances() {
        for seed in 0..400u64 {
            let n = 1 + (seed % 9) as usize;
            let g = gen_random_graph(n, 0.2 + (seed % 7) as f64 / 10.0, seed);
            let l = gen_lists(&g, ListMode::Adversarial(seed ^ 0xABCD));
            let ours = solve_two_lists(&g, &l).unwrap();
            let truth = brute_force_color(&g, &l);
            assert_eq!(ours.is_some(), truth.is_some(), "seed {seed}");
            if let Some(f) = ours {
                assert!(check_coloring(&g, &l, &f));
            }
        }
    }

    #[test]
    fn shrinking_lists_never_helps() {
        for seed in 0..200u64 {
            let g = gen_random_graph(7, 0.4, seed);
            let l = gen_lists(&g, ListMode::Adversarial(seed));
            if solve_two_lists(&g, &l).unwrap().is_some() {
                continue;
            }
            let mut smaller = l.clone();
            let v = (seed % 7) as usize;
            let list = smaller.get(v);
            smaller.set(v, list.without(list.min().unwrap()));
            assert_eq!(solve_two_lists(&g, &smaller).unwrap(), None);
        }
    }
}

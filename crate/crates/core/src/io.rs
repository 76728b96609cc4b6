//! Text formats: the `n m` edge list, DIMACS `.col`, and the lists JSON.
//!
//! Edge-list files start with a `n m` header followed by exactly `m` lines
//! `u v` (0-based). Lines starting with `#` are ignored. A DIMACS file is
//! recognized by its `p` header (`p edge n m`, then `e u v` with 1-based
//! ids, `c` comment lines).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::lists::{ColorSet, ListAssignment, ListError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ListsFormatError {
    #[error("invalid lists JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing list for vertex {0}")]
    Missing(usize),
    #[error("list given for vertex {vertex}, but the graph has {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Invalid(#[from] ListError),
}

/// Parses either supported graph format.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with('c'));
    match first {
        Some(l) if l.starts_with('p') => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("expected a non-negative integer, got `{tok}`")))
}

fn check_edge(u: usize, v: usize, n: usize, line: usize) -> Result<(), ParseError> {
    if u >= n || v >= n {
        return Err(ParseError::new(
            line,
            format!("vertex id {} out of range 0..{n}", u.max(v)),
        ));
    }
    if u == v {
        return Err(ParseError::new(line, format!("self-loop on vertex {u}")));
    }
    Ok(())
}

fn finish(n: usize, edges: Vec<(usize, usize)>, line: usize) -> Result<Graph, ParseError> {
    Graph::from_edges(n, edges).map_err(|e: GraphError| ParseError::new(line, e.to_string()))
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::new(line, format!("expected two integers, got `{l}`")));
        }
        let a = parse_usize(toks[0], line)?;
        let b = parse_usize(toks[1], line)?;
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::new(line, format!("more than the declared {m} edge lines")));
                }
                check_edge(a, b, n, line)?;
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| ParseError::new(last_line.max(1), "missing `n m` header"))?;
    if edges.len() != m {
        return Err(ParseError::new(
            last_line.max(1),
            format!("declared {m} edge lines, found {}", edges.len()),
        ));
    }
    finish(n, edges, last_line)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') || l.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if n.is_some() {
                    return Err(ParseError::new(line, "duplicate `p` header"));
                }
                if toks.len() != 4 {
                    return Err(ParseError::new(line, "expected `p edge <n> <m>`"));
                }
                n = Some(parse_usize(toks[2], line)?);
            }
            "e" => {
                let n = n.ok_or_else(|| ParseError::new(line, "edge before `p` header"))?;
                if toks.len() != 3 {
                    return Err(ParseError::new(line, "expected `e <u> <v>`"));
                }
                let u = parse_usize(toks[1], line)?;
                let v = parse_usize(toks[2], line)?;
                if u == 0 || v == 0 {
                    return Err(ParseError::new(line, "DIMACS vertex ids are 1-based"));
                }
                check_edge(u - 1, v - 1, n, line)?;
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(ParseError::new(line, format!("unknown DIMACS line type `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::new(last_line.max(1), "missing `p` header"))?;
    finish(n, edges, last_line)
}

/// Serializes in the `n m` edge-list format, edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct ListsFile {
    lists: BTreeMap<usize, Vec<u8>>,
}

/// Parses `{"lists": {"<vertex>": [colors]}}`; every vertex of a graph on
/// `n` vertices must be present.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment, ListsFormatError> {
    let file: ListsFile = serde_json::from_str(text)?;
    if let Some((&vertex, _)) = file.lists.range(n..).next() {
        return Err(ListsFormatError::OutOfRange { vertex, n });
    }
    let mut lists = Vec::with_capacity(n);
    for v in 0..n {
        let colors = file.lists.get(&v).ok_or(ListsFormatError::Missing(v))?;
        lists.push(ColorSet::from_colors(colors)?);
    }
    Ok(ListAssignment::new(lists))
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let file = ListsFile {
        lists: lists
            .iter()
            .enumerate()
            .map(|(v, l)| (v, l.colors().collect()))
            .collect(),
    };
    serde_json::to_string(&file).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::path;

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_graph("3 2\n0 1\n1 2\n").unwrap(), path(3));
        let single = parse_graph("1 0").unwrap();
        assert_eq!((single.n(), single.m()), (1, 0));
        assert_eq!(parse_graph("3 3\n0 1\n0 1\n1 2\n").unwrap(), path(3));
    }

    #[test]
    fn comments_and_whitespace() {
        let g = parse_graph("# header\n3   2\n\n# edge\n0\t1\n 1 2 \n").unwrap();
        assert_eq!(g, path(3));
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_graph("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_graph("3 1\n1 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("self-loop"));
        let e = parse_graph("3 1\n# c\n0 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("out of range"));
        let e = parse_graph("3 2\n0 1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn dimacs() {
        let g = parse_graph("c a path\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, path(3));
        let e = parse_graph("p edge 3 1\ne 0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_graph("p edge 3 1\ne 1 4\n").unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn lists_json() {
        let l = parse_lists(r#"{"lists": {"0": [1, 2], "1": [3], "2": []}}"#, 3).unwrap();
        assert_eq!(l.get(0).colors().collect::<Vec<_>>(), vec![1, 2]);
        assert!(l.get(2).is_empty());
        assert_eq!(parse_lists(&write_lists(&l), 3).unwrap(), l);
        assert!(matches!(
            parse_lists(r#"{"lists": {"0": [1]}}"#, 2),
            Err(ListsFormatError::Missing(1))
        ));
        assert!(matches!(
            parse_lists(r#"{"lists": {"0": [4]}}"#, 1),
            Err(ListsFormatError::Invalid(_))
        ));
        assert!(matches!(
            parse_lists(r#"{"lists": {"0": [1], "5": [1]}}"#, 1),
            Err(ListsFormatError::OutOfRange { vertex: 5, n: 1 })
        ));
    }
}

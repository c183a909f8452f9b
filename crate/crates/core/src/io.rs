//! Text and JSON forms of graphs, edge sets and move sequences.
//!
//! Graphs: `{"n": 3, "edges": [[0,1],[1,2]]}`, or a text file whose first
//! line is `n m` followed by `m` lines `u v`. Edge sets and move sequences:
//! comma-separated endpoint pairs such as `0-1,1-2`, with `-` for the empty
//! set or word.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::edge_space::EdgeSet;
use crate::error::{Error, Result};
use crate::flip::{Move, MoveSequence};
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses either graph format, chosen by the first non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| parse_err(format!("graph JSON: {e}")))?;
    let pairs: Vec<(usize, usize)> = raw.edges.iter().map(|&[u, v]| (u, v)).collect();
    Graph::new(raw.n, &pairs)
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err("empty graph file"))?;
    let [n, m] = two_numbers(header)?;
    let pairs = lines.map(|l| two_numbers(l).map(|[u, v]| (u, v))).collect::<Result<Vec<_>>>()?;
    if pairs.len() != m {
        return Err(parse_err(format!("header announces {m} edges, found {}", pairs.len())));
    }
    Graph::new(n, &pairs)
}

fn two_numbers(line: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(format!("expected two integers, got {line:?}")));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| parse_err(format!("not a vertex number: {s:?}")));
    Ok([num(fields[0])?, num(fields[1])?])
}

pub fn graph_to_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "edges": edges })
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_pair(g: &Graph, token: &str) -> Result<usize> {
    let (a, b) = token
        .split_once('-')
        .ok_or_else(|| parse_err(format!("expected an endpoint pair like 0-1, got {token:?}")))?;
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| parse_err(format!("not a vertex number: {s:?}")))
    };
    let (a, b) = (num(a)?, num(b)?);
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    g.edge_index(a, b).ok_or(Error::NoSuchEdge(a, b))
}

fn parse_pairs(g: &Graph, text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text == "-" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse_pair(g, t.trim())).collect()
}

fn format_pairs(g: &Graph, edges: impl Iterator<Item = usize>) -> String {
    let parts: Vec<String> = edges
        .map(|e| {
            let (u, v) = g.edges()[e];
            format!("{u}-{v}")
        })
        .collect();
    if parts.is_empty() {
        "-".to_string()
    } else {
        parts.join(",")
    }
}

/// `"0-1,1-2"` or `"-"`. Listing an edge twice is an error.
pub fn parse_edge_set(g: &Graph, text: &str) -> Result<EdgeSet> {
    let mut set = EdgeSet::empty(g.m());
    for e in parse_pairs(g, text)? {
        if set.contains(e) {
            let (u, v) = g.edges()[e];
            return Err(parse_err(format!("edge {u}-{v} listed twice")));
        }
        set.toggle(e);
    }
    Ok(set)
}

/// Members in canonical order.
pub fn format_edge_set(g: &Graph, set: &EdgeSet) -> String {
    format_pairs(g, set.members())
}

pub fn edge_set_to_json(g: &Graph, set: &EdgeSet) -> Value {
    let pairs: Vec<[usize; 2]> = set
        .members()
        .map(|e| {
            let (u, v) = g.edges()[e];
            [u, v]
        })
        .collect();
    json!(pairs)
}

pub fn edge_set_from_json(g: &Graph, value: &Value) -> Result<EdgeSet> {
    let pairs: Vec<[usize; 2]> =
        serde_json::from_value(value.clone()).map_err(|e| parse_err(format!("edge set JSON: {e}")))?;
    let mut set = EdgeSet::empty(g.m());
    for [u, v] in pairs {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        let e = g.edge_index(u, v).ok_or(Error::NoSuchEdge(u, v))?;
        if set.contains(e) {
            return Err(parse_err(format!("edge {u}-{v} listed twice")));
        }
        set.toggle(e);
    }
    Ok(set)
}

/// Moves in application order; repeats allowed.
pub fn parse_move_sequence(g: &Graph, text: &str) -> Result<MoveSequence> {
    Ok(MoveSequence(parse_pairs(g, text)?.into_iter().map(Move).collect()))
}

pub fn format_move_sequence(g: &Graph, word: &MoveSequence) -> Result<String> {
    for e in word.edges() {
        g.check_edge(e)?;
    }
    Ok(format_pairs(g, word.edges()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn graph_formats_agree() {
        let json = r#"{"n": 3, "edges": [[2,1],[0,1],[0,2]]}"#;
        let text = "3 3\n1 2\n0 1\n2 0\n";
        let a = parse_graph(json).unwrap();
        let b = parse_graph(text).unwrap();
        assert_eq!(a.edges(), b.edges());
        assert_eq!(a.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_graph(&graph_to_text(&a)).unwrap().edges(), a.edges());
        assert_eq!(
            serde_json::to_string(&graph_to_json(&a)).unwrap(),
            r#"{"edges":[[0,1],[0,2],[1,2]],"n":3}"#
        );
    }

    #[test]
    fn graph_parse_errors() {
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("{\"n\": 2}"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("3 2\n0 1\n0 x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_graph("4 2\n0 1\n2 3\n"), Err(Error::NotConnected)));
    }

    #[test]
    fn edge_set_round_trip() {
        let g = corpus::complete(3);
        let set = parse_edge_set(&g, "1-2, 0-1").unwrap();
        assert_eq!(set.members().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(format_edge_set(&g, &set), "0-1,1-2");
        assert_eq!(format_edge_set(&g, &EdgeSet::empty(3)), "-");
        assert!(parse_edge_set(&g, "-").unwrap().is_empty());
        assert_eq!(edge_set_from_json(&g, &edge_set_to_json(&g, &set)).unwrap(), set);
        assert!(matches!(parse_edge_set(&g, "0-3"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(parse_edge_set(&g, "0-1,1-0"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_set(&corpus::path(3), "0-2"), Err(Error::NoSuchEdge(0, 2))));
    }

    #[test]
    fn move_sequence_round_trip() {
        let g = corpus::complete(3);
        let w = parse_move_sequence(&g, "1-2,0-1,1-2").unwrap();
        assert_eq!(w.edges().collect::<Vec<_>>(), vec![2, 0, 2]);
        assert_eq!(format_move_sequence(&g, &w).unwrap(), "1-2,0-1,1-2");
        assert!(parse_move_sequence(&g, "-").unwrap().is_empty());
    }
}

//! Line-based text format:
//!
//! ```text
//! graph undirected
//! # comment
//! node a terminal=1 weight=2
//! node v
//! edge a v
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::{GraphBuilder, Orientation, TerminalGraph};
use crate::error::{Error, GraphError, ParseErrorKind, Result};

fn parse_error(line: usize, kind: impl Into<ParseErrorKind>) -> Error {
    Error::Parse {
        line,
        kind: kind.into(),
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> Error {
    parse_error(line, ParseErrorKind::Malformed(msg.into()))
}

pub fn parse_graph(text: &str) -> Result<TerminalGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let orientation = match lines.next() {
        Some((_, "graph directed")) => Orientation::Directed,
        Some((_, "graph undirected")) => Orientation::Undirected,
        Some((line, _)) => return Err(parse_error(line, ParseErrorKind::MissingHeader)),
        None => return Err(parse_error(1, ParseErrorKind::MissingHeader)),
    };

    let mut builder = GraphBuilder::new(orientation);
    let mut edges = Vec::new();
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("node") => {
                let id = tokens
                    .next()
                    .ok_or_else(|| malformed(line, "node line without an id"))?;
                let mut weight = None;
                let mut terminal = None;
                for attr in tokens {
                    let (key, value) = attr
                        .split_once('=')
                        .ok_or_else(|| malformed(line, format!("bad attribute {attr:?}")))?;
                    match key {
                        "terminal" if terminal.is_none() => {
                            terminal = Some(match value {
                                "0" => false,
                                "1" => true,
                                _ => return Err(malformed(line, format!("bad terminal flag {value:?}"))),
                            })
                        }
                        "weight" if weight.is_none() => {
                            let w: u32 = value
                                .parse()
                                .map_err(|_| parse_error(line, GraphError::InvalidWeight(id.to_string())))?;
                            weight = Some(w);
                        }
                        _ => return Err(malformed(line, format!("bad attribute {attr:?}"))),
                    }
                }
                builder
                    .add_vertex(id, weight.unwrap_or(1), terminal.unwrap_or(false))
                    .map_err(|e| parse_error(line, e))?;
            }
            Some("edge") => {
                let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(malformed(line, "edge line needs exactly two endpoints"));
                };
                if u == v {
                    return Err(parse_error(line, GraphError::SelfLoop(u.to_string())));
                }
                edges.push((line, u, v));
            }
            Some("graph") => return Err(malformed(line, "repeated header")),
            _ => return Err(malformed(line, content.to_string())),
        }
    }

    let mut seen = BTreeSet::new();
    for (line, u, v) in edges {
        for end in [u, v] {
            if !builder.contains(end) {
                return Err(parse_error(line, GraphError::UnknownVertex(end.to_string())));
            }
        }
        let key = if orientation.is_directed() || u < v {
            (u, v)
        } else {
            (v, u)
        };
        if !seen.insert(key) {
            return Err(parse_error(
                line,
                GraphError::DuplicateEdge(key.0.to_string(), key.1.to_string()),
            ));
        }
        builder.add_edge(u, v).map_err(|e| parse_error(line, e))?;
    }
    Ok(builder.build())
}

/// Canonical text: header, nodes by id, edges by (source, target).
pub fn serialize_graph(g: &TerminalGraph) -> String {
    let mut out = format!("graph {}\n", g.orientation());
    for v in g.vertices() {
        out.push_str("node ");
        out.push_str(v.id.as_str());
        if v.terminal {
            out.push_str(" terminal=1");
        }
        if v.weight != 1 {
            let _ = write!(out, " weight={}", v.weight);
        }
        out.push('\n');
    }
    for (u, v) in g.edge_ids() {
        let _ = writeln!(out, "edge {u} {v}");
    }
    out
}

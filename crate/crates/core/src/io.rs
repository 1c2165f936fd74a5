//! Plain edge-list and DIMACS text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and
//! lines starting with `#` are ignored.
//!
//! DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines.

use crate::graph::{Graph, GraphError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("input has no header line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        syntax(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<(), ParseError> {
    match toks.next() {
        Some(t) => Err(syntax(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

/// First significant line decides: `p`/`c`/`e` means DIMACS.
pub fn detect_format(text: &str) -> Format {
    for l in text.lines().map(str::trim) {
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        return match l.split_whitespace().next() {
            Some("p" | "c" | "e") => Format::Dimacs,
            _ => Format::EdgeList,
        };
    }
    Format::EdgeList
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

pub fn read_graph(path: impl AsRef<std::path::Path>) -> Result<Graph, ParseError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

// Builds the graph, mapping a construction error back to the line of the
// offending pair.
fn build(
    n: usize,
    pairs: Vec<(usize, usize)>,
    lines: &[usize],
    header_line: usize,
) -> Result<Graph, ParseError> {
    Graph::from_edge_list(n, pairs).map_err(|e| {
        let line = match &e {
            GraphError::VertexOutOfRange { index, .. }
            | GraphError::SelfLoop { index, .. }
            | GraphError::DuplicateEdge { index, .. } => lines[index - 1],
            _ => header_line,
        };
        ParseError::Graph { line, source: e }
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut toks = l.split_whitespace();
        let a = number(toks.next(), line, "first field")?;
        let b = number(toks.next(), line, "second field")?;
        no_trailing(toks, line)?;
        if header.is_none() {
            header = Some((a, b, line));
        } else {
            pairs.push((a, b));
            lines.push(line);
        }
    }
    let (n, m, header_line) = header.ok_or(ParseError::MissingHeader)?;
    if pairs.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: pairs.len(),
        });
    }
    build(n, pairs, &lines, header_line)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        let mut toks = l.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(syntax(
                            line,
                            format!("expected `p edge`, got `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                no_trailing(toks, line)?;
                header = Some((n, m, line));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(syntax(line, "edge before `p` line"));
                }
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                no_trailing(toks, line)?;
                pairs.push((u, v));
                lines.push(line);
            }
            Some(t) => return Err(syntax(line, format!("unknown line type `{t}`"))),
        }
    }
    let (n, m, header_line) = header.ok_or(ParseError::MissingHeader)?;
    if pairs.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: pairs.len(),
        });
    }
    build(n, pairs, &lines, header_line)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (_, (u, v)) in g.edges() {
        writeln!(s, "{u} {v}").expect("writing to a String");
    }
    s
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (_, (u, v)) in g.edges() {
        writeln!(s, "e {u} {v}").expect("writing to a String");
    }
    s
}

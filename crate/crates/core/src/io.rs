//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```
//!
//! Writing always produces the canonical form: header followed by the edges
//! sorted lexicographically, one per line.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("expected a non-negative integer, found `{0}`")]
    NotAnInteger(String),
    #[error("expected exactly two fields")]
    FieldCount,
    #[error("vertex {vertex} out of range (n = {n})")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoints must be ordered u < v, found {0} {1}")]
    Unordered(usize, usize),
    #[error("duplicate edge {0} {1}")]
    Duplicate(usize, usize),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

/// One whitespace-separated token with its 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn pair(line_no: usize, line: &str) -> Result<[(usize, usize); 2], ParseError> {
    let toks = tokens(line);
    if toks.len() != 2 {
        let column = toks.get(2).map_or(1, |t| t.0);
        return Err(ParseError {
            line: line_no,
            column,
            kind: ParseErrorKind::FieldCount,
        });
    }
    let mut out = [(0, 0); 2];
    for (slot, (col, tok)) in out.iter_mut().zip(toks) {
        let value = tok.parse::<usize>().map_err(|_| ParseError {
            line: line_no,
            column: col,
            kind: ParseErrorKind::NotAnInteger(tok.to_string()),
        })?;
        *slot = (col, value);
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim_start();
        !t.is_empty() && !t.starts_with('#')
    });
    let (header_line, header) = lines.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        column: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let [(_, n), (_, m)] = pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let [(cu, u), (cv, v)] = pair(line_no, line)?;
        let err = |column, kind| ParseError {
            line: line_no,
            column,
            kind,
        };
        for (col, x) in [(cu, u), (cv, v)] {
            if x >= n {
                return Err(err(col, ParseErrorKind::OutOfRange { vertex: x, n }));
            }
        }
        if u == v {
            return Err(err(cv, ParseErrorKind::SelfLoop(u)));
        }
        if u > v {
            return Err(err(cu, ParseErrorKind::Unordered(u, v)));
        }
        edges.push((u, v, line_no, cu));
    }
    if edges.len() != m {
        return Err(ParseError {
            line: last_line,
            column: 1,
            kind: ParseErrorKind::EdgeCount {
                declared: m,
                found: edges.len(),
            },
        });
    }

    let mut sorted: Vec<_> = edges.iter().map(|&(u, v, l, c)| ((u, v), l, c)).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            let ((u, v), line, column) = w[1];
            return Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::Duplicate(u, v),
            });
        }
    }
    Ok(Graph::from_edges(n, edges.into_iter().map(|(u, v, _, _)| (u, v))).expect("validated"))
}

/// Canonical edge-list text.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Graphviz rendering.
pub fn write_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

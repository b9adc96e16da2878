//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! p 5
//! 0 1
//! 1 2
//! ```
//!
//! The `p <n>` header is optional and fixes the vertex count; without it the
//! count is one past the largest endpoint. Blank lines and `#` lines are
//! skipped. Emitted lists always carry the header so isolated vertices
//! survive a round trip.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "p" {
            if declared_n.is_some() {
                return Err(parse_err(line_no, "duplicate `p` header"));
            }
            if !pairs.is_empty() {
                return Err(parse_err(line_no, "`p` header must precede edges"));
            }
            if fields.len() != 2 {
                return Err(parse_err(line_no, "expected `p <n>`"));
            }
            declared_n = Some(parse_id(fields[1], line_no)?);
            continue;
        }
        if fields.len() != 2 {
            return Err(parse_err(
                line_no,
                format!("expected two vertex ids, found {} fields", fields.len()),
            ));
        }
        pairs.push((
            parse_id(fields[0], line_no)?,
            parse_id(fields[1], line_no)?,
            line_no,
        ));
    }

    // Validate pair by pair so errors carry the line number.
    for &(u, v, line_no) in &pairs {
        if u == v {
            return Err(parse_err(line_no, format!("self-loop ({u},{v})")));
        }
        if let Some(n) = declared_n {
            if u.max(v) >= n {
                return Err(parse_err(
                    line_no,
                    format!("endpoint {} out of range for p {n}", u.max(v)),
                ));
            }
        }
    }
    Graph::from_edge_list(pairs.into_iter().map(|(u, v, _)| (u, v)), declared_n)
}

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {}", g.order());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_id(field: &str, line: usize) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("`{field}` is not a vertex id")))
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

//! Edge-list text format.
//!
//! ```text
//! # comment
//! 4
//! 1 2
//! 3 2
//! ```
//!
//! The first non-comment line holds the vertex count, every following one an
//! edge `u v` meaning `u -> v`. Lines starting with `#` and blank lines are
//! ignored. Serialization writes edges in lexicographic order.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::Graph;
use crate::ParseError;

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n: usize = match header.parse() {
        Ok(n) if n > 0 && n <= u32::MAX as usize => n,
        _ => return Err(ParseError::BadHeader { line: header_line }),
    };

    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (line, body) in lines {
        let mut fields = body.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(ParseError::Malformed { line });
        };
        let (Ok(u), Ok(v)) = (a.parse::<u64>(), b.parse::<u64>()) else {
            return Err(ParseError::Malformed { line });
        };
        for vertex in [u, v] {
            if vertex == 0 || vertex > n as u64 {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        let (u, v) = (u as u32, v as u32);
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u - 1, v - 1)) {
            return Err(ParseError::DuplicateEdge { line, u, v });
        }
    }
    edges.extend(seen);
    Ok(Graph::from_sorted(n, edges))
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

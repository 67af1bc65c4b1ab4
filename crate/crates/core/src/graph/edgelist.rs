//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! v 4
//! 0 1
//! 1 2
//! ```
//!
//! The header gives the vertex count; every following non-blank,
//! non-comment line holds one whitespace-separated pair of 0-based ids.

use std::fmt::Write as _;

use super::{Graph, VertexId};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_id = |s: &str| -> Result<VertexId> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a nonnegative integer, found {s:?}"),
            })
        };
        match (vertex_count, fields.as_slice()) {
            (None, ["v", count]) => vertex_count = Some(parse_id(count)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected header \"v <count>\"".into(),
                })
            }
            (Some(_), [u, w]) => edges.push((parse_id(u)?, parse_id(w)?)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected an edge \"u w\"".into(),
                })
            }
        }
    }
    let n = vertex_count.ok_or(Error::Parse {
        line: 0,
        message: "missing header \"v <count>\"".into(),
    })?;
    Graph::from_edges(n, edges)
}

/// Serializes `g`; labels are written as `# label <id> <name>` comments.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (v, label) in g.labels() {
        let _ = writeln!(out, "# label {v} {label}");
    }
    let _ = writeln!(out, "v {}", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.lo(), e.hi());
    }
    out
}

//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! ```

use std::collections::HashSet;

use super::{Graph, GraphError};

/// Parses a single graph. The first non-comment line must be `n <count>`;
/// each following non-comment line is an edge `u v`. Blank lines are
/// skipped. Error line numbers are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let malformed = |message: String| GraphError::Malformed {
            line: line_no,
            message,
        };
        match n {
            None => {
                let count = match tokens.as_slice() {
                    ["n", count] => count
                        .parse::<usize>()
                        .map_err(|_| malformed(format!("invalid vertex count {count:?}")))?,
                    _ => return Err(malformed(format!("expected `n <count>`, found {line:?}"))),
                };
                if count == 0 {
                    return Err(GraphError::NoVertices.at_line(line_no));
                }
                n = Some(count);
            }
            Some(count) => {
                let (u, v) = match tokens.as_slice() {
                    [u, v] => (
                        u.parse::<usize>()
                            .map_err(|_| malformed(format!("invalid vertex {u:?}")))?,
                        v.parse::<usize>()
                            .map_err(|_| malformed(format!("invalid vertex {v:?}")))?,
                    ),
                    _ => return Err(malformed(format!("expected `u v`, found {line:?}"))),
                };
                let err = if u >= count || v >= count {
                    Some(GraphError::VertexOutOfRange {
                        vertex: u.max(v),
                        n: count,
                    })
                } else if u == v {
                    Some(GraphError::SelfLoop(u))
                } else if !seen.insert((u.min(v), u.max(v))) {
                    Some(GraphError::MultiEdge(u.min(v), u.max(v)))
                } else {
                    None
                };
                if let Some(e) = err {
                    return Err(e.at_line(line_no));
                }
                edges.push((u, v));
            }
        }
    }

    match n {
        Some(count) => Graph::new(count, edges),
        None => Err(GraphError::Malformed {
            line: text.lines().count().max(1),
            message: "missing `n <count>` header".into(),
        }),
    }
}

/// Writes `g` in the format read by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

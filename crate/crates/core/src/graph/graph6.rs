//! graph6 encoding, short form only (`n <= 62`).
//!
//! One size byte `63 + n`, then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte
//! (most significant first, zero padded) and offset by 63.

use super::{Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn bit_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::Graph6(format!(
            "n = {n} needs the long form, only n <= {GRAPH6_MAX_ORDER} is supported"
        )));
    }
    let mut bits = Vec::with_capacity(bit_len(n));
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            byte <<= 1;
            if chunk.get(k).copied().unwrap_or(false) {
                byte |= 1;
            }
        }
        out.push((byte + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 string. Surrounding whitespace and a leading
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let s = line.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(GraphError::Graph6("empty input".into()));
    };
    if let Some(bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(GraphError::Graph6(format!("byte {bad} outside 63..=126")));
    }
    if first == 126 {
        return Err(GraphError::Graph6(format!(
            "long-form size header unsupported (n > {GRAPH6_MAX_ORDER})"
        )));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let expected = 1 + bit_len(n).div_ceil(6);
    if bytes.len() != expected {
        return Err(GraphError::Graph6(format!(
            "expected {expected} bytes for n = {n}, found {}",
            bytes.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Decodes one graph per line; blank lines and bare header lines are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line == HEADER {
            continue;
        }
        out.push(parse_graph6(line).map_err(|e| e.at_line(idx + 1))?);
    }
    Ok(out)
}

//! Graph interchange: edge-list JSON (human readable) and graph6 (compact).

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeListJson,
    Graph6,
}

impl GraphFormat {
    /// Guess from a file extension, falling back to sniffing the content.
    pub fn detect(path: Option<&Path>, bytes: &[u8]) -> GraphFormat {
        match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some("json") => GraphFormat::EdgeListJson,
            Some("g6") | Some("graph6") => GraphFormat::Graph6,
            _ => {
                let first = bytes.iter().find(|b| !b.is_ascii_whitespace());
                if first == Some(&b'{') {
                    GraphFormat::EdgeListJson
                } else {
                    GraphFormat::Graph6
                }
            }
        }
    }
}

pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeListJson => parse_edge_list_json(bytes),
        GraphFormat::Graph6 => parse_graph6(bytes),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::EdgeListJson => {
            let mut out = to_edge_list_json(g).into_bytes();
            out.push(b'\n');
            out
        }
        GraphFormat::Graph6 => {
            let mut out = to_graph6(g).into_bytes();
            out.push(b'\n');
            out
        }
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeListDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// `{"n": int, "edges": [[u, v], ...], "labels": [...]?}` with `u < v`.
pub fn parse_edge_list_json(bytes: &[u8]) -> Result<Graph> {
    let doc: EdgeListDoc = serde_json::from_slice(bytes).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        if u == v {
            return Err(Error::Validation(format!("edge {i}: self-loop at vertex {u}")));
        }
        if u > v {
            return Err(Error::Validation(format!("edge {i}: [{u},{v}] must list the smaller endpoint first")));
        }
    }
    let g = Graph::from_edges(doc.n, doc.edges.iter().map(|&[u, v]| (u, v)))?;
    match doc.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

pub fn to_edge_list_json(g: &Graph) -> String {
    let doc = EdgeListDoc {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

const HEADER: &[u8] = b">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        location: format!("byte {offset}"),
        message: message.into(),
    }
}

/// Decodes one graph6 record. The `>>graph6<<` header and the long-form
/// vertex counts are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let body = &bytes[start..end];
    if let Some(pos) = body.iter().position(|&b| b == b'\n') {
        return Err(g6_err(start + pos, "expected a single graph6 record"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(start + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, header_len) = decode_n(body).map_err(|(off, msg)| g6_err(start + off, msg))?;
    let data = &body[header_len..];
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if data.len() != expected {
        return Err(g6_err(
            start + header_len + data.len().min(expected),
            format!("expected {expected} data bytes for {n} vertices, found {}", data.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_n(body: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let Some(&first) = body.first() else {
        return Err((0, "empty graph6 record".into()));
    };
    if first < 126 {
        return Ok(((first - 63) as usize, 1));
    }
    let read = |from: usize, count: usize| -> std::result::Result<usize, (usize, String)> {
        if body.len() < from + count {
            return Err((body.len(), "truncated vertex count".into()));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    if body.get(1) == Some(&126) {
        Ok((read(2, 6)?, 8))
    } else {
        Ok((read(1, 3)?, 4))
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

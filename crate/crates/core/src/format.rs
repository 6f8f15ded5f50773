//! Text formats: graph6 (interchange), a line-based edge list (hand
//! authoring) and the matching hypergraph edge list.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::hypergraph::HyperGraph;

const BIAS: u8 = 63;

/// Decodes one graph6 line. Trailing `\r`/`\n` are ignored; an optional
/// `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim_end_matches(['\r', '\n']);
    let (skip, text) = match text.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, text),
    };
    let bytes = text.as_bytes();
    let err = |offset: usize, message: &str| Error::Graph6 {
        offset: skip + offset,
        message: message.to_string(),
    };

    let first = *bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(BIAS..=126).contains(&first) {
        return Err(err(0, "malformed header byte"));
    }
    let (n, header_len) = if first < 126 {
        ((first - BIAS) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "eight-byte size header exceeds the 64-vertex limit"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            let b = *bytes
                .get(i)
                .ok_or_else(|| err(i, "truncated size header"))?;
            if !(BIAS..=126).contains(&b) {
                return Err(err(i, "malformed header byte"));
            }
            n = n << 6 | (b - BIAS) as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n });
    }

    let pair_bits = n * n.saturating_sub(1) / 2;
    let body_len = pair_bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(bytes.len(), "truncated bit body"));
    }
    if body.len() > body_len {
        return Err(err(header_len + body_len, "trailing data after bit body"));
    }

    let mut adj = vec![0u64; n];
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &b) in body.iter().enumerate() {
        let offset = header_len + k;
        if !(BIAS..=126).contains(&b) {
            return Err(err(offset, "byte outside the graph6 range"));
        }
        let chunk = b - BIAS;
        for shift in (0..6).rev() {
            let bit_index = k * 6 + (5 - shift);
            let set = chunk >> shift & 1 == 1;
            if bit_index >= pair_bits {
                if set {
                    return Err(err(offset, "set bit beyond the last vertex pair"));
                }
                continue;
            }
            if set {
                adj[i] |= 1u64 << j;
                adj[j] |= 1u64 << i;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Graph::from_rows(adj)
}

/// Encodes a graph as graph6 (no header, no newline).
/// Graphs serialize as their graph6 string.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_graph6(self))
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn header_count(
    lines: &mut dyn Iterator<Item = (usize, &str)>,
    err: &dyn Fn(usize, String) -> Error,
) -> Result<usize> {
    let (no, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let mut tokens = header.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(count), None) => count
            .parse::<usize>()
            .map_err(|_| err(no, format!("unparsable vertex count `{count}`"))),
        _ => Err(err(no, "expected `n <count>`".into())),
    }
}

fn vertex_token(
    token: &str,
    n: usize,
    line: usize,
    err: &dyn Fn(usize, String) -> Error,
) -> Result<usize> {
    let v = token
        .parse::<usize>()
        .map_err(|_| err(line, format!("unparsable token `{token}`")))?;
    if v >= n {
        return Err(err(line, format!("vertex {v} out of range 0..{n}")));
    }
    Ok(v)
}

/// Parses `n <count>` followed by one `u v` pair per line. Duplicate pairs
/// collapse; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let mut lines = significant_lines(text);
    let n = header_count(&mut lines, &err)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n });
    }
    let mut edges = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(err(no, format!("expected `u v`, found `{line}`")));
        };
        let (u, v) = (vertex_token(a, n, no, &err)?, vertex_token(b, n, no, &err)?);
        if u == v {
            return Err(err(no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Parses `n <count>` followed by one hyperedge per line as
/// space-separated vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<HyperGraph> {
    let err = |line: usize, message: String| Error::Hypergraph { line, message };
    let mut lines = significant_lines(text);
    let n = header_count(&mut lines, &err)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n });
    }
    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut edge = VertexSet::EMPTY;
        for token in line.split_whitespace() {
            edge.insert(vertex_token(token, n, no, &err)?);
        }
        edges.push(edge);
    }
    HyperGraph::new(n, edges)
}

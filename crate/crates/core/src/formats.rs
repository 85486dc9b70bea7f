//! Text formats: graph6 (short form, bit-exact) and a whitespace
//! tolerant edge-list format that accepts numeric indices or symbolic
//! labels.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_ORDER: usize = 62;

/// Parses a short-form graph6 string: order byte `n+63`, then the
/// upper adjacency triangle in column-major order, six bits per byte,
/// each byte offset by 63.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::MalformedInput("empty graph6 string".into()));
    }
    if bytes[0] == b'~' {
        return Err(GraphError::UnsupportedLongForm);
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(GraphError::MalformedInput(format!(
            "bad graph6 order byte {}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(GraphError::MalformedInput(format!(
            "graph6 for order {n} needs {} data bytes, got {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Column-major: for each column v, rows u < v.
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(GraphError::MalformedInput(format!(
                    "bad graph6 data byte {byte}"
                )));
            }
            let chunk = byte - 63;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(GraphError::MalformedInput(
                "nonzero padding bits in graph6".into(),
            ));
        }
    }
    Graph::build(n, &edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(GraphError::UnsupportedLongForm);
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut fill = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            fill += 1;
            if fill == 6 {
                out.push(63 + acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(63 + (acc << (6 - fill)));
    }
    Ok(String::from_utf8(out).expect("printable range"))
}

fn is_index_token(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit())
}

/// Parses lines of "u v" edges with an optional "n <count>" header and
/// '#' comments. Tokens that are not plain numbers are treated as
/// symbolic labels, indexed in order of first appearance.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut numeric_edges: Vec<(usize, usize)> = Vec::new();
    let mut label_edges: Vec<(String, String)> = Vec::new();
    let mut saw_numeric = false;
    let mut saw_symbolic = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks[0] == "n" {
            if toks.len() != 2 || !is_index_token(toks[1]) {
                return Err(GraphError::MalformedInput(format!(
                    "line {}: header must be 'n <count>'",
                    lineno + 1
                )));
            }
            declared_n = Some(toks[1].parse().unwrap());
            continue;
        }
        if toks.len() != 2 {
            return Err(GraphError::MalformedInput(format!(
                "line {}: expected 'u v'",
                lineno + 1
            )));
        }
        if is_index_token(toks[0]) && is_index_token(toks[1]) {
            saw_numeric = true;
            numeric_edges.push((toks[0].parse().unwrap(), toks[1].parse().unwrap()));
        } else {
            saw_symbolic = true;
            label_edges.push((toks[0].to_string(), toks[1].to_string()));
        }
    }
    if saw_numeric && saw_symbolic {
        return Err(GraphError::MalformedInput(
            "mixed numeric and symbolic endpoints".into(),
        ));
    }
    if saw_symbolic {
        let mut labels: Vec<String> = Vec::new();
        let mut index = std::collections::HashMap::new();
        let mut edges = Vec::new();
        for (a, b) in &label_edges {
            for l in [a, b] {
                if !index.contains_key(l) {
                    index.insert(l.clone(), labels.len());
                    labels.push(l.clone());
                }
            }
            edges.push((index[a], index[b]));
        }
        let n = declared_n.unwrap_or(labels.len()).max(labels.len());
        for i in labels.len()..n {
            labels.push(format!("_{i}"));
        }
        return Graph::build_labeled(n, &edges, labels);
    }
    let need = numeric_edges
        .iter()
        .map(|&(u, v)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let n = declared_n.unwrap_or(need);
    Graph::build(n, &numeric_edges)
}

/// Deterministic emission: header, then edges sorted by (min,max)
/// endpoint indices; labels are used when present.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", g.display_label(u), g.display_label(v)));
    }
    out
}

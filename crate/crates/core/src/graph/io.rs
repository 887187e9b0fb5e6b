//! Text formats: the multigraph edge list, graph6, and DOT.
//!
//! Edge list: a header line `n m`, then `m` lines `u v [mult]` with 0-based
//! vertices. Blank lines and `#` comments are ignored. The writer emits one
//! line per distinct pair in ascending order and omits a multiplicity of 1,
//! so its output is canonical.

use std::fmt::Write as _;

use super::{GraphError, Multigraph};

fn parse_err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse { line, reason: reason.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Multigraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums = parse_numbers(hline, header)?;
    let [n, m] = nums[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let nums = parse_numbers(lineno, line)?;
        match nums[..] {
            [u, v] => edges.push((u, v, 1)),
            [u, v, mult] => edges.push((u, v, mult)),
            _ => return Err(parse_err(lineno, "expected `u v [mult]`")),
        }
    }
    if edges.len() != m {
        return Err(parse_err(hline, format!("header declares {m} edge lines, found {}", edges.len())));
    }
    Multigraph::from_weighted_edges(n, edges)
}

fn parse_numbers(lineno: usize, line: &str) -> Result<Vec<usize>, GraphError> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("`{t}` is not a non-negative integer"))))
        .collect()
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    let pairs: Vec<_> = g.edges().collect();
    writeln!(out, "{} {}", g.order(), pairs.len()).unwrap();
    for ((u, v), m) in pairs {
        if m == 1 {
            writeln!(out, "{u} {v}").unwrap();
        } else {
            writeln!(out, "{u} {v} {m}").unwrap();
        }
    }
    out
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(text: &str) -> Result<Multigraph, GraphError> {
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "graph6 bytes must lie in 63..=126"));
    }
    let (n, rest) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, r @ ..] if r.len() >= 6 => (decode_bits(&r[..6]), &r[6..]),
        [126, r @ ..] if r.len() >= 3 => (decode_bits(&r[..3]), &r[3..]),
        [126, ..] => return Err(parse_err(1, "truncated graph6 order")),
        [b, r @ ..] => ((*b - 63) as usize, r),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(1, format!("expected {needed} adjacency bytes, found {}", rest.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::from_edges(n, edges)
}

fn decode_bits(groups: &[u8]) -> usize {
    groups.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

pub fn write_graph6(g: &Multigraph) -> Result<String, GraphError> {
    g.require_simple()?;
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// DOT export; parallel edges are repeated.
pub fn write_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v, _) in g.edge_copies() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

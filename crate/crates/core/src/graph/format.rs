//! Text formats: the `n m` edge list and graph6.

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses `n m` followed by `m` lines of `u v` (0-based). Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let (n, m) = parse_pair(header, line)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(l, line)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("endpoint out of range for {n} vertices"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse {
            line,
            message: "trailing content after edge list".into(),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(l: &str, line: usize) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut it = l.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| err("expected two integers".into()))?;
        tok.parse()
            .map_err(|_| err(format!("not a nonnegative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(err("expected exactly two integers".into()));
    }
    Ok((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a simple graph as graph6 (no header).
pub fn to_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Precondition("graph6 requires a simple graph".into()));
    }
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out)?;
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(adj[i * n + j]);
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
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

fn encode_order(n: usize, out: &mut Vec<u8>) -> Result<()> {
    let six = |x: usize, k: u32| ((x >> (6 * k)) & 63) as u8 + 63;
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| six(n, k)));
    } else if (n as u64) < (1u64 << 36) {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| six(n, k)));
    } else {
        return Err(Error::Capacity {
            what: "graph6 order",
            got: n,
            limit: (1usize << 36) - 1,
        });
    }
    Ok(())
}

/// Decodes one graph6 string; the `>>graph6<<` header is optional.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let err = |message: &str| Error::Parse {
        line: 1,
        message: message.to_string(),
    };
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty graph6 string"));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(&format!("invalid graph6 byte {b:#x}")));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, rest) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(err("truncated graph6 order"));
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | val(b));
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(err("truncated graph6 order"));
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | val(b));
        (n, &bytes[8..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    if rest.len() != needed {
        return Err(err(&format!(
            "expected {needed} adjacency bytes for order {n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(rest[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Accepts either format: an edge list if the first meaningful line is two
/// integers, otherwise a single graph6 string.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let looks_numeric = first
        .split_whitespace()
        .next()
        .is_some_and(|t| t.chars().all(|c| c.is_ascii_digit()));
    if looks_numeric && first.split_whitespace().count() >= 2 {
        parse_edge_list(text)
    } else {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        if lines.len() != 1 {
            return Err(Error::Parse {
                line: 1,
                message: "expected an edge list or a single graph6 line".into(),
            });
        }
        parse_graph6(lines[0])
    }
}

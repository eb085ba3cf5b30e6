//! Text formats: edge lists, graph6, interval lists and the JSON shapes
//! for primes, Betti tables and h-polynomials.

use std::fmt::Write as _;

use bei_core::algebra::{BettiTable, HPolynomial};
use bei_core::interval::{Endpoint, Interval, IntervalRepresentation};
use bei_core::primes::MinimalPrime;
use bei_core::Graph;
use num_rational::Ratio;
use serde::Serialize;

use crate::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Meaningful lines with their 1-based line numbers; `#` starts a comment.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// First line `n`, then one `u v` pair per line, vertices `1..=n`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(first, format!("expected vertex count, got {header:?}")))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let tok = parts
                .next()
                .ok_or_else(|| parse_err(no, "expected two vertices"))?;
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(no, format!("bad vertex {tok:?}")))?;
            if v == 0 || v > n {
                return Err(parse_err(no, format!("vertex {v} outside 1..={n}")));
            }
            Ok(v)
        };
        let (u, v) = (vertex()?, vertex()?);
        if parts.next().is_some() {
            return Err(parse_err(no, "trailing tokens"));
        }
        edges.push((u, v));
    }
    Ok(Graph::from_one_based(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is skipped).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) || bytes.is_empty() {
        return Err(parse_err(1, "not a graph6 string"));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(parse_err(1, "unsupported graph6 size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, expected {}",
                body.len(),
                pairs.div_ceil(6)
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let byte = chunk
            .iter()
            .enumerate()
            .fold(0u8, |acc, (p, &b)| acc | (b as u8) << (5 - p));
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Edge list when the first meaningful line is a bare integer, graph6
/// otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match content_lines(text).next() {
        Some((_, first)) if first.parse::<usize>().is_ok() => parse_edge_list(text),
        Some((_, first)) => parse_graph6(first),
        None => Err(parse_err(1, "empty input")),
    }
}

/// `p`, `p/q` or `p/2^k`.
pub fn parse_endpoint(tok: &str) -> Option<Endpoint> {
    match tok.split_once('/') {
        None => tok.parse().ok().map(Ratio::from_integer),
        Some((p, q)) => {
            let p: i64 = p.parse().ok()?;
            let q: i64 = match q.strip_prefix("2^") {
                Some(e) => 1i64.checked_shl(e.parse().ok()?)?,
                None => q.parse().ok()?,
            };
            (q > 0).then(|| Ratio::new(p, q))
        }
    }
}

pub fn format_endpoint(x: &Endpoint) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lines `label a b`.
pub fn parse_intervals(text: &str) -> Result<Vec<(String, Interval)>> {
    content_lines(text)
        .map(|(no, line)| {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [label, a, b] = parts[..] else {
                return Err(parse_err(no, "expected `label a b`"));
            };
            let end = |t: &str| {
                parse_endpoint(t).ok_or_else(|| parse_err(no, format!("bad endpoint {t:?}")))
            };
            let (lo, hi) = (end(a)?, end(b)?);
            if lo > hi {
                return Err(parse_err(no, "left endpoint exceeds right endpoint"));
            }
            Ok((label.to_string(), Interval::new(lo, hi)))
        })
        .collect()
}

/// One `label a b` line per interval, labels taken from `g`.
pub fn write_representation(rep: &IntervalRepresentation, g: &Graph) -> String {
    let mut out = String::new();
    for (interval, &v) in rep.intervals().iter().zip(&rep.vertex_map) {
        let _ = writeln!(
            out,
            "{} {} {}",
            g.label(v),
            format_endpoint(&interval.lo),
            format_endpoint(&interval.hi)
        );
    }
    out
}

#[derive(Serialize)]
struct PrimeJson {
    #[serde(rename = "T")]
    cut_set: Vec<usize>,
    components: Vec<Vec<usize>>,
}

fn one_based(vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    vs.into_iter().map(|v| v + 1).collect()
}

pub fn primes_json(primes: &[MinimalPrime]) -> serde_json::Value {
    let list: Vec<PrimeJson> = primes
        .iter()
        .map(|p| PrimeJson {
            cut_set: one_based(p.cut_set.iter()),
            components: p.components.iter().map(|c| one_based(c.iter())).collect(),
        })
        .collect();
    serde_json::to_value(list).expect("serializable")
}

pub fn betti_json(table: &BettiTable) -> serde_json::Value {
    let rows: Vec<[u64; 3]> = table
        .entries()
        .map(|((i, j), r)| [i as u64, j as u64, r])
        .collect();
    serde_json::json!({ "betti": rows, "reg": table.regularity() })
}

pub fn h_json(h: &HPolynomial) -> serde_json::Value {
    serde_json::json!({ "h": h.coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>(), "dim": h.dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bei_core::family;

    #[test]
    fn graph6_known_strings() {
        // P_3 with edges 01, 12 and K_4
        assert_eq!(write_graph6(&family::path(3).unwrap()), "Bg");
        assert_eq!(write_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(parse_graph6("Bg").unwrap(), family::path(3).unwrap());
    }

    #[test]
    fn endpoints() {
        assert_eq!(parse_endpoint("3/2^2"), Some(Ratio::new(3, 4)));
        assert_eq!(parse_endpoint("-1"), Some(Ratio::from_integer(-1)));
        assert_eq!(parse_endpoint("1/0"), None);
        assert_eq!(format_endpoint(&Ratio::new(2, 4)), "1/2");
    }

    #[test]
    fn edge_list_errors_carry_line() {
        let err = parse_edge_list("3\n1 2\n2 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }
}

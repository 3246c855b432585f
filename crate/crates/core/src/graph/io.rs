//! Graph serialisation.
//!
//! Text format: a header line `n m`, then `m` lines `u v` with `u < v` in
//! ascending lexicographic order. ASCII decimal, LF line endings.
//!
//! graph6: the usual printable encoding. `N(n)` is one byte `n + 63` for
//! `n <= 62`, otherwise `126` followed by three 6-bit big-endian groups
//! (`n <= 258047`). The upper triangle is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, high bit
//! first, padded with zeros, each byte offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub fn to_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_text(s: &str) -> Result<Graph> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header says {m} edges, found {}", edges.len())));
    }
    let g = Graph::new(n, &edges)?;
    if g.edge_count() != m {
        return Err(Error::Parse("duplicate edges".into()));
    }
    Ok(g)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 small header supports n <= 258047");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let bad = |msg: &str| Error::Parse(format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes.first() {
        None => return Err(bad("empty")),
        Some(126) => {
            if bytes.len() < 4 || bytes[1] == 126 {
                return Err(bad("unsupported size header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(bad("wrong body length"));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge_unchecked(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};
    use proptest::prelude::*;

    #[test]
    fn text_format_is_exact() {
        assert_eq!(to_text(&path(4)), "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(to_text(&Graph::empty(2)), "2 0\n");
        assert_eq!(from_text("4 3\n0 1\n1 2\n2 3\n").unwrap(), path(4));
    }

    #[test]
    fn text_format_errors() {
        assert!(from_text("").is_err());
        assert!(from_text("3 2\n0 1\n").is_err());
        assert!(from_text("3 1\n0 3\n").is_err());
        assert!(from_text("3 1\n0 x\n").is_err());
        assert!(from_text("3 2\n0 1\n1 0\n").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // C5 and P4 as produced by nauty's geng/showg conventions
        assert_eq!(to_graph6(&cycle(5)), "Dhc");
        assert_eq!(to_graph6(&path(4)), "Ch");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(from_graph6("Dhc").unwrap(), cycle(5));
    }

    proptest! {
        #[test]
        fn graph6_and_text_roundtrip(n in 0usize..70, seed in any::<u64>()) {
            let mut g = Graph::empty(n);
            let mut x = seed | 1;
            for u in 0..n {
                for v in u + 1..n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { g.add_edge_unchecked(u, v); }
                }
            }
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(from_text(&to_text(&g)).unwrap(), g);
        }
    }
}

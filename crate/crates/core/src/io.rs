//! Reading and writing graphs: a small edge-list text format and graph6.

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_VERTICES, HARD_MAX_VERTICES};

/// Parses the edge-list format: `#` starts a comment, the first data line is
/// `n m`, and each of the following m data lines is one edge `u v` (1-indexed).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with_limit(text, DEFAULT_MAX_VERTICES)
}

pub fn parse_edge_list_with_limit(text: &str, max_n: usize) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected two integers, got {:?}", line),
            });
        }
        let mut nums = [0usize; 2];
        for (slot, f) in nums.iter_mut().zip(&fields) {
            *slot = f.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid integer {:?}", f),
            })?;
        }
        match header {
            None => header = Some((nums[0], nums[1])),
            Some(_) => edges.push((nums[0], nums[1])),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `n m` header line".to_string(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("header promised {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list_with_limit(n, &edges, max_n)
}

/// Canonical edge-list text: header, then edges sorted with u < v.
/// `parse_edge_list(&write_edge_list(g))` reproduces `g` byte-for-byte
/// under a further write.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a graph6 string (single-byte header form, so n <= 62).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    parse_graph6_with_limit(s, DEFAULT_MAX_VERTICES)
}

pub fn parse_graph6_with_limit(s: &str, max_n: usize) -> Result<Graph> {
    let bytes = s.trim().as_bytes();
    let g6err = |msg: String| Error::Parse { line: 1, msg };
    if bytes.is_empty() {
        return Err(g6err("empty graph6 string".to_string()));
    }
    if bytes[0] == b'~' {
        return Err(g6err(
            "multi-byte graph6 vertex counts (n > 62) are not supported".to_string(),
        ));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(g6err(format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > max_n.min(HARD_MAX_VERTICES) {
        return Err(Error::TooManyVertices { n, max: max_n.min(HARD_MAX_VERTICES) });
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() != 1 + nbytes {
        return Err(g6err(format!(
            "expected {} bytes after the header for n = {n}, got {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let bit = |k: usize| -> bool {
        let b = bytes[1 + k / 6] - 63;
        b & (1 << (5 - k % 6)) != 0
    };
    // Trailing pad bits must be zero.
    for k in nbits..nbytes * 6 {
        if bit(k) {
            return Err(g6err("nonzero padding bits".to_string()));
        }
    }
    // Bits run down the upper triangle column by column.
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    Graph::from_edge_list_with_limit(n, &edges, max_n)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n <= 62);
    let nbits = n * (n - 1) / 2;
    let nbytes = (nbits + 5) / 6;
    let mut body = vec![0u8; nbytes];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i + 1, j + 1) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + nbytes);
    out.push((n as u8 + 63) as char);
    for b in body {
        out.push((b + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph};

    #[test]
    fn edge_list_round_trip() {
        let g = cycle_graph(5);
        let text = write_edge_list(&g);
        assert_eq!(text, "5 5\n1 2\n1 5\n2 3\n3 4\n4 5\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn edge_list_comments_and_blanks() {
        let text = "# a square\n\n4 4   # n m\n1 2\n2 3\n3 4\n4 1 # last\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, cycle_graph(4));
    }

    #[test]
    fn edge_list_rejects_malformed() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 1\n"),
            Err(Error::Parse { .. }) // promised edge missing
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 2 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(
            parse_edge_list("3 1\n1 4\n"),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn graph6_known_value() {
        // 5 vertices, edges {1,3}, {1,5}, {2,4}, {4,5}.
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), &[(1, 3), (1, 5), (2, 4), (4, 5)]);
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_round_trip() {
        for g in [path_graph(1), path_graph(7), cycle_graph(6), crate::graph::katzman_graph()] {
            let s = to_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
        assert_eq!(to_graph6(&path_graph(1)), "@");
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("~??").is_err()); // multi-byte header
        assert!(parse_graph6("D").is_err()); // truncated body
        assert!(parse_graph6("DQcQ").is_err()); // overlong body
        assert!(parse_graph6("D c").is_err()); // byte below offset
        assert!(parse_graph6("B\x7f").is_err()); // byte above range
        assert!(matches!(parse_graph6("B@"), Err(Error::Parse { .. }))); // pad bits set
        assert_eq!(parse_graph6("Bw").unwrap(), crate::graph::complete_graph(3));
        assert_eq!(parse_graph6("?"), Err(Error::NoVertices));
    }
}

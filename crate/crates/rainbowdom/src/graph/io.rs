//! Text interchange formats: the `"n m"` edge-list format and graph6.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Serializes as `"n m"` on the first line followed by one `"u v"` line per
/// edge, edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut tokens = text.split_whitespace();
    let mut next_num = |what: &str| -> Result<usize, FormatError> {
        tokens
            .next()
            .ok_or_else(|| FormatError::EdgeList(format!("missing {what}")))?
            .parse()
            .map_err(|_| FormatError::EdgeList(format!("{what} is not a number")))
    };
    let n = next_num("vertex count")?;
    let m = next_num("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next_num(&format!("endpoint of edge {i}"))?;
        let v = next_num(&format!("endpoint of edge {i}"))?;
        edges.push((u, v));
    }
    if tokens.next().is_some() {
        return Err(FormatError::EdgeList("trailing tokens".into()));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Maximum order representable in the single-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

/// Decodes the ASCII graph6 encoding: byte 0 is `n + 63` (n <= 62), followed
/// by the upper-triangle bit vector over pairs `(i, j)` with `i < j` in
/// column-major order, packed 6 bits per byte MSB-first, each byte offset
/// by 63.
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.strip_prefix(">>graph6<<").unwrap_or(text).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6("empty input".into()));
    }
    if bytes[0] == 126 {
        return Err(FormatError::Graph6(
            "orders above 62 are not supported".into(),
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(FormatError::Graph6(format!("bad header byte {}", bytes[0])));
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if bytes.len() != 1 + need {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for n={n}, got {}",
            need,
            bytes.len() - 1
        )));
    }
    let mut edges = Vec::new();
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + t / 6];
            if !(63..=126).contains(&byte) {
                return Err(FormatError::Graph6(format!("bad data byte {byte}")));
            }
            if (byte - 63) >> (5 - t % 6) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edge_list(n, &edges).map_err(|e| match e {
        GraphError::Empty => FormatError::Graph6("graph6 with zero vertices".into()),
        other => FormatError::Graph(other),
    })
}

pub fn to_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(FormatError::Graph6(format!(
            "order {n} exceeds the supported maximum {GRAPH6_MAX_N}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[t / 6] |= 1 << (5 - t % 6);
            }
            t += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    for b in data {
        out.push((b + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::{cycle_graph, path_graph, star_graph};
    use crate::graph::is_isomorphic;

    #[test]
    fn edge_list_round_trip_is_exact() {
        let g = star_graph(4).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("5 4\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_parse_errors() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3").is_err());
        assert!(parse_edge_list("3 1\n0").is_err());
        assert!(parse_edge_list("3 1\n0 1 7").is_err());
        assert!(parse_edge_list("3 1\n0 x").is_err());
        assert!(parse_edge_list("3 1\n0 3").is_err());
    }

    #[test]
    fn graph6_known_vectors() {
        // "Cr": n = 4, data byte 'r' = 114 -> 51 = 110011 over pairs
        // (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) -> edges 01, 02, 13, 23,
        // which is a 4-cycle.
        let g = from_graph6("Cr").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(is_isomorphic(&g, &cycle_graph(4).unwrap()));

        // K2 is "A_", the empty graph on two vertices "A?".
        assert_eq!(to_graph6(&path_graph(2).unwrap()).unwrap(), "A_");
        let e2 = crate::graph::Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(to_graph6(&e2).unwrap(), "A?");
        assert_eq!(from_graph6("A?").unwrap(), e2);
    }

    #[test]
    fn graph6_round_trip() {
        for g in [
            path_graph(1).unwrap(),
            path_graph(7).unwrap(),
            cycle_graph(6).unwrap(),
            star_graph(9).unwrap(),
        ] {
            let enc = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err()); // missing data byte
        assert!(from_graph6("Crr").is_err()); // extra data byte
        assert!(from_graph6("~").is_err()); // long-form header
        assert!(from_graph6("C\x20").is_err()); // data byte below 63
    }
}

//! graph6 encoding and a plain edge-list text format.
//!
//! graph6 per the standard ASCII convention: one size byte `63 + n`
//! (n <= 62 here, and this toolkit caps at 32), then the upper triangle of
//! the adjacency matrix in column-major order, six bits per byte, each byte
//! offset by 63.

use crate::error::ParseError;
use crate::graph::{Graph, MAX_VERTICES};

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut bits: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            bits <<= 1;
            if g.has_edge(u, v) {
                bits |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((63 + bits) as char);
                bits = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bits <<= 6 - filled;
        out.push((63 + bits) as char);
    }
    out
}

/// Parses one graph6 line. A leading `>>graph6<<` marker is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\r', '\n']);
    let (bytes, base) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
        None => (line.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(ParseError::new(base, "empty graph6 line"));
    }
    let size = bytes[0];
    if size == 126 {
        return Err(ParseError::new(
            base,
            "multi-byte graph6 size (n > 62) not supported",
        ));
    }
    if !(63..=126).contains(&size) {
        return Err(ParseError::new(base, format!("invalid size byte 0x{size:02x}")));
    }
    let n = (size - 63) as usize;
    if n > MAX_VERTICES {
        return Err(ParseError::new(
            base,
            format!("graph on {n} vertices exceeds the 32-vertex limit"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < 1 + nbytes {
        return Err(ParseError::new(
            base + bytes.len(),
            format!("truncated: need {nbytes} data bytes, found {}", bytes.len() - 1),
        ));
    }
    if bytes.len() > 1 + nbytes {
        return Err(ParseError::new(base + 1 + nbytes, "trailing bytes after graph6 data"));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0; // bit index over the upper triangle
    for (bi, &byte) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(ParseError::new(
                base + 1 + bi,
                format!("invalid data byte 0x{byte:02x}"),
            ));
        }
        let data = byte - 63;
        for bit in 0..6 {
            if idx >= nbits {
                if data & (0x20 >> bit) != 0 {
                    return Err(ParseError::new(base + 1 + bi, "nonzero padding bits"));
                }
                continue;
            }
            if data & (0x20 >> bit) != 0 {
                let (u, v) = triangle_pos(idx);
                g.insert_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

/// The pair (u, v), u < v, at column-major upper-triangle position `idx`.
fn triangle_pos(idx: usize) -> (usize, usize) {
    let mut v = 1;
    let mut start = 0;
    while start + v <= idx {
        start += v;
        v += 1;
    }
    (idx - start, v)
}

/// Writes the `n m` / `u v` edge-list text format.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the `n m` header line followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for line in text.lines() {
        lines.push((offset, line));
        offset += line.len() + 1;
    }
    let mut it = lines.into_iter().filter(|(_, l)| !l.trim().is_empty());
    let (hoff, header) = it
        .next()
        .ok_or_else(|| ParseError::new(0, "empty edge-list input"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::new(hoff, "header must be `n m`"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::new(hoff, "header must be `n m`"))?;
    if parts.next().is_some() {
        return Err(ParseError::new(hoff, "header must be `n m`"));
    }
    if n > MAX_VERTICES {
        return Err(ParseError::new(hoff, format!("{n} vertices exceeds the 32-vertex limit")));
    }
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (loff, line) in it {
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ParseError::new(loff, "edge line must be `u v`"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ParseError::new(loff, "edge line must be `u v`"))?;
        if parts.next().is_some() {
            return Err(ParseError::new(loff, "edge line must be `u v`"));
        }
        if u >= n || v >= n {
            return Err(ParseError::new(loff, format!("vertex out of range in edge ({u},{v})")));
        }
        if u == v {
            return Err(ParseError::new(loff, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(ParseError::new(loff, format!("duplicate edge ({u},{v})")));
        }
        g.insert_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(ParseError::new(offset, format!("expected {m} edges, found {count}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn k4_encodes_to_c_tilde() {
        // hand-derived: size byte 63+4='C', six triangle bits all 1 -> 63+63='~'
        assert_eq!(write_graph6(&catalog::complete(4)), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), catalog::complete(4));
    }

    #[test]
    fn trivial_sizes() {
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn prism_round_trips_bit_identically() {
        let g = catalog::prism();
        assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        let err = parse_graph6("garbage\x01").unwrap_err();
        assert!(err.offset < 8);
        assert!(parse_graph6("").is_err());
        // truncated K4 line
        assert!(parse_graph6("C").is_err());
        // n > 32
        let big = ((63 + 40) as u8 as char).to_string();
        assert!(parse_graph6(&big).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = catalog::petersen();
        let text = write_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("2 2\n0 1\n").is_err());
    }
}

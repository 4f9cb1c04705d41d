//! Input handling: graph6 line files and `n m` edge-list files, with
//! auto-detection. Every parsed graph remembers where it came from so error
//! reports can name the line.

use std::fs;
use std::path::Path;

use minorkit::graph::Graph;
use minorkit::graph6::{parse_edge_list, parse_graph6};

#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub source: String,
    pub line: usize,
}

#[derive(Debug)]
pub struct InputError {
    pub source: String,
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.source, self.line, self.message)
    }
}

/// Reads one input file. A file whose first non-empty line is `n m` (two
/// integers) parses as a single edge-list graph; anything else parses as
/// one graph6 line per non-empty line.
pub fn read_graphs(path: &Path) -> Result<Vec<ParsedGraph>, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError {
        source: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    parse_text(&text, &path.display().to_string())
}

pub fn parse_text(text: &str, source: &str) -> Result<Vec<ParsedGraph>, InputError> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let looks_like_edge_list = {
        let toks: Vec<&str> = first.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    };
    if looks_like_edge_list {
        let g = parse_edge_list(text).map_err(|e| InputError {
            source: source.to_string(),
            line: text[..e.offset.min(text.len())].lines().count().max(1),
            message: e.message,
        })?;
        return Ok(vec![ParsedGraph {
            graph: g,
            source: source.to_string(),
            line: 1,
        }]);
    }
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line.trim()).map_err(|e| InputError {
            source: source.to_string(),
            line: idx + 1,
            message: format!("{} (byte {})", e.message, e.offset),
        })?;
        out.push(ParsedGraph {
            graph: g,
            source: source.to_string(),
            line: idx + 1,
        });
    }
    if out.is_empty() {
        return Err(InputError {
            source: source.to_string(),
            line: 1,
            message: "no graphs in input".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use minorkit::catalog;

    #[test]
    fn autodetects_both_formats() {
        let g6 = parse_text("C~\nC~\n", "t").unwrap();
        assert_eq!(g6.len(), 2);
        assert_eq!(g6[0].graph, catalog::complete(4));
        let el = parse_text("3 3\n0 1\n1 2\n2 0\n", "t").unwrap();
        assert_eq!(el.len(), 1);
        assert_eq!(el[0].graph, catalog::complete(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_text("C~\n\u{1}garbage\n", "t").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_text("", "t").is_err());
    }
}

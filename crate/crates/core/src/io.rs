//! Plain-text graph format.
//!
//! ```text
//! c optional comments
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! Vertex ids are 1-based on the wire and 0-based in memory. `p edge <n> <m>`
//! is accepted as well. Vertex labels are written as `c v <id> <label>`
//! comments and read back when every vertex carries one.

use std::fmt::Write as _;

use crate::error::{ParseError, Result};
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("{what} `{tok}` is not a non-negative integer")))
}

/// Parses a graph; duplicate edges are collapsed, self-loops rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0;
    let mut seen = 0;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut toks = trimmed.split_whitespace();
        match toks.next() {
            Some("c") => {
                if let (Some("v"), Some(g)) = (toks.next(), graph.as_ref()) {
                    let id = parse_count(toks.next(), line, "vertex id")?;
                    if id == 0 || id > g.n() {
                        return Err(parse_err(line, format!("vertex id {id} out of range 1..={}", g.n())));
                    }
                    let rest: Vec<&str> = toks.collect();
                    labels[id - 1] = Some(rest.join(" "));
                }
            }
            Some("p") => {
                if graph.is_some() {
                    return Err(parse_err(line, "second header line"));
                }
                let mut tok = toks.next();
                if matches!(tok, Some("edge" | "col")) {
                    tok = toks.next();
                }
                let n = parse_count(tok, line, "vertex count")?;
                declared = parse_count(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after header"));
                }
                graph = Some(Graph::new(n));
                labels = vec![None; n];
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = parse_count(toks.next(), line, "endpoint")?;
                let v = parse_count(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens after edge"));
                }
                for id in [u, v] {
                    if id == 0 || id > g.n() {
                        return Err(parse_err(line, format!("vertex id {id} out of range 1..={}", g.n())));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1);
                seen += 1;
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => unreachable!(),
        }
    }

    let mut g = graph.ok_or_else(|| parse_err(last_line.max(1), "missing header `p <n> <m>`"))?;
    if seen != declared {
        return Err(parse_err(
            last_line,
            format!("header declares {declared} edges but {seen} edge lines were read"),
        ));
    }
    if g.n() > 0 && labels.iter().all(Option::is_some) {
        g.set_labels(labels.into_iter().flatten().collect());
    }
    Ok(g)
}

/// Canonical text: header, labels, then edges in lexicographic order.
pub fn emit_graph(g: &Graph) -> String {
    emit_graph_with_comments(g, &[])
}

/// As [`emit_graph`], with leading comment lines.
pub fn emit_graph_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "c {line}");
        }
    }
    let _ = writeln!(out, "p {} {}", g.n(), g.edge_count());
    if let Some(labels) = g.labels() {
        for (v, label) in labels.iter().enumerate() {
            let _ = writeln!(out, "c v {} {}", v + 1, label);
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_graph("p 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn self_loop_reports_line() {
        let err = parse_graph("c test\np 3 1\ne 1 1\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn errors_carry_lines() {
        assert_eq!(parse_graph("p 2 1\ne 1 3\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p 2 x\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("e 1 2\n").unwrap_err().line, 1);
        assert_eq!(parse_graph("p 2 1\nq\n").unwrap_err().line, 2);
        assert_eq!(parse_graph("p 3 2\ne 1 2\n").unwrap_err().line, 2);
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn duplicates_collapse() {
        let g = parse_graph("p 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(emit_graph(&g), "p 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn round_trip_canonicalizes() {
        let corpus = [
            "p 1 0\n",
            "c hand written\np edge 4 3\ne 4 1\n\ne 2 3\ne 1 2\n",
            "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n",
        ];
        for text in corpus {
            let g = parse_graph(text).unwrap();
            let canon = emit_graph(&g);
            assert_eq!(emit_graph(&parse_graph(&canon).unwrap()), canon);
            assert_eq!(parse_graph(&canon).unwrap(), g);
        }
    }

    #[test]
    fn labels_survive() {
        let mut g = Graph::path(3);
        g.set_labels(vec!["a".into(), "b c".into(), "d".into()]);
        let text = emit_graph_with_comments(&g, &["k'=2".into()]);
        assert!(text.starts_with("c k'=2\np 3 2\n"));
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.labels().unwrap(), g.labels().unwrap());
    }
}

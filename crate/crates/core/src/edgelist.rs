//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints. `#` starts a comment; blank lines are skipped.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {0}: expected header \"n m\"")]
    BadHeader(usize),
    #[error("line {0}: expected \"u v\"")]
    BadEdge(usize),
    #[error("line {line}: vertex {v} out of range for n={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {0}: loop edge")]
    Loop(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    });

    let (hline, header) = lines.next().ok_or(EdgeListError::BadHeader(1))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader(hline))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader(hline))?;
    if it.next().is_some() {
        return Err(EdgeListError::BadHeader(hline));
    }

    let mut g = Graph::empty(n);
    let mut found = 0usize;
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdge(lno))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdge(lno))?;
        if it.next().is_some() {
            return Err(EdgeListError::BadEdge(lno));
        }
        for x in [u, v] {
            if x >= n {
                return Err(EdgeListError::VertexOutOfRange { line: lno, v: x, n });
            }
        }
        if u == v {
            return Err(EdgeListError::Loop(lno));
        }
        g.add_edge(u, v);
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2 # last two\n2 0\n\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::BadHeader(1)));
        assert_eq!(parse_edge_list("x y\n"), Err(EdgeListError::BadHeader(1)));
        assert_eq!(parse_edge_list("2 1\n0 0\n"), Err(EdgeListError::Loop(2)));
        assert_eq!(
            parse_edge_list("2 1\n0 2\n"),
            Err(EdgeListError::VertexOutOfRange { line: 2, v: 2, n: 2 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(EdgeListError::EdgeCountMismatch { expected: 2, found: 1 })
        );
    }
}

//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v        undirected edge
//! u > v      arc from u to v
//! ```
//!
//! A file holds either edges or arcs, not both.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeList {
    Undirected(Graph),
    Directed(Digraph),
}

impl EdgeList {
    pub fn vertex_count(&self) -> usize {
        match self {
            Self::Undirected(g) => g.vertex_count(),
            Self::Directed(d) => d.vertex_count(),
        }
    }

    /// The graph, or an error if the file listed arcs.
    pub fn into_graph(self) -> Result<Graph> {
        match self {
            Self::Undirected(g) => Ok(g),
            Self::Directed(d) if d.arc_count() == 0 => Graph::new(d.vertex_count(), &[]),
            Self::Directed(_) => Err(Error::Parse {
                line: 0,
                message: "expected undirected edges `u v`, found arcs".into(),
            }),
        }
    }

    /// The digraph, or an error if the file listed undirected edges.
    pub fn into_digraph(self) -> Result<Digraph> {
        match self {
            Self::Directed(d) => Ok(d),
            Self::Undirected(g) if g.edge_count() == 0 => Digraph::new(g.vertex_count(), &[]),
            Self::Undirected(_) => Err(Error::Parse {
                line: 0,
                message: "expected arcs `u > v`, found undirected edges".into(),
            }),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a nonnegative integer, found `{tok}`"),
        )
    })
}

pub fn parse(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head[..] else {
        return Err(parse_err(hline, "header must be `n m`"));
    };
    let (n, m) = (number(hline, n)?, number(hline, m)?);

    let mut pairs = Vec::with_capacity(m);
    let mut directed = None;
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let (pair, is_arc) = match toks[..] {
            [u, v] => ((number(line, u)?, number(line, v)?), false),
            [u, ">", v] => ((number(line, u)?, number(line, v)?), true),
            _ => {
                return Err(parse_err(
                    line,
                    format!("expected `u v` or `u > v`, found `{body}`"),
                ))
            }
        };
        match directed {
            None => directed = Some(is_arc),
            Some(d) if d != is_arc => {
                return Err(parse_err(line, "mixes undirected edges and arcs"));
            }
            _ => {}
        }
        pairs.push(pair);
    }
    if pairs.len() != m {
        return Err(parse_err(
            hline,
            format!("header promises {m} lines, found {}", pairs.len()),
        ));
    }
    let located = |e: Error| match e {
        Error::Parse { .. } => e,
        other => parse_err(0, other.to_string()),
    };
    if directed == Some(true) {
        Digraph::new(n, &pairs)
            .map(EdgeList::Directed)
            .map_err(located)
    } else {
        Graph::new(n, &pairs)
            .map(EdgeList::Undirected)
            .map_err(located)
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{} {}\n", d.vertex_count(), d.arc_count());
    for &(t, h) in d.arcs() {
        let _ = writeln!(out, "{t} > {h}");
    }
    out
}

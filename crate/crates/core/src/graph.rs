//! Undirected graphs, digon-free digraphs, and orientations.
//!
//! Vertices are `0..n`. A [`Graph`] keeps its edges as `(u, v)` with `u < v`,
//! sorted lexicographically; the position of an edge in that list is its
//! canonical index, which is how an [`Orientation`] addresses it.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_ENUMERABLE_EDGES, MAX_VERTICES};

/// A simple undirected graph with canonically ordered edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from pairs given in either order.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            check_endpoint(a, n)?;
            check_endpoint(b, n)?;
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen.count_ones() as usize == self.n
    }
}

/// A digon-free digraph. Arcs are `(tail, head)` and keep their input order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut seen = HashSet::with_capacity(arcs.len());
        for &(t, h) in arcs {
            check_endpoint(t, n)?;
            check_endpoint(h, n)?;
            if t == h {
                return Err(Error::LoopEdge(t));
            }
            if seen.contains(&(h, t)) {
                return Err(Error::Digon(t.min(h), t.max(h)));
            }
            if !seen.insert((t, h)) {
                return Err(Error::DuplicateArc(t, h));
            }
        }
        Ok(Self {
            n,
            arcs: arcs.to_vec(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(t, _) in &self.arcs {
            deg[t] += 1;
        }
        deg
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(_, h) in &self.arcs {
            deg[h] += 1;
        }
        deg
    }

    /// The undirected graph obtained by forgetting arc directions.
    pub fn underlying(&self) -> Graph {
        let pairs: Vec<_> = self.arcs.clone();
        // Digon-freeness guarantees the underlying pairs are distinct.
        Graph::new(self.n, &pairs).expect("digon-free digraph has a simple underlying graph")
    }
}

/// Every arc turned around.
pub fn reverse(d: &Digraph) -> Digraph {
    Digraph {
        n: d.n,
        arcs: d.arcs.iter().map(|&(t, h)| (h, t)).collect(),
    }
}

/// One direction per canonical edge. Bit `j` clear means edge `(u, v)`,
/// `u < v`, becomes `u -> v`; set means `v -> u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orientation {
    bits: Vec<bool>,
}

impl Orientation {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// All edges low-to-high.
    pub fn forward(edge_count: usize) -> Self {
        Self {
            bits: vec![false; edge_count],
        }
    }

    /// Decodes the integer counter used during enumeration; bit `j` of
    /// `index` is the direction of edge `j`.
    pub fn from_index(edge_count: usize, index: u64) -> Result<Self> {
        if edge_count > MAX_ENUMERABLE_EDGES {
            return Err(Error::TooManyEdges(edge_count));
        }
        Ok(Self {
            bits: (0..edge_count).map(|j| index >> j & 1 == 1).collect(),
        })
    }

    pub fn index(&self) -> Option<u64> {
        if self.bits.len() > MAX_ENUMERABLE_EDGES {
            return None;
        }
        Some(
            self.bits
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &b)| acc | (b as u64) << j),
        )
    }

    /// Parses a string of `0`/`1` characters, edge 0 first.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    message: format!("bad orientation character {other:?} at {i}"),
                }),
            })
            .collect::<Result<_>>()?;
        Ok(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_reversed(&self, edge: usize) -> bool {
        self.bits[edge]
    }

    /// Every bit flipped: the orientation of the reversed digraph.
    pub fn flipped(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Applies an orientation; arc `j` of the result comes from canonical edge `j`.
pub fn orient(g: &Graph, o: &Orientation) -> Result<Digraph> {
    if o.len() != g.edge_count() {
        return Err(Error::LengthMismatch {
            expected: g.edge_count(),
            found: o.len(),
        });
    }
    let arcs = g
        .edges
        .iter()
        .zip(&o.bits)
        .map(|(&(u, v), &rev)| if rev { (v, u) } else { (u, v) })
        .collect();
    Ok(Digraph { n: g.n, arcs })
}

fn check_endpoint(v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::EndpointOutOfRange { vertex: v, n });
    }
    Ok(())
}

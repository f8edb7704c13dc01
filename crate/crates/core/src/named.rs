//! Named graphs and digraphs used throughout the checks.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// Either kind of named instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    Graph(Graph),
    Digraph(Digraph),
}

pub const NAMES: &[&str] = &[
    "path",
    "complete",
    "petersen",
    "counterexample_tree",
    "alternating_path",
    "tight_bound",
];

/// Looks up a generator by name. `n` is required for the parameterized ones.
pub fn named(name: &str, n: Option<usize>) -> Result<Named> {
    let need = |n: Option<usize>| n.ok_or_else(|| Error::MissingCount(name.to_string()));
    match name {
        "path" => path_graph(need(n)?).map(Named::Graph),
        "complete" => complete_graph(need(n)?).map(Named::Graph),
        "petersen" => Ok(Named::Graph(petersen())),
        "counterexample_tree" => Ok(Named::Graph(counterexample_tree())),
        "alternating_path" => alternating_path(need(n)?).map(Named::Digraph),
        "tight_bound" => tight_bound(need(n)?).map(Named::Graph),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// `P_n`: vertices `0..n`, edges `i -- i+1`.
pub fn path_graph(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n.max(1)).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Outer 5-cycle `0..4`, spokes `i -- i+5`, inner pentagram on `5..9`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
    }
    edges.extend([(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]);
    Graph::new(10, &edges).expect("petersen edge list is simple")
}

/// The 10-vertex max-degree-3 tree with no cordial orientation: the path
/// `0-1-2-3-4-5` with a pendant leaf on each of `1..=4`.
pub fn counterexample_tree() -> Graph {
    Graph::new(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
    .expect("tree edge list is simple")
}

/// The directed path on `n` vertices whose `j`-th arc (1-indexed) points
/// forward iff `j` is odd, so interior vertices alternate source/sink.
pub fn alternating_path(n: usize) -> Result<Digraph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidCount {
            name: "alternating_path".into(),
            n,
            reason: "requires an even count of at least 2",
        });
    }
    let arcs: Vec<_> = (1..n)
        .map(|j| if j % 2 == 1 { (j - 1, j) } else { (j, j - 1) })
        .collect();
    Digraph::new(n, &arcs)
}

/// Complete bipartite graph between `0..ceil(n/2)` and the rest, plus
/// `ceil(ceil(n/2)*floor(n/2) / 2)` edges inside the parts, taken in
/// canonical order. Under the part labeling its edge count equals the
/// orientability bound.
pub fn tight_bound(n: usize) -> Result<Graph> {
    let big = n.div_ceil(2);
    let cross = big * (n / 2);
    let wanted = cross.div_ceil(2);
    let mut edges = Vec::new();
    let mut inside = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (u < big) == (v < big) {
                inside.push((u, v));
            } else {
                edges.push((u, v));
            }
        }
    }
    if inside.len() < wanted {
        return Err(Error::InvalidCount {
            name: "tight_bound".into(),
            n,
            reason: "parts too small to hold the required inner edges",
        });
    }
    edges.extend(inside.into_iter().take(wanted));
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic_with_fifteen_edges() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn counterexample_tree_shape() {
        let g = counterexample_tree();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 9);
        assert!(g.is_connected());
        let deg = g.degrees();
        assert_eq!(*deg.iter().max().unwrap(), 3);
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 4);
    }

    #[test]
    fn alternating_path_matches_figure() {
        let d = alternating_path(10).unwrap();
        assert_eq!(
            d.arcs(),
            &[
                (0, 1),
                (2, 1),
                (2, 3),
                (4, 3),
                (4, 5),
                (6, 5),
                (6, 7),
                (8, 7),
                (8, 9)
            ]
        );
    }

    #[test]
    fn alternating_path_degree_pattern() {
        for n in (2..=24).step_by(2) {
            let d = alternating_path(n).unwrap();
            let out = d.out_degrees();
            let inn = d.in_degrees();
            let sources = out.iter().filter(|&&o| o >= 1).count();
            assert_eq!(sources, (n - 1).div_ceil(2));
            for v in (1..n - 1).step_by(2) {
                assert_eq!(inn[v], 2, "n={n} v={v}");
            }
        }
    }

    #[test]
    fn alternating_path_rejects_odd_or_tiny() {
        assert!(alternating_path(7).is_err());
        assert!(alternating_path(0).is_err());
        assert!(matches!(
            named("alternating_path", Some(7)),
            Err(Error::InvalidCount { .. })
        ));
    }

    #[test]
    fn named_lookup() {
        assert!(matches!(named("petersen", None), Ok(Named::Graph(_))));
        assert!(matches!(named("path", None), Err(Error::MissingCount(_))));
        assert!(matches!(named("cube", None), Err(Error::UnknownName(_))));
        let Named::Graph(g) = named("complete", Some(5)).unwrap() else {
            panic!("expected graph")
        };
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn tight_bound_sizes() {
        assert_eq!(tight_bound(6).unwrap().edge_count(), 14);
        assert_eq!(tight_bound(7).unwrap().edge_count(), 18);
        assert_eq!(tight_bound(8).unwrap().edge_count(), 24);
        assert!(tight_bound(2).is_err());
        let g = tight_bound(6).unwrap();
        assert!(!g.edges().contains(&(4, 5)));
    }

    #[test]
    fn small_paths() {
        assert_eq!(path_graph(0).unwrap().edge_count(), 0);
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
        assert_eq!(path_graph(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
    }
}

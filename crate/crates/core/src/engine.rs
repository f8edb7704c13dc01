//! The (2,3)-cordiality calculus.
//!
//! A labeling `f: V -> {0,1}` induces `g(t -> h) = f(h) - f(t)` on every arc.
//! A digon-free digraph is cordial when some friendly `f` makes the counts of
//! `+1`, `-1` and `0` arcs pairwise differ by at most one. For an undirected
//! graph the count of `0` arcs is the monochromatic edge count `Λ`, which is
//! the same for every orientation; the graph is orientable exactly when some
//! friendly labeling puts `Λ` in `{floor(m/3), ceil(m/3)}`, because the
//! bichromatic edges can then be split evenly between `+1` and `-1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{orient, Digraph, Graph, Orientation};
use crate::labeling::{GammaTriple, LabelingReport, VertexLabeling};
use crate::search::friendly_labelings;

/// `f(head) - f(tail)`.
pub fn arc_label(f_tail: u8, f_head: u8) -> i8 {
    f_head as i8 - f_tail as i8
}

pub fn gamma_triple(d: &Digraph, l: &VertexLabeling) -> Result<GammaTriple> {
    if d.vertex_count() != l.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: d.vertex_count(),
            found: l.vertex_count(),
        });
    }
    Ok(tally(d.arcs(), l.ones()))
}

fn tally(arcs: &[(usize, usize)], ones: u64) -> GammaTriple {
    let mut t = GammaTriple::default();
    for &(tail, head) in arcs {
        match (ones >> tail & 1, ones >> head & 1) {
            (0, 1) => t.alpha += 1,
            (1, 0) => t.beta += 1,
            _ => t.gamma_zero += 1,
        }
    }
    t
}

/// Zero and one counts differ by at most one.
pub fn is_friendly(l: &VertexLabeling) -> bool {
    l.count_ones().abs_diff(l.count_zeros()) <= 1
}

/// Pairwise differences among the three counts are all at most one.
pub fn is_balanced_triple(t: &GammaTriple) -> bool {
    let hi = t.alpha.max(t.beta).max(t.gamma_zero);
    let lo = t.alpha.min(t.beta).min(t.gamma_zero);
    hi - lo <= 1
}

pub fn complement(l: &VertexLabeling) -> VertexLabeling {
    let n = l.vertex_count();
    VertexLabeling::from_mask_unchecked(n, !l.ones() & VertexLabeling::full_mask(n))
}

/// Result of a labeling scan together with how many labelings were tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CordialScan {
    pub witness: Option<LabelingReport>,
    pub labelings_scanned: u64,
}

/// Scans friendly labelings in ascending bitmask order and stops at the first
/// one whose triple is balanced. With `fix_first_label` only labelings with
/// vertex 0 labeled 0 are tried, which loses nothing: complementing swaps
/// `alpha` and `beta`.
pub fn scan_cordial(d: &Digraph, fix_first_label: bool) -> CordialScan {
    let mut scanned = 0;
    for l in friendly_labelings(d.vertex_count(), fix_first_label) {
        scanned += 1;
        let t = tally(d.arcs(), l.ones());
        if is_balanced_triple(&t) {
            return CordialScan {
                witness: Some(LabelingReport {
                    labeling: l,
                    lambda: None,
                    gamma: Some(t),
                    cordial_or_orientable: true,
                }),
                labelings_scanned: scanned,
            };
        }
    }
    CordialScan {
        witness: None,
        labelings_scanned: scanned,
    }
}

/// First cordial labeling (vertex 0 labeled 0, ascending bitmask), if any.
pub fn is_cordial(d: &Digraph) -> Option<LabelingReport> {
    scan_cordial(d, true).witness
}

/// Number of edges whose endpoints share a label.
pub fn lambda_count(g: &Graph, l: &VertexLabeling) -> Result<usize> {
    if g.vertex_count() != l.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            found: l.vertex_count(),
        });
    }
    Ok(monochromatic(g.edges(), l.ones()))
}

fn monochromatic(edges: &[(usize, usize)], ones: u64) -> usize {
    edges
        .iter()
        .filter(|&&(u, v)| (ones >> u ^ ones >> v) & 1 == 0)
        .count()
}

/// `(floor(m/3), ceil(m/3))`: the values of `Λ` a balanced triple allows.
pub fn lambda_window(edge_count: usize) -> (usize, usize) {
    (edge_count / 3, edge_count.div_ceil(3))
}

fn in_window(lambda: usize, edge_count: usize) -> bool {
    let (lo, hi) = lambda_window(edge_count);
    lambda == lo || lambda == hi
}

/// A labeling and orientation that together certify orientability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientabilityWitness {
    pub labeling: VertexLabeling,
    pub orientation: Orientation,
    pub gamma: GammaTriple,
}

impl OrientabilityWitness {
    /// Recomputes the triple from scratch and checks every witness condition.
    pub fn validate(&self, g: &Graph) -> bool {
        let Ok(d) = orient(g, &self.orientation) else {
            return false;
        };
        match gamma_triple(&d, &self.labeling) {
            Ok(t) => t == self.gamma && is_balanced_triple(&t) && is_friendly(&self.labeling),
            Err(_) => false,
        }
    }
}

/// Finds the first friendly labeling (vertex 0 labeled 0) with `Λ` in the
/// balanced window and builds an orientation for it.
pub fn is_orientable(g: &Graph) -> Option<OrientabilityWitness> {
    let m = g.edge_count();
    let l = friendly_labelings(g.vertex_count(), true)
        .find(|l| in_window(monochromatic(g.edges(), l.ones()), m))?;
    let orientation = construct_witness_orientation(g, &l)
        .expect("labeling was selected to satisfy the precondition");
    let d = orient(g, &orientation).expect("orientation length matches");
    let gamma = tally(d.arcs(), l.ones());
    debug_assert!(is_balanced_triple(&gamma));
    Some(OrientabilityWitness {
        labeling: l,
        orientation,
        gamma,
    })
}

/// Orients the first `ceil(m'/2)` bichromatic edges (canonical order) from
/// the 0-labeled end to the 1-labeled end, the remaining bichromatic edges
/// the other way, and monochromatic edges low-to-high. The resulting triple
/// is `(ceil(m'/2), floor(m'/2), Λ)`.
pub fn construct_witness_orientation(g: &Graph, l: &VertexLabeling) -> Result<Orientation> {
    let lambda = lambda_count(g, l)?;
    if !is_friendly(l) {
        return Err(Error::Precondition(format!("labeling {l} is not friendly")));
    }
    let m = g.edge_count();
    if !in_window(lambda, m) {
        let (lo, hi) = lambda_window(m);
        return Err(Error::Precondition(format!(
            "monochromatic count {lambda} outside {{{lo}, {hi}}}"
        )));
    }
    let positive = (m - lambda).div_ceil(2);
    let mut seen = 0;
    let bits = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (fu, fv) = (l.label(u), l.label(v));
            if fu == fv {
                return false;
            }
            seen += 1;
            let want_positive = seen <= positive;
            // Edge u -> v (bit clear) is +1 exactly when f(u) = 0.
            (fu == 0) != want_positive
        })
        .collect();
    Ok(Orientation::new(bits))
}

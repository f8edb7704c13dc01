//! Edge-count bound for orientable graphs.
//!
//! Under a friendly labeling of `K_n` the edges inside the two label classes,
//! `Z = C(ceil(n/2), 2) + C(floor(n/2), 2)` of them, are monochromatic no
//! matter what. Only `ceil(n/2) * floor(n/2)` edges can be bichromatic, and a
//! balanced triple needs at least half as many zero arcs as bichromatic ones
//! beyond that, giving `|E|_max = C(n,2) - Z + ceil((C(n,2) - Z) / 2)`.

use serde::{Deserialize, Serialize};

use crate::engine::{is_orientable, OrientabilityWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::tight_bound;

/// Smallest `n` covered by the bound's hypothesis.
pub const HYPOTHESIS_MIN_N: usize = 6;

pub fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn require_two(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            n,
            min: 2,
            max: usize::MAX,
        });
    }
    Ok(())
}

/// Edges of `K_n` forced monochromatic by every friendly labeling.
pub fn z_value(n: usize) -> Result<usize> {
    require_two(n)?;
    Ok(binomial2(n.div_ceil(2)) + binomial2(n / 2))
}

pub fn max_edges(n: usize) -> Result<usize> {
    let z = z_value(n)?;
    let cross = binomial2(n) - z;
    Ok(cross + cross.div_ceil(2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub z: usize,
    pub bichromatic_capacity: usize,
    pub e_max: usize,
    /// `false` for `n < 6`, where the formula is evaluated but not claimed.
    pub within_hypothesis: bool,
}

pub fn bounds_record(n: usize) -> Result<BoundsRecord> {
    let z = z_value(n)?;
    let bichromatic_capacity = binomial2(n) - z;
    Ok(BoundsRecord {
        n,
        z,
        bichromatic_capacity,
        e_max: max_edges(n)?,
        within_hypothesis: n >= HYPOTHESIS_MIN_N,
    })
}

/// `Z > C(n,2) / 3`, compared exactly as `3Z > C(n,2)`. This is the raw
/// comparison; it is not by itself a non-orientability certificate for odd
/// cases such as `n = 5`, where `Λ = Z` can still sit in the window.
pub fn complete_graph_zero_excess(n: usize) -> bool {
    match z_value(n) {
        Ok(z) => 3 * z > binomial2(n),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerification {
    pub n: usize,
    pub e_max: usize,
    /// Graphs examined in the exhaustive part.
    pub graphs_checked: u64,
    /// Graphs above the bound that nevertheless turned out orientable.
    pub violations: Vec<Graph>,
    pub tight_graph: Graph,
    pub tight_witness: Option<OrientabilityWitness>,
}

pub const VERIFY_MIN: usize = 6;
pub const VERIFY_MAX: usize = 7;

/// Checks every labeled graph on `n` vertices with more than `max_edges(n)`
/// edges for orientability, then looks for a witness on the tight
/// construction.
pub fn verify_bound(n: usize) -> Result<BoundVerification> {
    if !(VERIFY_MIN..=VERIFY_MAX).contains(&n) {
        return Err(Error::OutOfRange {
            n,
            min: VERIFY_MIN,
            max: VERIFY_MAX,
        });
    }
    let e_max = max_edges(n)?;
    let all: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let removable = all.len() - e_max - 1;

    let mut graphs_checked = 0;
    let mut violations = Vec::new();
    let mut removed = Vec::new();
    for k in 0..=removable {
        for_each_subset(all.len(), k, &mut removed, &mut |gone| {
            let edges: Vec<_> = all
                .iter()
                .enumerate()
                .filter(|(j, _)| !gone.contains(j))
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).expect("subgraph of K_n is simple");
            graphs_checked += 1;
            if is_orientable(&g).is_some() {
                violations.push(g);
            }
        });
    }

    let tight_graph = tight_bound(n)?;
    let tight_witness = is_orientable(&tight_graph);
    Ok(BoundVerification {
        n,
        e_max,
        graphs_checked,
        violations,
        tight_graph,
        tight_witness,
    })
}

/// Calls `f` with every `k`-subset of `0..len` in lexicographic order.
fn for_each_subset(len: usize, k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, len: usize, k: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if buf.len() == k {
            f(buf);
            return;
        }
        for i in start..len {
            buf.push(i);
            go(i + 1, len, k, buf, f);
            buf.pop();
        }
    }
    buf.clear();
    go(0, len, k, buf, f);
}

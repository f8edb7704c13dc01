//! Polynomial cordiality decision for oriented paths.
//!
//! Walks the path left to right keeping every reachable
//! `(ones used, +1 arcs, -1 arcs, label of current vertex)`. At the end a
//! state is accepting when the labeling is friendly and the triple, with the
//! zero count implied by the arc total, is balanced. A witness is rebuilt by
//! walking back through the reachability table.

use crate::engine::is_balanced_triple;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::labeling::{GammaTriple, VertexLabeling};

struct Table {
    ones_dim: usize,
    arc_dim: usize,
    reach: Vec<bool>,
}

impl Table {
    fn new(n: usize) -> Self {
        let ones_dim = n.div_ceil(2) + 1;
        let arc_dim = n.max(1);
        Self {
            ones_dim,
            arc_dim,
            reach: vec![false; n * ones_dim * arc_dim * arc_dim * 2],
        }
    }

    fn slot(&self, pos: usize, ones: usize, alpha: usize, beta: usize, label: u8) -> usize {
        ((((pos * self.ones_dim + ones) * self.arc_dim + alpha) * self.arc_dim + beta) << 1)
            | label as usize
    }

    fn get(&self, pos: usize, ones: usize, alpha: usize, beta: usize, label: u8) -> bool {
        ones < self.ones_dim
            && alpha < self.arc_dim
            && beta < self.arc_dim
            && self.reach[self.slot(pos, ones, alpha, beta, label)]
    }

    fn set(&mut self, pos: usize, ones: usize, alpha: usize, beta: usize, label: u8) {
        let s = self.slot(pos, ones, alpha, beta, label);
        self.reach[s] = true;
    }
}

/// `true` when arc `j` runs from vertex `j` to `j + 1`.
fn path_directions(d: &Digraph) -> Result<Vec<bool>> {
    let n = d.vertex_count();
    if d.arc_count() + 1 != n.max(1) {
        return Err(Error::NotAPath);
    }
    d.arcs()
        .iter()
        .enumerate()
        .map(|(j, &arc)| match arc {
            (t, h) if t == j && h == j + 1 => Ok(true),
            (t, h) if t == j + 1 && h == j => Ok(false),
            _ => Err(Error::NotAPath),
        })
        .collect()
}

/// Contribution of one arc to `(alpha, beta)` given the labels of its left
/// and right endpoints.
fn step(forward: bool, left: u8, right: u8) -> (usize, usize) {
    let (tail, head) = if forward {
        (left, right)
    } else {
        (right, left)
    };
    match (tail, head) {
        (0, 1) => (1, 0),
        (1, 0) => (0, 1),
        _ => (0, 0),
    }
}

/// Returns a friendly labeling with a balanced triple, or `None`.
///
/// The arcs must join `j` and `j + 1` in order `j = 0, 1, ...`.
pub fn path_cordial_dp(d: &Digraph) -> Result<Option<VertexLabeling>> {
    let dirs = path_directions(d)?;
    let n = d.vertex_count();
    if n == 0 {
        return Ok(Some(VertexLabeling::from_mask_unchecked(0, 0)));
    }
    let mut table = Table::new(n);
    let max_ones = n.div_ceil(2);
    table.set(0, 0, 0, 0, 0);
    table.set(0, 1, 0, 0, 1);
    for pos in 1..n {
        let forward = dirs[pos - 1];
        for ones in 0..=max_ones.min(pos) {
            for alpha in 0..pos {
                for beta in 0..pos - alpha {
                    for prev in 0..2u8 {
                        if !table.get(pos - 1, ones, alpha, beta, prev) {
                            continue;
                        }
                        for cur in 0..2u8 {
                            let new_ones = ones + cur as usize;
                            if new_ones > max_ones {
                                continue;
                            }
                            let (da, db) = step(forward, prev, cur);
                            table.set(pos, new_ones, alpha + da, beta + db, cur);
                        }
                    }
                }
            }
        }
    }

    let arcs = n - 1;
    let last = n - 1;
    let accept = (n / 2..=max_ones)
        .flat_map(|ones| (0..=arcs).map(move |a| (ones, a)))
        .flat_map(|(ones, a)| (0..=arcs - a).map(move |b| (ones, a, b)))
        .flat_map(|(ones, a, b)| (0..2u8).map(move |l| (ones, a, b, l)))
        .find(|&(ones, a, b, l)| {
            table.get(last, ones, a, b, l)
                && is_balanced_triple(&GammaTriple::new(a, b, arcs - a - b))
        });
    let Some((mut ones, mut alpha, mut beta, mut label)) = accept else {
        return Ok(None);
    };

    let mut mask = 0u64;
    for pos in (0..n).rev() {
        if label == 1 {
            mask |= 1 << pos;
        }
        if pos == 0 {
            break;
        }
        let forward = dirs[pos - 1];
        let prev_ones = ones - label as usize;
        let prev = (0..2u8)
            .find(|&p| {
                let (da, db) = step(forward, p, label);
                da <= alpha && db <= beta && table.get(pos - 1, prev_ones, alpha - da, beta - db, p)
            })
            .expect("reachable state has a reachable predecessor");
        let (da, db) = step(forward, prev, label);
        alpha -= da;
        beta -= db;
        ones = prev_ones;
        label = prev;
    }
    Ok(Some(VertexLabeling::from_mask_unchecked(n, mask)))
}

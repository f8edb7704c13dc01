//! Streams of friendly labelings and orientations in ascending integer order.

use crate::error::Error;
use crate::error::{Result, MAX_ENUMERABLE_EDGES};
use crate::graph::{Graph, Orientation};
use crate::labeling::VertexLabeling;

/// Next larger integer with the same popcount (Gosper's hack).
fn next_same_weight(x: u64) -> Option<u64> {
    let c = x & x.wrapping_neg();
    let r = x.checked_add(c)?;
    Some((((r ^ x) >> 2) / c) | r)
}

/// Ascending masks of a fixed weight within `width` bits.
#[derive(Clone, Debug)]
struct WeightedMasks {
    next: Option<u64>,
    limit: u64,
}

impl WeightedMasks {
    fn new(width: usize, weight: usize) -> Self {
        let limit = VertexLabeling::full_mask(width);
        let first = if weight > width {
            None
        } else if weight == 64 {
            Some(u64::MAX)
        } else {
            Some((1u64 << weight) - 1)
        };
        Self { next: first, limit }
    }
}

impl Iterator for WeightedMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            next_same_weight(cur).filter(|&x| x & !self.limit == 0)
        };
        Some(cur)
    }
}

/// Friendly labelings of `0..n` in ascending bitmask order.
#[derive(Clone, Debug)]
pub struct FriendlyLabelings {
    n: usize,
    shift: u32,
    low: std::iter::Peekable<WeightedMasks>,
    high: Option<std::iter::Peekable<WeightedMasks>>,
}

impl Iterator for FriendlyLabelings {
    type Item = VertexLabeling;

    fn next(&mut self) -> Option<VertexLabeling> {
        let take_high = match (&mut self.high, self.low.peek()) {
            (Some(h), Some(&l)) => h.peek().is_some_and(|&x| x < l),
            (Some(h), None) => h.peek().is_some(),
            (None, _) => false,
        };
        let mask = if take_high {
            self.high.as_mut()?.next()?
        } else {
            self.low.next()?
        };
        Some(VertexLabeling::from_mask_unchecked(
            self.n,
            mask << self.shift,
        ))
    }
}

/// All friendly labelings on `n` vertices. With `fix_first_label`, vertex 0
/// is always labeled 0, halving the stream.
pub fn friendly_labelings(n: usize, fix_first_label: bool) -> FriendlyLabelings {
    assert!(n <= 64, "labelings are limited to 64 vertices");
    let (width, shift) = if fix_first_label && n > 0 {
        (n - 1, 1)
    } else {
        (n, 0)
    };
    let lo = n / 2;
    let hi = n.div_ceil(2);
    FriendlyLabelings {
        n,
        shift,
        low: WeightedMasks::new(width, lo).peekable(),
        high: (hi != lo).then(|| WeightedMasks::new(width, hi).peekable()),
    }
}

/// Orientation counters `0..2^m` ascending, optionally with edge 0 pinned
/// forward (the reversal symmetry makes the other half redundant).
#[derive(Clone, Debug)]
pub struct Orientations {
    edge_count: usize,
    step: u64,
    next: u64,
    end: u64,
}

impl Orientations {
    /// Number of orientations remaining.
    pub fn total(&self) -> u64 {
        self.end - self.next
    }
}

impl Iterator for Orientations {
    type Item = Orientation;

    fn next(&mut self) -> Option<Orientation> {
        if self.next >= self.end {
            return None;
        }
        let idx = self.next * self.step;
        self.next += 1;
        Some(Orientation::from_index(self.edge_count, idx).expect("edge count checked"))
    }
}

pub fn orientations(g: &Graph, fix_first_arc: bool) -> Result<Orientations> {
    let (m, step, end) = orientation_range(g.edge_count(), fix_first_arc)?;
    Ok(Orientations {
        edge_count: m,
        step,
        next: 0,
        end,
    })
}

/// `(m, step, count)`: orientation `k` of the stream has index `k * step`.
pub(crate) fn orientation_range(m: usize, fix_first_arc: bool) -> Result<(usize, u64, u64)> {
    if m > MAX_ENUMERABLE_EDGES {
        return Err(Error::TooManyEdges(m));
    }
    if fix_first_arc && m > 0 {
        Ok((m, 2, 1u64 << (m - 1)))
    } else {
        Ok((m, 1, 1u64 << m))
    }
}

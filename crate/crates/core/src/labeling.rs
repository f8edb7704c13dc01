//! Vertex labelings, arc-label tallies, and labeling reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, MAX_VERTICES};

/// A map `V -> {0, 1}` stored as the bitmask of vertices labeled 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexLabeling {
    n: usize,
    ones: u64,
}

impl VertexLabeling {
    pub fn new(n: usize, ones: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if n < 64 && ones >> n != 0 {
            return Err(Error::EndpointOutOfRange {
                vertex: 63 - ones.leading_zeros() as usize,
                n,
            });
        }
        Ok(Self { n, ones })
    }

    /// Labels listed vertex by vertex, e.g. `&[1, 0, 0, 1]`.
    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        let mut ones = 0u64;
        for (v, &l) in labels.iter().enumerate() {
            match l {
                0 => {}
                1 => ones |= 1 << v,
                other => {
                    return Err(Error::Precondition(format!(
                        "vertex label {other} is not 0 or 1"
                    )))
                }
            }
        }
        Self::new(labels.len(), ones)
    }

    /// Parses `"1001"`-style strings, vertex 0 first.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let labels = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::Parse {
                    line: 1,
                    message: format!("bad label character {other:?}"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_labels(&labels)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Bitmask of the vertices labeled 1.
    pub fn ones(&self) -> u64 {
        self.ones
    }

    pub fn label(&self, v: usize) -> u8 {
        (self.ones >> v & 1) as u8
    }

    pub fn count_ones(&self) -> usize {
        self.ones.count_ones() as usize
    }

    pub fn count_zeros(&self) -> usize {
        self.n - self.count_ones()
    }

    pub fn labels(&self) -> Vec<u8> {
        (0..self.n).map(|v| self.label(v)).collect()
    }

    pub(crate) fn full_mask(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub(crate) fn from_mask_unchecked(n: usize, ones: u64) -> Self {
        debug_assert!(ones & !Self::full_mask(n) == 0);
        Self { n, ones }
    }
}

impl fmt::Display for VertexLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.n {
            f.write_str(if self.label(v) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Counts of arcs labeled `+1` (`alpha`), `-1` (`beta`) and `0` (`gamma_zero`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaTriple {
    pub alpha: usize,
    pub beta: usize,
    pub gamma_zero: usize,
}

impl GammaTriple {
    pub fn new(alpha: usize, beta: usize, gamma_zero: usize) -> Self {
        Self {
            alpha,
            beta,
            gamma_zero,
        }
    }

    pub fn total(&self) -> usize {
        self.alpha + self.beta + self.gamma_zero
    }

    /// `(beta, alpha, gamma)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.beta, self.alpha, self.gamma_zero)
    }
}

impl fmt::Display for GammaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma_zero)
    }
}

/// Outcome of checking one labeling, in either the directed or undirected
/// setting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingReport {
    pub labeling: VertexLabeling,
    /// Monochromatic edge count, for undirected checks.
    pub lambda: Option<usize>,
    /// Arc-label tally, for directed checks.
    pub gamma: Option<GammaTriple>,
    pub cordial_or_orientable: bool,
}

//! Box domains and the index lattice of the operator.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Distance below which `n * a` is treated as the nearest integer before
/// taking ceilings and floors, so that e.g. `3 * 0.1` rounds like `0.3 * 3`.
pub const INTEGER_SNAP: f64 = 1e-9;

/// The box `[a_1, b_1] x ... x [a_s, b_s]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxDomain {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxDomain {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        if lower.is_empty() {
            return Err(Error::InvalidParameter(
                "domain must have at least one axis".into(),
            ));
        }
        for (axis, (&a, &b)) in lower.iter().zip(&upper).enumerate() {
            if !(a.is_finite() && b.is_finite() && a < b) {
                return Err(Error::InvalidDomain {
                    axis,
                    lower: a,
                    upper: b,
                });
            }
        }
        Ok(BoxDomain { lower, upper })
    }

    /// `[0, 1]^s`.
    pub fn unit(dimension: usize) -> Self {
        BoxDomain {
            lower: alloc::vec![0.0; dimension],
            upper: alloc::vec![1.0; dimension],
        }
    }

    pub fn interval(a: f64, b: f64) -> Result<Self> {
        Self::new(alloc::vec![a], alloc::vec![b])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn volume(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(a, b)| b - a)
            .product()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&xi, (&a, &b))| a <= xi && xi <= b)
    }

    pub(crate) fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        for (axis, &xi) in x.iter().enumerate() {
            let (a, b) = (self.lower[axis], self.upper[axis]);
            if !(a <= xi && xi <= b) {
                return Err(Error::OutsideDomain {
                    axis,
                    coordinate: xi,
                    lower: a,
                    upper: b,
                });
            }
        }
        Ok(())
    }
}

fn snap(v: f64) -> f64 {
    let r = libm::round(v);
    if libm::fabs(v - r) <= INTEGER_SNAP {
        r
    } else {
        v
    }
}

/// The lattice `J_n` of multi-indices `k` with
/// `ceil(n a_i) <= k_i <= floor(n b_i) - 1` on every axis.
///
/// Per-axis bounds are inclusive. Flattened storage everywhere in the crate
/// uses axis 0 as the fastest-varying axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    n: u32,
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl IndexSet {
    pub fn new(n: u32, domain: &BoxDomain) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let nf = f64::from(n);
        let lower = domain
            .lower()
            .iter()
            .map(|&a| libm::ceil(snap(nf * a)) as i64)
            .collect();
        let upper = domain
            .upper()
            .iter()
            .map(|&b| libm::floor(snap(nf * b)) as i64 - 1)
            .collect();
        Self::from_bounds(n, lower, upper)
    }

    /// Index set with explicit inclusive bounds per axis.
    pub fn from_bounds(n: u32, lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                got: upper.len(),
            });
        }
        for (axis, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if lo > hi {
                return Err(Error::EmptyIndexSet { axis, n, lo, hi });
            }
        }
        Ok(IndexSet { n, lower, upper })
    }

    /// Same lattice with every upper bound raised by one.
    pub fn extend_upper(&self) -> Self {
        IndexSet {
            n: self.n,
            lower: self.lower.clone(),
            upper: self.upper.iter().map(|hi| hi + 1).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    /// Number of indices per axis.
    pub fn shape(&self) -> Vec<usize> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| (hi - lo + 1) as usize)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.shape().iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Flat position of `k`, or `None` when `k` is outside the lattice.
    pub fn position(&self, k: &[i64]) -> Option<usize> {
        if k.len() != self.dimension() {
            return None;
        }
        let mut pos = 0usize;
        let mut stride = 1usize;
        for ((&ki, &lo), &hi) in k.iter().zip(&self.lower).zip(&self.upper) {
            if ki < lo || ki > hi {
                return None;
            }
            pos += (ki - lo) as usize * stride;
            stride *= (hi - lo + 1) as usize;
        }
        Some(pos)
    }

    /// Multi-indices in flat storage order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let total = self.len();
        let shape = self.shape();
        (0..total).map(move |mut flat| {
            let mut k = Vec::with_capacity(shape.len());
            for (axis, &len) in shape.iter().enumerate() {
                k.push(self.lower[axis] + (flat % len) as i64);
                flat /= len;
            }
            k
        })
    }
}

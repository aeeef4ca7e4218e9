//! Kantorovich coefficient grids.

use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{BoxDomain, IndexSet};
use crate::error::{Error, Result};

/// Default number of midpoint nodes per axis for cell means.
pub const DEFAULT_QUADRATURE_POINTS: usize = 8;

/// Coefficients of the operator, one per multi-index of an [`IndexSet`].
///
/// Stored values are non-negative. When the source data had a negative
/// minimum `-c`, every value was raised by `c` and `shift` holds `c`; the
/// evaluation subtracts it again.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientGrid {
    index_set: IndexSet,
    domain: BoxDomain,
    values: Vec<f64>,
    shift: f64,
}

fn cell_label(k: &[i64]) -> String {
    let parts: Vec<String> = k.iter().map(|ki| alloc::format!("{ki}")).collect();
    alloc::format!("k=({})", parts.join(", "))
}

impl CoefficientGrid {
    /// Cell means `n^s * integral of f over R_k`, approximated by the
    /// composite midpoint rule with `m` nodes per axis.
    ///
    /// If `f` takes negative values, the shift is `-inf f`, with the infimum
    /// taken over every quadrature node and every cell vertex.
    pub fn from_function<F>(f: F, n: u32, domain: BoxDomain, m: usize) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64,
    {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "quadrature needs at least one node per axis".into(),
            ));
        }
        let index_set = IndexSet::new(n, &domain)?;
        let s = index_set.dimension();
        let nf = f64::from(n);
        let nodes = m.pow(s as u32);
        let inv_nodes = 1.0 / nodes as f64;
        let mut u = alloc::vec![0.0; s];
        let mut lowest = f64::INFINITY;
        let mut values = Vec::with_capacity(index_set.len());
        for k in index_set.iter() {
            // Mean written as f_0 + sum (f_j - f_0) / N so a constant is reproduced bit-exactly.
            let mut first = 0.0;
            let mut acc = 0.0;
            for node in 0..nodes {
                let mut rest = node;
                for axis in 0..s {
                    let j = rest % m;
                    rest /= m;
                    u[axis] = (k[axis] as f64 + (j as f64 + 0.5) / m as f64) / nf;
                }
                let v = f(&u);
                if !v.is_finite() {
                    return Err(Error::NonFiniteValue {
                        cell: cell_label(&k),
                        value: v,
                    });
                }
                lowest = lowest.min(v);
                if node == 0 {
                    first = v;
                } else {
                    acc += (v - first) * inv_nodes;
                }
            }
            values.push(first + acc);
        }
        let vertices = index_set.extend_upper();
        for k in vertices.iter() {
            for (axis, &ki) in k.iter().enumerate() {
                u[axis] = ki as f64 / nf;
            }
            let v = f(&u);
            if !v.is_finite() {
                return Err(Error::NonFiniteValue {
                    cell: alloc::format!("vertex {}", cell_label(&k)),
                    value: v,
                });
            }
            lowest = lowest.min(v);
        }
        Ok(Self::shifted(index_set, domain, values, lowest))
    }

    /// Injects data directly as the coefficients of `J_n` over `domain`.
    pub fn from_values(values: Vec<f64>, n: u32, domain: BoxDomain) -> Result<Self> {
        let index_set = IndexSet::new(n, &domain)?;
        Self::from_index_set(values, index_set, domain)
    }

    /// Injects data on an arbitrary index set, e.g. an extended lattice.
    pub fn from_index_set(
        values: Vec<f64>,
        index_set: IndexSet,
        domain: BoxDomain,
    ) -> Result<Self> {
        if index_set.dimension() != domain.dimension() {
            return Err(Error::DimensionMismatch {
                expected: domain.dimension(),
                got: index_set.dimension(),
            });
        }
        if values.len() != index_set.len() {
            return Err(Error::ShapeMismatch {
                expected: index_set.len(),
                got: values.len(),
            });
        }
        if let Some((k, &v)) = index_set.iter().zip(&values).find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                cell: cell_label(&k),
                value: v,
            });
        }
        Ok(Self::with_shift(index_set, domain, values))
    }

    /// Raises all values by `c = -min` when the minimum is negative and
    /// records `c`; otherwise stores the values unchanged with `c = 0`.
    /// Values must be finite.
    pub fn with_shift(index_set: IndexSet, domain: BoxDomain, values: Vec<f64>) -> Self {
        Self::shifted(index_set, domain, values, f64::INFINITY)
    }

    fn shifted(
        index_set: IndexSet,
        domain: BoxDomain,
        mut values: Vec<f64>,
        lower_bound: f64,
    ) -> Self {
        let min = values.iter().copied().fold(lower_bound, f64::min);
        let shift = if min < 0.0 { -min } else { 0.0 };
        if shift > 0.0 {
            for v in &mut values {
                // Clamp guards against -0.0 and rounding at the minimum.
                *v = (*v + shift).max(0.0);
            }
        }
        CoefficientGrid {
            index_set,
            domain,
            values,
            shift,
        }
    }

    pub fn index_set(&self) -> &IndexSet {
        &self.index_set
    }

    pub fn domain(&self) -> &BoxDomain {
        &self.domain
    }

    pub fn n(&self) -> u32 {
        self.index_set.n()
    }

    pub fn dimension(&self) -> usize {
        self.index_set.dimension()
    }

    /// Stored (shifted, non-negative) values in flat order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    /// Values with the shift removed, i.e. the original data.
    pub fn unshifted_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v - self.shift).collect()
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    pub fn get(&self, k: &[i64]) -> Option<f64> {
        self.index_set.position(k).map(|i| self.values[i])
    }
}

//! Scalar fields sampled on uniform grids over a box.

use alloc::vec::Vec;

use crate::domain::BoxDomain;
use crate::error::{Error, Result};

/// Values on a uniform grid over a [`BoxDomain`], endpoints included.
///
/// Axis 0 varies fastest in `values`; for `s = 2` with axis 0 horizontal this
/// is the usual row-major image layout.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    domain: BoxDomain,
    resolution: Vec<usize>,
    values: Vec<f64>,
}

pub(crate) fn check_resolution(domain: &BoxDomain, resolution: &[usize]) -> Result<()> {
    if resolution.len() != domain.dimension() {
        return Err(Error::DimensionMismatch {
            expected: domain.dimension(),
            got: resolution.len(),
        });
    }
    if let Some(r) = resolution.iter().find(|&&r| r < 2) {
        return Err(Error::InvalidParameter(alloc::format!(
            "resolution must be at least 2 per axis, got {r}"
        )));
    }
    Ok(())
}

/// Coordinate of sample `i` out of `res` on `[a, b]`; the last sample is `b` exactly.
pub fn grid_coordinate(a: f64, b: f64, res: usize, i: usize) -> f64 {
    if i + 1 == res {
        b
    } else {
        a + i as f64 * (b - a) / (res - 1) as f64
    }
}

impl ScalarField {
    pub fn new(domain: BoxDomain, resolution: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        check_resolution(&domain, &resolution)?;
        let expected: usize = resolution.iter().product();
        if values.len() != expected {
            return Err(Error::ShapeMismatch {
                expected,
                got: values.len(),
            });
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFiniteValue {
                cell: alloc::format!("grid point {i}"),
                value: v,
            });
        }
        Ok(ScalarField {
            domain,
            resolution,
            values,
        })
    }

    /// Samples `f` at every grid point.
    pub fn sample<F>(domain: BoxDomain, resolution: Vec<usize>, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64,
    {
        check_resolution(&domain, &resolution)?;
        let total: usize = resolution.iter().product();
        let mut x = alloc::vec![0.0; resolution.len()];
        let values = (0..total)
            .map(|flat| {
                point_into(&domain, &resolution, flat, &mut x);
                f(&x)
            })
            .collect();
        Self::new(domain, resolution, values)
    }

    pub fn domain(&self) -> &BoxDomain {
        &self.domain
    }

    pub fn resolution(&self) -> &[usize] {
        &self.resolution
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Coordinates of the grid point at flat position `flat`.
    pub fn point(&self, flat: usize) -> Vec<f64> {
        let mut x = alloc::vec![0.0; self.resolution.len()];
        point_into(&self.domain, &self.resolution, flat, &mut x);
        x
    }

    /// Riemann weight of one grid point: `prod (b_i - a_i) / resolution_i`.
    pub fn cell_volume(&self) -> f64 {
        self.domain
            .lower()
            .iter()
            .zip(self.domain.upper())
            .zip(&self.resolution)
            .map(|((a, b), &r)| (b - a) / r as f64)
            .product()
    }

    pub(crate) fn check_same_grid(&self, other: &ScalarField) -> Result<()> {
        if self.domain != other.domain || self.resolution != other.resolution {
            return Err(Error::ShapeMismatch {
                expected: self.values.len(),
                got: other.values.len(),
            });
        }
        Ok(())
    }

    /// Pointwise `self - other` on the same grid.
    pub fn difference(&self, other: &ScalarField) -> Result<ScalarField> {
        self.check_same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ScalarField {
            domain: self.domain.clone(),
            resolution: self.resolution.clone(),
            values,
        })
    }
}

/// Writes the coordinates of grid point `flat` into `x`.
pub fn point_into(domain: &BoxDomain, resolution: &[usize], mut flat: usize, x: &mut [f64]) {
    for (axis, &res) in resolution.iter().enumerate() {
        let i = flat % res;
        flat /= res;
        x[axis] = grid_coordinate(domain.lower()[axis], domain.upper()[axis], res, i);
    }
}

//! Evaluation of the max-product Kantorovich operator
//!
//! ```text
//! K_n(f, x) = max_k [ c_k * psi(n x - k) ] / max_k psi(n x - k),   k in J_n
//! ```
//!
//! where `c_k` are the coefficients of a [`CoefficientGrid`]. A nonzero grid
//! shift is subtracted from the ratio.

use alloc::vec::Vec;

use crate::coefficients::{CoefficientGrid, DEFAULT_QUADRATURE_POINTS};
use crate::error::{Error, Result};
use crate::field::{check_resolution, point_into, ScalarField};
use crate::kernel::{ProductKernel, Sigmoidal};

/// Default tolerance of windowed evaluation.
pub const DEFAULT_WINDOW_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WindowMode {
    /// Every multi-index of the lattice takes part in both maxima.
    Exact,
    /// Multi-indices whose kernel weight is too small to move the ratio by
    /// more than `epsilon` are skipped.
    Windowed { epsilon: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub window: WindowMode,
    pub quadrature_points: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            window: WindowMode::Windowed {
                epsilon: DEFAULT_WINDOW_EPSILON,
            },
            quadrature_points: DEFAULT_QUADRATURE_POINTS,
        }
    }
}

impl EvalConfig {
    pub fn exact() -> Self {
        EvalConfig {
            window: WindowMode::Exact,
            ..Default::default()
        }
    }

    pub fn windowed(epsilon: f64) -> Self {
        EvalConfig {
            window: WindowMode::Windowed { epsilon },
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let WindowMode::Windowed { epsilon } = self.window {
            if !(epsilon > 0.0 && epsilon.is_finite()) {
                return Err(Error::InvalidParameter(alloc::format!(
                    "window epsilon must be positive, got {epsilon}"
                )));
            }
        }
        if self.quadrature_points == 0 {
            return Err(Error::InvalidParameter(
                "quadrature needs at least one node per axis".into(),
            ));
        }
        Ok(())
    }
}

/// Numerator and denominator of the operator at one point, before the
/// division and before the shift is removed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxProducts {
    pub numerator: f64,
    pub denominator: f64,
}

/// A coefficient grid bound to a kernel and an evaluation mode.
///
/// Construction resolves the window radius once; evaluation at a point is a
/// pure function of the point.
#[derive(Debug, Clone)]
pub struct MaxProductOperator<'a> {
    grid: &'a CoefficientGrid,
    kernel: ProductKernel,
    radius: Option<f64>,
}

impl<'a> MaxProductOperator<'a> {
    pub fn new(grid: &'a CoefficientGrid, kernel: ProductKernel, cfg: &EvalConfig) -> Result<Self> {
        cfg.validate()?;
        if kernel.dimension() != grid.dimension() {
            return Err(Error::DimensionMismatch {
                expected: grid.dimension(),
                got: kernel.dimension(),
            });
        }
        let radius = match cfg.window {
            WindowMode::Exact => None,
            WindowMode::Windowed { epsilon } => {
                let set = grid.index_set();
                let span = set
                    .lower()
                    .iter()
                    .zip(set.upper())
                    .map(|(lo, hi)| (hi - lo) as f64)
                    .fold(0.0, f64::max);
                // Skipped weights stay below this, so the denominator (at least
                // phi(2)^s) is untouched and the numerator moves by under epsilon.
                let threshold = epsilon * kernel.denominator_floor() / (1.0 + grid.max_value());
                kernel.window_radius(threshold, span + 4.0)
            }
        };
        Ok(MaxProductOperator {
            grid,
            kernel,
            radius,
        })
    }

    pub fn grid(&self) -> &CoefficientGrid {
        self.grid
    }

    pub fn kernel(&self) -> &ProductKernel {
        &self.kernel
    }

    /// Window radius in index units, `None` for exact evaluation.
    pub fn radius(&self) -> Option<f64> {
        self.radius
    }

    /// Both maxima at `x`, which must lie in the grid's domain.
    pub fn max_products(&self, x: &[f64]) -> Result<MaxProducts> {
        self.grid.domain().check_point(x)?;
        let set = self.grid.index_set();
        let nf = f64::from(set.n());
        let shape = set.shape();
        let s = x.len();

        // Per-axis window [from, to] and the univariate weights phi(n x_i - k_i).
        let mut from = Vec::with_capacity(s);
        let mut weights: Vec<Vec<f64>> = Vec::with_capacity(s);
        for (axis, &xi) in x.iter().enumerate() {
            let y = nf * xi;
            let (lo, hi) = (set.lower()[axis], set.upper()[axis]);
            let (mut a, mut b) = (lo, hi);
            if let Some(r) = self.radius {
                a = a.max(libm::ceil(y - r) as i64);
                b = b.min(libm::floor(y + r) as i64);
                if a > b {
                    a = lo;
                    b = hi;
                }
            }
            from.push(a);
            weights.push(
                (a..=b)
                    .map(|k| self.kernel.base().phi(y - k as f64))
                    .collect(),
            );
        }

        let strides: Vec<usize> = shape
            .iter()
            .scan(1usize, |acc, &len| {
                let stride = *acc;
                *acc *= len;
                Some(stride)
            })
            .collect();
        let base: usize = (0..s)
            .map(|axis| (from[axis] - set.lower()[axis]) as usize * strides[axis])
            .sum();

        let values = self.grid.values();
        let mut numerator = 0.0_f64;
        let mut denominator = 0.0_f64;
        let mut offset = alloc::vec![0usize; s];
        loop {
            let mut psi = 1.0;
            let mut flat = base;
            for axis in 0..s {
                psi *= weights[axis][offset[axis]];
                flat += offset[axis] * strides[axis];
            }
            numerator = numerator.max(values[flat] * psi);
            denominator = denominator.max(psi);

            let mut axis = 0;
            loop {
                if axis == s {
                    return Ok(MaxProducts {
                        numerator,
                        denominator,
                    });
                }
                offset[axis] += 1;
                if offset[axis] < weights[axis].len() {
                    break;
                }
                offset[axis] = 0;
                axis += 1;
            }
        }
    }

    /// `K_n(f, x)` with the grid shift removed.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        let MaxProducts {
            numerator,
            denominator,
        } = self.max_products(x)?;
        if !(denominator > 0.0 && denominator.is_finite()) {
            return Err(Error::DegenerateDenominator(denominator));
        }
        Ok(numerator / denominator - self.grid.shift())
    }

    /// Evaluates at grid point `flat` of a uniform grid with `resolution`
    /// samples per axis over the grid's domain.
    pub fn evaluate_grid_point(&self, resolution: &[usize], flat: usize) -> Result<f64> {
        check_resolution(self.grid.domain(), resolution)?;
        let mut x = alloc::vec![0.0; resolution.len()];
        point_into(self.grid.domain(), resolution, flat, &mut x);
        self.evaluate(&x)
    }

    /// Sequential evaluation on a uniform grid including endpoints.
    pub fn evaluate_grid(&self, resolution: &[usize]) -> Result<ScalarField> {
        check_resolution(self.grid.domain(), resolution)?;
        let total: usize = resolution.iter().product();
        let values = (0..total)
            .map(|flat| self.evaluate_grid_point(resolution, flat))
            .collect::<Result<Vec<f64>>>()?;
        ScalarField::new(self.grid.domain().clone(), resolution.to_vec(), values)
    }
}

/// `K_n(f, x)` for a single point.
pub fn evaluate_point(
    grid: &CoefficientGrid,
    kernel: ProductKernel,
    x: &[f64],
    cfg: &EvalConfig,
) -> Result<f64> {
    MaxProductOperator::new(grid, kernel, cfg)?.evaluate(x)
}

/// `K_n(f, .)` on a uniform grid with `resolution` samples per axis.
pub fn evaluate_grid(
    grid: &CoefficientGrid,
    kernel: ProductKernel,
    resolution: &[usize],
    cfg: &EvalConfig,
) -> Result<ScalarField> {
    MaxProductOperator::new(grid, kernel, cfg)?.evaluate_grid(resolution)
}

//! Convex phi-functions, modular functionals and error norms on sampled fields.

use alloc::vec::Vec;

use crate::coefficients::CoefficientGrid;
use crate::error::{Error, Result};
use crate::field::ScalarField;
use crate::kernel::ProductKernel;
use crate::operator::{EvalConfig, MaxProductOperator};

/// Exponent above which `e^t - 1` is treated as saturated.
pub const EXP_SATURATION: f64 = 700.0;

/// Relative slack of [`modular_inequality_check`].
pub const INEQUALITY_SLACK: f64 = 1e-2;

/// Generator of an Orlicz space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhiFunction {
    /// `u^p`, `p >= 1`.
    Power { p: f64 },
    /// `u^alpha log^beta(u + e)`, `alpha >= 1`, `beta > 0`.
    Zygmund { alpha: f64, beta: f64 },
    /// `e^(u^gamma) - 1`, `gamma > 0`.
    Exponential { gamma: f64 },
}

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

impl PhiFunction {
    pub fn power(p: f64) -> Result<Self> {
        if !(p >= 1.0 && p.is_finite()) {
            return Err(invalid(alloc::format!(
                "power exponent must be >= 1, got {p}"
            )));
        }
        Ok(PhiFunction::Power { p })
    }

    pub fn zygmund(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha >= 1.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(invalid(alloc::format!(
                "zygmund parameters need alpha >= 1 and beta > 0, got ({alpha}, {beta})"
            )));
        }
        Ok(PhiFunction::Zygmund { alpha, beta })
    }

    /// Any `gamma > 0` is accepted; `e^{u^gamma} - 1` is convex only for
    /// `gamma >= 1`.
    pub fn exponential(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0 && gamma.is_finite()) {
            return Err(invalid(alloc::format!(
                "exponential parameter must be > 0, got {gamma}"
            )));
        }
        Ok(PhiFunction::Exponential { gamma })
    }

    /// Whether `phi(2u) <= M phi(u)` holds for a fixed `M`.
    pub fn satisfies_delta2(&self) -> bool {
        !matches!(self, PhiFunction::Exponential { .. })
    }

    /// A valid `Delta_2` constant, when one exists.
    pub fn delta2_constant(&self) -> Option<f64> {
        match *self {
            PhiFunction::Power { p } => Some(libm::pow(2.0, p)),
            // log(2u + e) <= log 2 + log(u + e) <= 2 log(u + e)
            PhiFunction::Zygmund { alpha, beta } => Some(libm::pow(2.0, alpha + beta)),
            PhiFunction::Exponential { .. } => None,
        }
    }

    pub fn value(&self, u: f64) -> Result<f64> {
        if u.is_nan() || u < 0.0 {
            return Err(invalid(alloc::format!(
                "phi-functions take non-negative arguments, got {u}"
            )));
        }
        Ok(self.eval(u))
    }

    /// Unchecked evaluation; `u >= 0`. Saturates to `+inf`.
    pub(crate) fn eval(&self, u: f64) -> f64 {
        match *self {
            PhiFunction::Power { p } => libm::pow(u, p),
            PhiFunction::Zygmund { alpha, beta } => {
                libm::pow(u, alpha) * libm::pow(libm::log(u + core::f64::consts::E), beta)
            }
            PhiFunction::Exponential { gamma } => {
                let t = libm::pow(u, gamma);
                if t > EXP_SATURATION {
                    f64::INFINITY
                } else {
                    libm::expm1(t)
                }
            }
        }
    }

    /// `ln phi(u)` for `u > 0`, finite even where `phi(u)` overflows.
    fn ln_eval(&self, u: f64) -> f64 {
        match *self {
            PhiFunction::Exponential { gamma } => {
                let t = libm::pow(u, gamma);
                if t > EXP_SATURATION {
                    // ln(e^t - 1) = t + ln(1 - e^-t)
                    t + libm::log1p(-libm::exp(-t))
                } else {
                    libm::log(libm::expm1(t))
                }
            }
            _ => libm::log(self.eval(u)),
        }
    }
}

/// Value of a modular `I^phi[lambda f]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModularValue {
    /// `+inf` when saturated.
    pub value: f64,
    pub lambda: f64,
    /// Natural logarithm of the modular, finite also when `value` overflowed.
    pub log_value: f64,
    pub saturated: bool,
}

/// Deterministic pairwise summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        len if len <= 8 => xs.iter().sum(),
        len => {
            let (a, b) = xs.split_at(len / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

fn log_sum_exp(xs: &[f64]) -> f64 {
    let m = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    let rest: Vec<f64> = xs.iter().map(|&x| libm::exp(x - m)).collect();
    m + libm::log(pairwise_sum(&rest))
}

/// Riemann sum of `phi(lambda |v|)` times the grid-point weight over the
/// field.
pub fn modular(phi: &PhiFunction, field: &ScalarField, lambda: f64) -> Result<ModularValue> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(invalid(alloc::format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    let weight = field.cell_volume();
    let args: Vec<f64> = field
        .values()
        .iter()
        .map(|v| lambda * libm::fabs(*v))
        .collect();
    let terms: Vec<f64> = args.iter().map(|&u| phi.eval(u)).collect();
    let sum = pairwise_sum(&terms) * weight;
    if sum.is_finite() {
        return Ok(ModularValue {
            value: sum,
            lambda,
            log_value: libm::log(sum),
            saturated: false,
        });
    }
    let logs: Vec<f64> = args
        .iter()
        .filter(|&&u| u > 0.0)
        .map(|&u| phi.ln_eval(u))
        .collect();
    Ok(ModularValue {
        value: f64::INFINITY,
        lambda,
        log_value: log_sum_exp(&logs) + libm::log(weight),
        saturated: true,
    })
}

/// `max |a - b|` over the grid.
pub fn sup_error(a: &ScalarField, b: &ScalarField) -> Result<f64> {
    let d = a.difference(b)?;
    Ok(d.values()
        .iter()
        .map(|v| libm::fabs(*v))
        .fold(0.0, f64::max))
}

/// `(I^{u^p}[a - b])^(1/p)` on the grid.
pub fn lp_error(p: f64, a: &ScalarField, b: &ScalarField) -> Result<f64> {
    let phi = PhiFunction::power(p)?;
    let d = a.difference(b)?;
    let m = modular(&phi, &d, 1.0)?;
    if m.saturated {
        return Ok(libm::exp(m.log_value / p));
    }
    Ok(libm::pow(m.value, 1.0 / p))
}

/// Both sides of the modular inequality
/// `I[lambda (K_n f - K_n g)] <= ||psi||_1 I[phi(2)^-s lambda (f - g)]`.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub lhs: ModularValue,
    pub rhs: f64,
    pub psi_l1_norm: f64,
    pub pass: bool,
}

/// Step used for the kernel L1 norm in [`modular_inequality_check`].
pub const L1_NORM_STEP: f64 = 1e-3;

/// Checks the modular inequality for two coefficient grids over the same
/// index set.
///
/// The left side is the Riemann-sum modular of the operator difference on a
/// grid with `resolution` samples per axis. The right side treats `f - g` as
/// the piecewise-constant function with the coefficient differences on the
/// cells `R_k` and integrates it exactly.
pub fn modular_inequality_check(
    phi: &PhiFunction,
    lambda: f64,
    f: &CoefficientGrid,
    g: &CoefficientGrid,
    kernel: ProductKernel,
    resolution: &[usize],
    cfg: &EvalConfig,
) -> Result<InequalityReport> {
    if f.index_set() != g.index_set() || f.domain() != g.domain() {
        return Err(invalid(
            "coefficient grids must share index set and domain".into(),
        ));
    }
    let kf = MaxProductOperator::new(f, kernel, cfg)?.evaluate_grid(resolution)?;
    let kg = MaxProductOperator::new(g, kernel, cfg)?.evaluate_grid(resolution)?;
    let lhs = modular(phi, &kf.difference(&kg)?, lambda)?;

    let psi_l1_norm = kernel.l1_norm(L1_NORM_STEP)?;
    let scale = lambda / kernel.denominator_floor();
    let cell = libm::pow(f64::from(f.n()), -(f.dimension() as f64));
    let terms: Vec<f64> = f
        .unshifted_values()
        .iter()
        .zip(g.unshifted_values())
        .map(|(a, b)| phi.eval(scale * libm::fabs(a - b)))
        .collect();
    let rhs = psi_l1_norm * pairwise_sum(&terms) * cell;

    let pass = if lhs.saturated {
        rhs == f64::INFINITY
    } else {
        lhs.value <= rhs * (1.0 + INEQUALITY_SLACK) || lhs.value <= f64::MIN_POSITIVE
    };
    Ok(InequalityReport {
        lhs,
        rhs,
        psi_l1_norm,
        pass,
    })
}

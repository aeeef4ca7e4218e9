//! Sigmoidal activations, their density functions and the multivariate
//! product kernel.
//!
//! A sigmoidal function `sigma` has limits 0 at minus infinity and 1 at plus
//! infinity. Its density is
//!
//! ```text
//! phi(x) = (sigma(x + 1) - sigma(x - 1)) / 2
//! ```
//!
//! and the product kernel in dimension `s` is `psi(x) = phi(x_1) * ... * phi(x_s)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Exact radius beyond which the ramp density vanishes.
pub const RAMP_SUPPORT_RADIUS: f64 = 2.5;

/// A sigmoidal activation as seen by the condition checks.
///
/// [`SigmoidalKernel`] is the production implementation; the trait exists so
/// arbitrary activations (including deliberately broken ones) can be fed to
/// [`verify_sigma_conditions`].
pub trait Sigmoidal {
    /// Raw activation value. Callers guarantee `x` is finite.
    fn sigma(&self, x: f64) -> f64;

    /// Density `(sigma(x+1) - sigma(x-1)) / 2`.
    fn phi(&self, x: f64) -> f64 {
        0.5 * (self.sigma(x + 1.0) - self.sigma(x - 1.0))
    }

    /// Declared polynomial decay exponent of `sigma` at minus infinity.
    /// `f64::INFINITY` means `sigma` vanishes identically on a left half-line.
    fn decay_alpha(&self) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    Logistic,
    HyperbolicTangent,
    Ramp,
}

impl KernelKind {
    pub const ALL: [KernelKind; 3] = [
        KernelKind::Logistic,
        KernelKind::HyperbolicTangent,
        KernelKind::Ramp,
    ];

    /// Short lowercase name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Logistic => "logistic",
            KernelKind::HyperbolicTangent => "tanh",
            KernelKind::Ramp => "ramp",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        KernelKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of the three built-in sigmoidal activations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmoidalKernel {
    kind: KernelKind,
    decay_alpha: f64,
    support_radius: Option<f64>,
}

impl SigmoidalKernel {
    pub fn new(kind: KernelKind) -> Self {
        match kind {
            // Exponential decay satisfies every polynomial rate; 2 is the
            // exponent used by the numerical check.
            KernelKind::Logistic | KernelKind::HyperbolicTangent => SigmoidalKernel {
                kind,
                decay_alpha: 2.0,
                support_radius: None,
            },
            KernelKind::Ramp => SigmoidalKernel {
                kind,
                decay_alpha: f64::INFINITY,
                support_radius: Some(RAMP_SUPPORT_RADIUS),
            },
        }
    }

    pub fn logistic() -> Self {
        Self::new(KernelKind::Logistic)
    }

    pub fn hyperbolic_tangent() -> Self {
        Self::new(KernelKind::HyperbolicTangent)
    }

    pub fn ramp() -> Self {
        Self::new(KernelKind::Ramp)
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn support_radius(&self) -> Option<f64> {
        self.support_radius
    }

    /// `sigma(x)`, rejecting non-finite arguments.
    pub fn eval_sigma(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFiniteInput(x));
        }
        Ok(self.sigma(x))
    }

    /// `phi(x)`, rejecting non-finite arguments.
    pub fn eval_phi(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::NonFiniteInput(x));
        }
        Ok(self.phi(x))
    }

    /// Composite-midpoint estimate of the integral of `phi` over
    /// `[-truncation_radius, truncation_radius]`.
    ///
    /// The L1 norm of the product kernel in dimension `s` is the `s`-th power
    /// of this value.
    pub fn phi_l1_norm(&self, truncation_radius: f64, step: f64) -> Result<f64> {
        if !(truncation_radius > 0.0 && truncation_radius.is_finite()) {
            return Err(Error::InvalidParameter(alloc::format!(
                "truncation radius must be positive and finite, got {truncation_radius}"
            )));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidParameter(alloc::format!(
                "quadrature step must be positive and finite, got {step}"
            )));
        }
        let pieces = libm::ceil(2.0 * truncation_radius / step) as usize;
        let h = 2.0 * truncation_radius / pieces as f64;
        let sum: f64 = (0..pieces)
            .map(|j| self.phi(-truncation_radius + (j as f64 + 0.5) * h))
            .sum();
        Ok(sum * h)
    }

    /// Default truncation radius for [`phi_l1_norm`](Self::phi_l1_norm):
    /// the exact support for the ramp, 20 otherwise.
    pub fn l1_truncation_radius(&self) -> f64 {
        match self.support_radius {
            Some(r) => 2.0 * r,
            None => 20.0,
        }
    }
}

fn logistic(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + libm::exp(-x))
    } else {
        let e = libm::exp(x);
        e / (1.0 + e)
    }
}

fn ramp(x: f64) -> f64 {
    if x < -1.5 {
        0.0
    } else if x > 1.5 {
        1.0
    } else {
        x / 3.0 + 0.5
    }
}

impl Sigmoidal for SigmoidalKernel {
    fn sigma(&self, x: f64) -> f64 {
        match self.kind {
            KernelKind::Logistic => logistic(x),
            KernelKind::HyperbolicTangent => 0.5 * (libm::tanh(x) + 1.0),
            KernelKind::Ramp => ramp(x),
        }
    }

    // All three activations satisfy the odd-symmetry condition exactly, so
    // phi is even. Evaluating on the left half-line avoids the cancellation
    // of two values close to 1 in the right tail.
    fn phi(&self, x: f64) -> f64 {
        let t = -libm::fabs(x);
        if let Some(r) = self.support_radius {
            if t <= -r {
                return 0.0;
            }
        }
        0.5 * (self.sigma(t + 1.0) - self.sigma(t - 1.0))
    }

    fn decay_alpha(&self) -> f64 {
        self.decay_alpha
    }
}

/// `psi(x) = phi(x_1) * ... * phi(x_s)` for a fixed dimension `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductKernel {
    base: SigmoidalKernel,
    dimension: usize,
}

impl ProductKernel {
    pub fn new(base: SigmoidalKernel, dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        Ok(ProductKernel { base, dimension })
    }

    pub fn base(&self) -> &SigmoidalKernel {
        &self.base
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn eval_psi(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        x.iter()
            .try_fold(1.0, |acc, &xi| Ok(acc * self.base.eval_phi(xi)?))
    }

    /// `phi(2)^s`, the guaranteed lower bound of the operator denominator.
    pub fn denominator_floor(&self) -> f64 {
        libm::pow(self.base.phi(2.0), self.dimension as f64)
    }

    /// `||psi||_1` estimated as the `s`-th power of the univariate integral.
    pub fn l1_norm(&self, step: f64) -> Result<f64> {
        let one = self
            .base
            .phi_l1_norm(self.base.l1_truncation_radius(), step)?;
        Ok(libm::pow(one, self.dimension as f64))
    }

    /// Smallest radius `r >= 2` such that every multi-index `k` with
    /// `|| y - k ||_inf > r` has `psi(y - k) <= threshold / 2`.
    ///
    /// Returns `None` when no radius up to `max_radius` works; callers then
    /// fall back to the full index range.
    pub fn window_radius(&self, threshold: f64, max_radius: f64) -> Option<f64> {
        if let Some(r) = self.base.support_radius {
            return Some(r.max(2.0));
        }
        // psi(y) <= phi(y_j) * phi(0)^(s-1) for the coordinate that leaves the box.
        let others = libm::pow(self.base.phi(0.0), (self.dimension - 1) as f64);
        let target = 0.5 * threshold;
        let small_enough = |r: f64| self.base.phi(r) * others <= target;
        let mut hi = 2.0_f64;
        while !small_enough(hi) {
            hi *= 2.0;
            if hi > 2.0 * max_radius {
                return None;
            }
        }
        if hi == 2.0 {
            return Some(2.0);
        }
        let mut lo = hi / 2.0;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if small_enough(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if hi > max_radius {
            None
        } else {
            Some(hi)
        }
    }
}

/// Pass/fail outcome of the numerical checks of the three sigmoidal conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionReport {
    /// `sigma(x) - 1/2` is odd.
    pub odd_symmetry: bool,
    /// `phi` is non-decreasing for `x < 0` and non-increasing for `x >= 0`.
    pub unimodal_density: bool,
    /// `sigma(x) |x|^alpha` stays bounded as `x` goes to minus infinity.
    pub left_tail_decay: bool,
    /// Largest observed `|sigma(x) - 1/2 + sigma(-x) - 1/2|`.
    pub max_symmetry_defect: f64,
    /// Largest observed violation of the monotonicity of `phi`.
    pub max_monotonicity_defect: f64,
    pub sample_count: usize,
    pub range_radius: f64,
    pub alpha: f64,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.odd_symmetry && self.unimodal_density && self.left_tail_decay
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |ok: bool| if ok { "pass" } else { "fail" };
        writeln!(f, "sigma1_odd_symmetry: {}", verdict(self.odd_symmetry))?;
        writeln!(
            f,
            "sigma2_unimodal_density: {}",
            verdict(self.unimodal_density)
        )?;
        writeln!(
            f,
            "sigma3_left_tail_decay: {}",
            verdict(self.left_tail_decay)
        )?;
        write!(f, "all: {}", verdict(self.all_pass()))
    }
}

/// Absolute tolerance of the odd-symmetry check.
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;
/// Absolute slack allowed in the monotonicity check of `phi`.
pub const MONOTONICITY_TOLERANCE: f64 = 1e-14;

/// Checks the three sigmoidal conditions on `sample_count` uniform samples of
/// `[-range_radius, range_radius]`.
///
/// The decay check looks at `g(x) = sigma(x) |x|^alpha` on the samples with
/// `x <= -1`, split into an inner and an outer half. It passes when `g` is
/// finite and its maximum over the outer half does not exceed its maximum
/// over the inner half. With `alpha = inf` the activation must vanish
/// identically on the outer half.
pub fn verify_sigma_conditions<S: Sigmoidal + ?Sized>(
    kernel: &S,
    sample_count: usize,
    range_radius: f64,
) -> Result<ConditionReport> {
    if sample_count < 100 {
        return Err(Error::InvalidParameter(alloc::format!(
            "at least 100 samples are required, got {sample_count}"
        )));
    }
    if !(range_radius > 1.0 && range_radius.is_finite()) {
        return Err(Error::InvalidParameter(alloc::format!(
            "range radius must be finite and above 1, got {range_radius}"
        )));
    }
    let step = 2.0 * range_radius / (sample_count - 1) as f64;
    let xs: Vec<f64> = (0..sample_count)
        .map(|i| -range_radius + i as f64 * step)
        .collect();

    let max_symmetry_defect = xs
        .iter()
        .map(|&x| libm::fabs(kernel.sigma(x) - 0.5 + kernel.sigma(-x) - 0.5))
        .fold(0.0, f64::max);

    let phis: Vec<f64> = xs.iter().map(|&x| kernel.phi(x)).collect();
    let mut max_monotonicity_defect = 0.0_f64;
    for (w, pair) in xs.windows(2).zip(phis.windows(2)) {
        let defect = if w[1] < 0.0 {
            pair[0] - pair[1]
        } else if w[0] >= 0.0 {
            pair[1] - pair[0]
        } else {
            0.0
        };
        max_monotonicity_defect = max_monotonicity_defect.max(defect);
    }
    let density_nonnegative = phis.iter().all(|&p| p >= 0.0);

    let alpha = kernel.decay_alpha();
    let tail: Vec<f64> = xs.iter().copied().filter(|&x| x <= -1.0).collect();
    let split = -0.5 * (range_radius + 1.0);
    let (outer, inner): (Vec<f64>, Vec<f64>) = tail.iter().partition(|&&x| x < split);
    let left_tail_decay = if alpha.is_infinite() {
        outer.iter().all(|&x| kernel.sigma(x) == 0.0)
    } else {
        let g = |x: f64| kernel.sigma(x) * libm::pow(libm::fabs(x), alpha);
        let inner_max = inner.iter().map(|&x| g(x)).fold(0.0, f64::max);
        let outer_vals: Vec<f64> = outer.iter().map(|&x| g(x)).collect();
        outer_vals.iter().all(|v| v.is_finite())
            && inner_max.is_finite()
            && outer_vals.iter().fold(0.0, |a: f64, &b| a.max(b)) <= inner_max
    };

    Ok(ConditionReport {
        odd_symmetry: max_symmetry_defect <= SYMMETRY_TOLERANCE,
        unimodal_density: density_nonnegative && max_monotonicity_defect <= MONOTONICITY_TOLERANCE,
        left_tail_decay,
        max_symmetry_defect,
        max_monotonicity_defect,
        sample_count,
        range_radius,
        alpha,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn sigma_spot_values() {
        let l = SigmoidalKernel::logistic();
        assert_eq!(l.eval_sigma(0.0).unwrap(), 0.5);
        assert!(close(
            l.eval_sigma(1.0).unwrap(),
            0.731_058_578_630_004_9,
            1e-15
        ));
        let r = SigmoidalKernel::ramp();
        assert_eq!(r.eval_sigma(1.5).unwrap(), 1.0);
        assert_eq!(r.eval_sigma(-1.5).unwrap(), 0.0);
        assert_eq!(
            SigmoidalKernel::hyperbolic_tangent()
                .eval_sigma(0.0)
                .unwrap(),
            0.5
        );
    }

    #[test]
    fn non_finite_input_is_rejected() {
        for kind in KernelKind::ALL {
            let k = SigmoidalKernel::new(kind);
            assert!(matches!(
                k.eval_sigma(f64::NAN),
                Err(Error::NonFiniteInput(_))
            ));
            assert!(matches!(
                k.eval_phi(f64::INFINITY),
                Err(Error::NonFiniteInput(_))
            ));
        }
    }

    #[test]
    fn phi_spot_values() {
        let r = SigmoidalKernel::ramp();
        assert!(close(r.eval_phi(0.0).unwrap(), 1.0 / 3.0, 1e-15));
        assert!(close(r.eval_phi(2.0).unwrap(), 1.0 / 12.0, 1e-15));
        assert!(close(r.eval_phi(-1.0).unwrap(), 0.25, 1e-15));
        assert_eq!(r.eval_phi(2.5).unwrap(), 0.0);
        assert_eq!(r.eval_phi(3.0).unwrap(), 0.0);
        let l = SigmoidalKernel::logistic();
        assert!(close(
            l.eval_phi(0.0).unwrap(),
            0.231_058_578_630_004_9,
            1e-15
        ));
        assert!(close(l.eval_phi(2.0).unwrap(), 0.110_757, 1e-6));
    }

    #[test]
    fn psi_values_and_dimension_check() {
        let p = ProductKernel::new(SigmoidalKernel::ramp(), 2).unwrap();
        assert!(close(p.eval_psi(&[0.0, 0.0]).unwrap(), 1.0 / 9.0, 1e-15));
        assert!(matches!(
            p.eval_psi(&[0.0]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
        let p1 = ProductKernel::new(SigmoidalKernel::ramp(), 1).unwrap();
        assert_eq!(p1.eval_psi(&[3.0]).unwrap(), 0.0);
        for kind in KernelKind::ALL {
            let p = ProductKernel::new(SigmoidalKernel::new(kind), 2).unwrap();
            assert!(p.eval_psi(&[0.0, 0.0]).unwrap() <= 0.25);
        }
        assert!(ProductKernel::new(SigmoidalKernel::ramp(), 0).is_err());
    }

    #[test]
    fn l1_norms_are_one() {
        let r = SigmoidalKernel::ramp().phi_l1_norm(5.0, 1e-3).unwrap();
        assert!(close(r, 1.0, 1e-6), "{r}");
        for k in [
            SigmoidalKernel::logistic(),
            SigmoidalKernel::hyperbolic_tangent(),
        ] {
            let v = k.phi_l1_norm(20.0, 1e-3).unwrap();
            assert!(close(v, 1.0, 1e-4), "{v}");
        }
    }

    #[test]
    fn builtin_kernels_satisfy_conditions() {
        for kind in KernelKind::ALL {
            let report = verify_sigma_conditions(&SigmoidalKernel::new(kind), 1000, 20.0).unwrap();
            assert!(report.all_pass(), "{kind}: {report:?}");
        }
    }

    struct Shifted;

    impl Sigmoidal for Shifted {
        fn sigma(&self, x: f64) -> f64 {
            (x + 0.7).clamp(0.0, 1.0)
        }
        fn decay_alpha(&self) -> f64 {
            f64::INFINITY
        }
    }

    #[test]
    fn asymmetric_activation_fails_odd_symmetry() {
        let report = verify_sigma_conditions(&Shifted, 1000, 20.0).unwrap();
        assert!(!report.odd_symmetry);
        assert!(!report.all_pass());
    }

    struct HeavyTail;

    impl Sigmoidal for HeavyTail {
        // Decays like 1/|x| on the left, declared as 2.
        fn sigma(&self, x: f64) -> f64 {
            if x >= 0.0 {
                1.0 - 0.5 / (1.0 + x)
            } else {
                0.5 / (1.0 - x)
            }
        }
        fn decay_alpha(&self) -> f64 {
            2.0
        }
    }

    #[test]
    fn overclaimed_decay_fails_tail_check() {
        let report = verify_sigma_conditions(&HeavyTail, 1000, 20.0).unwrap();
        assert!(report.odd_symmetry);
        assert!(!report.left_tail_decay);
    }

    #[test]
    fn too_few_samples_rejected() {
        assert!(verify_sigma_conditions(&SigmoidalKernel::ramp(), 99, 20.0).is_err());
    }

    #[test]
    fn window_radius_bounds_tail() {
        let p = ProductKernel::new(SigmoidalKernel::logistic(), 2).unwrap();
        let tau = 1e-12;
        let r = p.window_radius(tau, 1e6).unwrap();
        assert!(r > 2.0);
        let phi0 = p.base().phi(0.0);
        assert!(p.base().phi(r) * phi0 <= tau / 2.0);
        let ramp = ProductKernel::new(SigmoidalKernel::ramp(), 2).unwrap();
        assert_eq!(ramp.window_radius(tau, 1e6), Some(2.5));
    }

    #[test]
    fn report_text_lines() {
        let report = verify_sigma_conditions(&SigmoidalKernel::ramp(), 1000, 20.0).unwrap();
        let text = alloc::format!("{report}");
        assert!(text.contains("sigma1_odd_symmetry: pass"));
        assert!(text.ends_with("all: pass"));
    }
}

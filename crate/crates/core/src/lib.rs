//! Multivariate max-product neural network operators of Kantorovich type.
//!
//! The crate is `no_std` (with `alloc`) and covers the numerical core:
//!
//! - [`kernel`]: logistic, hyperbolic-tangent and ramp sigmoidal
//!   activations, their densities and product kernels, and numerical checks
//!   of the sigmoidal conditions.
//! - [`domain`], [`coefficients`], [`operator`]: box domains, the index
//!   lattice, Kantorovich coefficient grids and operator evaluation.
//! - [`field`]: values sampled on uniform grids.
//! - [`orlicz`]: phi-functions, modular functionals and error norms.
//!
//! ```
//! use maxprod_core::{BoxDomain, CoefficientGrid, EvalConfig, ProductKernel, SigmoidalKernel};
//!
//! let grid = CoefficientGrid::from_function(|u| u[0] * u[0], 20, BoxDomain::unit(1), 8)?;
//! let kernel = ProductKernel::new(SigmoidalKernel::logistic(), 1)?;
//! let y = maxprod_core::evaluate_point(&grid, kernel, &[0.5], &EvalConfig::default())?;
//! assert!((y - 0.25).abs() < 0.1);
//! # Ok::<(), maxprod_core::Error>(())
//! ```

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod coefficients;
pub mod domain;
pub mod error;
pub mod field;
pub mod kernel;
pub mod operator;
pub mod orlicz;

pub use coefficients::{CoefficientGrid, DEFAULT_QUADRATURE_POINTS};
pub use domain::{BoxDomain, IndexSet};
pub use error::{Error, Result};
pub use field::ScalarField;
pub use kernel::{
    verify_sigma_conditions, ConditionReport, KernelKind, ProductKernel, Sigmoidal, SigmoidalKernel,
};
pub use operator::{
    evaluate_grid, evaluate_point, EvalConfig, MaxProductOperator, MaxProducts, WindowMode,
    DEFAULT_WINDOW_EPSILON,
};
pub use orlicz::{
    lp_error, modular, modular_inequality_check, sup_error, InequalityReport, ModularValue,
    PhiFunction,
};

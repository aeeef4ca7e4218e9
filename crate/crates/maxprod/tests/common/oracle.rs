//! Brute-force reference evaluation of the max-product operator on `[0,1]^s`.
//!
//! Everything here is written from the defining formulas with no shortcuts:
//! densities via the two-sided difference of the activation, cell means via a
//! plain midpoint average, and both maxima over the whole lattice.

#![allow(dead_code)]

pub fn sigma(kind: &str, x: f64) -> f64 {
    match kind {
        "logistic" => 1.0 / (1.0 + (-x).exp()),
        "tanh" => 0.5 * (x.tanh() + 1.0),
        "ramp" => {
            if x < -1.5 {
                0.0
            } else if x > 1.5 {
                1.0
            } else {
                x / 3.0 + 0.5
            }
        }
        other => panic!("unknown kernel {other}"),
    }
}

pub fn phi(kind: &str, x: f64) -> f64 {
    0.5 * (sigma(kind, x + 1.0) - sigma(kind, x - 1.0))
}

/// Midpoint cell means of `f` on `[0,1]`, `n` cells, `m` nodes each.
pub fn cell_means_1d(f: impl Fn(f64) -> f64, n: usize, m: usize) -> Vec<f64> {
    (0..n)
        .map(|k| {
            let total: f64 = (0..m)
                .map(|j| f((k as f64 + (j as f64 + 0.5) / m as f64) / n as f64))
                .sum();
            total / m as f64
        })
        .collect()
}

/// `K_n` on `[0,1]` with coefficients `c_0..c_{n-1}`.
pub fn eval_1d(kind: &str, coeffs: &[f64], x: f64) -> f64 {
    let n = coeffs.len() as f64;
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for (k, c) in coeffs.iter().enumerate() {
        let w = phi(kind, n * x - k as f64);
        num = num.max(c * w);
        den = den.max(w);
    }
    num / den
}

/// `K_n` on `[0,1]^2`; `coeffs[k1 + n * k2]`.
pub fn eval_2d(kind: &str, n: usize, coeffs: &[f64], x: [f64; 2]) -> f64 {
    let nf = n as f64;
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for k2 in 0..n {
        for k1 in 0..n {
            let w = phi(kind, nf * x[0] - k1 as f64) * phi(kind, nf * x[1] - k2 as f64);
            num = num.max(coeffs[k1 + n * k2] * w);
            den = den.max(w);
        }
    }
    num / den
}

/// Largest `|K_n f - f|` on the `points`-point uniform grid of `[0,1]`.
pub fn sup_error_1d(
    kind: &str,
    f: impl Fn(f64) -> f64 + Copy,
    n: usize,
    m: usize,
    points: usize,
) -> f64 {
    let coeffs = cell_means_1d(f, n, m);
    (0..points)
        .map(|i| {
            let x = i as f64 / (points - 1) as f64;
            (eval_1d(kind, &coeffs, x) - f(x)).abs()
        })
        .fold(0.0, f64::max)
}

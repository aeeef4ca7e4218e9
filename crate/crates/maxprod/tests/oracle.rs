mod common;

use common::{fixtures, oracle};
use maxprod_core::{
    evaluate_point, BoxDomain, CoefficientGrid, EvalConfig, KernelKind, ProductKernel,
    SigmoidalKernel,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kernel(kind: KernelKind, s: usize) -> ProductKernel {
    ProductKernel::new(SigmoidalKernel::new(kind), s).unwrap()
}

#[test]
fn random_grids_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in KernelKind::ALL {
        for _ in 0..20 {
            let n = rng.gen_range(1..=12usize);
            let coeffs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..5.0)).collect();
            let grid =
                CoefficientGrid::from_values(coeffs.clone(), n as u32, BoxDomain::unit(1)).unwrap();
            for _ in 0..20 {
                let x = rng.gen::<f64>();
                let want = oracle::eval_1d(kind.name(), &coeffs, x);
                for cfg in [EvalConfig::exact(), EvalConfig::windowed(1e-9)] {
                    let got = evaluate_point(&grid, kernel(kind, 1), &[x], &cfg).unwrap();
                    assert!(
                        (got - want).abs() <= 1e-9,
                        "{kind} n={n} x={x}: {got} vs {want}"
                    );
                }
            }

            let n2 = rng.gen_range(1..=6usize);
            let coeffs: Vec<f64> = (0..n2 * n2).map(|_| rng.gen_range(0.0..5.0)).collect();
            let grid = CoefficientGrid::from_values(coeffs.clone(), n2 as u32, BoxDomain::unit(2))
                .unwrap();
            for _ in 0..20 {
                let x = [rng.gen::<f64>(), rng.gen::<f64>()];
                let want = oracle::eval_2d(kind.name(), n2, &coeffs, x);
                let got = evaluate_point(&grid, kernel(kind, 2), &x, &EvalConfig::exact()).unwrap();
                assert!(
                    (got - want).abs() <= 1e-12,
                    "{kind} n={n2} x={x:?}: {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn cell_means_match_plain_average() {
    let f = |x: f64| (3.0 * x).sin() + x * x;
    for n in [1u32, 7, 40] {
        let grid = CoefficientGrid::from_function(|u| f(u[0]), n, BoxDomain::unit(1), 8).unwrap();
        let want = oracle::cell_means_1d(f, n as usize, 8);
        for (a, b) in grid.unshifted_values().iter().zip(&want) {
            assert!((a - b).abs() <= 1e-12);
        }
    }
}

#[test]
fn oracle_reproduces_frozen_fixtures() {
    for (kind, errors) in fixtures::SQUARE_SUP_ERRORS {
        for (n, want) in fixtures::NS.iter().zip(errors) {
            let got = oracle::sup_error_1d(kind, |x| x * x, *n as usize, 8, 201);
            assert!(
                (got - want).abs() <= fixtures::FIXTURE_TOLERANCE,
                "{kind} n={n}: {got}"
            );
        }
    }
}

#[test]
fn oracle_agrees_with_library_kernels() {
    for kind in KernelKind::ALL {
        let k = SigmoidalKernel::new(kind);
        for i in -400..=400 {
            let x = f64::from(i) * 0.025;
            assert!((k.eval_phi(x).unwrap() - oracle::phi(kind.name(), x)).abs() <= 1e-15);
            assert!((k.eval_sigma(x).unwrap() - oracle::sigma(kind.name(), x)).abs() <= 1e-15);
        }
    }
}

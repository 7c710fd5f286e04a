use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::Result;
use crate::kernel::lift_operator;
use crate::norms::Exponent;
use crate::repr::Weight;
use crate::transforms::CoeffField2D;

pub const POWER_SEED: u64 = 0x7077_7269_7465;
pub const POWER_ITERATIONS: usize = 1000;
pub const POWER_TOL: f64 = 1e-12;

/// Largest singular value by power iteration on `B^H B` from a seeded start.
/// The returned value is `||B x||` for the final unit vector `x`, hence
/// never above the true norm.
pub fn spectral_norm(b: &DMatrix<Complex64>) -> f64 {
    if b.ncols() == 0 || b.iter().all(|z| z.norm() == 0.0) {
        return 0.0;
    }
    let mut rng = crate::random::rng(POWER_SEED);
    let mut x = DVector::from_fn(b.ncols(), |_, _| crate::random::complex(&mut rng));
    x /= Complex64::new(x.norm(), 0.0);
    let mut best: f64 = 0.0;
    let mut previous = 0.0;
    for _ in 0..POWER_ITERATIONS {
        let y = b * &x;
        let value = y.norm();
        best = best.max(value);
        let z = b.adjoint() * y;
        let zn = z.norm();
        if zn == 0.0 {
            break;
        }
        x = z / Complex64::new(zn, 0.0);
        if (value - previous).abs() <= POWER_TOL * value {
            break;
        }
        previous = value;
    }
    best.max((b * &x).norm())
}

fn lp(v: &DVector<Complex64>, p: f64) -> f64 {
    v.iter().map(|z| z.norm().powf(p)).sum::<f64>().powf(1.0 / p)
}

/// `|z|^{r-2} z`, the duality map of `l^r` up to normalization.
fn duality_map(v: &DVector<Complex64>, r: f64) -> DVector<Complex64> {
    v.map(|z| {
        let a = z.norm();
        if a == 0.0 {
            z
        } else {
            z * a.powf(r - 2.0)
        }
    })
}

/// Lower estimate of `||B||_{l^p -> l^p}` for finite `1 < p` by Boyd's
/// nonlinear power method, run from the all-ones vector and a seeded vector.
pub fn lp_norm_estimate(b: &DMatrix<Complex64>, p: f64) -> f64 {
    if b.ncols() == 0 || b.iter().all(|z| z.norm() == 0.0) {
        return 0.0;
    }
    let q = p / (p - 1.0);
    let mut rng = crate::random::rng(POWER_SEED);
    let starts = [
        DVector::from_element(b.ncols(), Complex64::new(1.0, 0.0)),
        DVector::from_fn(b.ncols(), |_, _| crate::random::complex(&mut rng)),
    ];
    let mut best: f64 = 0.0;
    for start in starts {
        let mut x = &start / Complex64::new(lp(&start, p), 0.0);
        let mut previous = 0.0;
        for _ in 0..POWER_ITERATIONS {
            let y = b * &x;
            let value = lp(&y, p);
            best = best.max(value);
            let z = b.adjoint() * duality_map(&y, p);
            let next = duality_map(&z, q);
            let norm = lp(&next, p);
            if norm == 0.0 {
                break;
            }
            x = next / Complex64::new(norm, 0.0);
            if (value - previous).abs() <= POWER_TOL * value {
                break;
            }
            previous = value;
        }
        best = best.max(lp(&(b * &x), p));
    }
    best
}

/// Norm (or lower estimate) of the lifted operator `l^p_{m1} -> l^p_{m2}`
/// and the method used. `p = 1` and `p = inf` are the exact column and row
/// sums of the weighted matrix; `p = 2` uses power iteration and other
/// exponents use [`lp_norm_estimate`].
pub fn lifted_lp_norm(k: &CoeffField2D, p: Exponent, m1: &Weight, m2: &Weight) -> Result<(f64, &'static str)> {
    let lifted = lift_operator(k);
    let w1 = m1.values_on(lifted.domain())?;
    let w2 = m2.values_on(lifted.codomain())?;
    let b = DMatrix::from_fn(w2.len(), w1.len(), |y, x| lifted.matrix()[(y, x)] * (w2[y] / w1[x]));
    Ok(match p {
        Exponent::Finite(v) if v == 1.0 => {
            let best = (0..b.ncols())
                .map(|x| b.column(x).iter().map(|z| z.norm()).sum::<f64>())
                .fold(0.0, f64::max);
            (best, "exact-column-sum")
        }
        Exponent::Infinite => {
            let best = (0..b.nrows())
                .map(|y| b.row(y).iter().map(|z| z.norm()).sum::<f64>())
                .fold(0.0, f64::max);
            (best, "exact-row-sum")
        }
        Exponent::Finite(v) if v == 2.0 => (spectral_norm(&b), "power-iteration"),
        Exponent::Finite(v) => (lp_norm_estimate(&b, v), "nonlinear-power-method"),
    })
}

//! Projective Weyl-Heisenberg representation on `Z_N`.
//!
//! `pi(k, l) = M_l T_k` with `T_k f(t) = f(t - k mod N)` and
//! `M_l f(t) = e^{2 pi i l t / N} f(t)`. The central phase coordinate is
//! dropped; it reappears only as the cocycle of the composition law
//! `pi(p) pi(p') = e^{-2 pi i l' k / N} pi(p + p')`.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::lattice::TfPoint;
use super::signal::Signal;
use crate::error::Result;

/// `e^{2 pi i m / N}` with the exponent reduced mod N first.
pub(crate) fn root_of_unity(m: i64, n: usize) -> Complex64 {
    let r = m.rem_euclid(n as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / n as f64)
}

/// Applies the time-frequency shift `M_l T_k` to `f`.
pub fn tf_shift(f: &Signal, p: &TfPoint) -> Result<Signal> {
    let n = p.n;
    f.expect_len(n)?;
    let src = f.values();
    let out = (0..n)
        .map(|t| {
            let shifted = src[(t + n - p.k) % n];
            root_of_unity((p.l * t) as i64, n) * shifted
        })
        .collect();
    Ok(Signal::from_vec_unchecked(out))
}

/// The unitary matrix of `pi(p)`.
pub fn tf_shift_matrix(p: &TfPoint) -> DMatrix<Complex64> {
    let n = p.n;
    let mut m = DMatrix::zeros(n, n);
    for t in 0..n {
        m[(t, (t + n - p.k) % n)] = root_of_unity((p.l * t) as i64, n);
    }
    m
}

/// Phase factor `c` in `pi(p) pi(q) = c * pi(p + q)`.
pub fn cocycle(p: &TfPoint, q: &TfPoint) -> Complex64 {
    root_of_unity(-((q.l * p.k) as i64), p.n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn shifts_of_a_delta() {
        let d = Signal::delta(4, 0).unwrap();
        let t = tf_shift(&d, &TfPoint::new(1, 0, 4).unwrap()).unwrap();
        assert_eq!(t.values(), &[c(0., 0.), c(1., 0.), c(0., 0.), c(0., 0.)]);
        let m = tf_shift(&d, &TfPoint::new(0, 1, 4).unwrap()).unwrap();
        assert_eq!(m.values(), &[c(1., 0.), c(0., 0.), c(0., 0.), c(0., 0.)]);
    }

    #[test]
    fn translation_then_modulation_of_a_ramp() {
        let f = Signal::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let g = tf_shift(&f, &TfPoint::new(1, 1, 4).unwrap()).unwrap();
        // T_1 f = (4, 1, 2, 3); M_1 multiplies by (1, i, -1, -i).
        let expected = [c(4., 0.), c(0., 1.), c(-2., 0.), c(0., -3.)];
        for (a, b) in g.values().iter().zip(expected) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn matrix_matches_operator() {
        let f = Signal::new((0..6).map(|t| c(t as f64, 1.0 - t as f64)).collect()).unwrap();
        let p = TfPoint::new(2, 5, 6).unwrap();
        let via_op = tf_shift(&f, &p).unwrap();
        let via_mat = tf_shift_matrix(&p) * f.to_dvector();
        for (a, b) in via_op.values().iter().zip(via_mat.iter()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let f = Signal::zeros(3).unwrap();
        assert!(tf_shift(&f, &TfPoint::new(0, 0, 4).unwrap()).is_err());
    }
}

//! Window-dependent constants of a frame under a weight.
//!
//! With Gram matrix `G(lambda, mu) = <pi(mu) psi, pi(lambda) psi>`, the
//! analysis constant is `sup_mu sum_lambda |G(lambda, mu)| m(lambda) / m(mu)
//! = sup_mu ||V_psi pi(mu) psi||_{l^1_m} / m(mu)`, which is the `l^1_m`
//! operator norm of the reproducing projection and is dominated by
//! `||V_psi psi||_{l^1_w}` for a `w`-moderate `m`. The row constant is the
//! `l^inf_m` norm of the same projection.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::repr::Weight;
use crate::transforms::FrameSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WindowConstants {
    /// `||P||` on `l^1_m`.
    pub analysis: f64,
    /// `||P||` on `l^inf_m`.
    pub row: f64,
}

impl WindowConstants {
    /// Bound on `||P||` on `l^p_m` for every `p` (Schur test).
    pub fn all_p(&self) -> f64 {
        self.analysis.max(self.row)
    }
}

pub(crate) fn gram(frame: &FrameSpec) -> DMatrix<Complex64> {
    let phi = frame.atom_matrix();
    phi.adjoint() * phi
}

pub fn window_constants(frame: &FrameSpec, m: &Weight) -> Result<WindowConstants> {
    window_constants_of(&gram(frame), &m.values_on(&frame.lattice())?)
}

pub(crate) fn window_constants_of(gram: &DMatrix<Complex64>, m: &[f64]) -> Result<WindowConstants> {
    let len = m.len();
    let mut analysis: f64 = 0.0;
    for mu in 0..len {
        let col: f64 = (0..len).map(|l| gram[(l, mu)].norm() * m[l]).sum();
        analysis = analysis.max(col / m[mu]);
    }
    let mut row: f64 = 0.0;
    for l in 0..len {
        let r: f64 = (0..len).map(|mu| gram[(l, mu)].norm() / m[mu]).sum();
        row = row.max(r * m[l]);
    }
    Ok(WindowConstants { analysis, row })
}

/// Weighted analysis constant of a general atom family given as matrix columns.
pub(crate) fn column_family_constant(atoms: &DMatrix<Complex64>, m: &[f64]) -> f64 {
    let g = atoms.adjoint() * atoms;
    window_constants_of(&g, m).map(|c| c.analysis).unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::{weighted_lp_norm, Exponent};
    use crate::transforms::{analyze, periodized_gaussian};

    #[test]
    fn orthonormal_basis_has_unit_constants() {
        let frame = FrameSpec::haar(16).unwrap();
        let c = window_constants(&frame, &Weight::Dyadic(0.7)).unwrap();
        assert!((c.analysis - 1.0).abs() < 1e-12 && (c.row - 1.0).abs() < 1e-12);
    }

    #[test]
    fn analysis_constant_matches_atom_norms_and_window_bound() {
        let frame = FrameSpec::parseval_gabor(periodized_gaussian(8).unwrap()).unwrap();
        let m = Weight::PolynomialTf(1.0);
        let w = Weight::PolynomialTf(1.0);
        let c = window_constants(&frame, &m).unwrap();
        let mv = m.values_on(&frame.lattice()).unwrap();
        let direct = (0..frame.len())
            .map(|i| weighted_lp_norm(&analyze(&frame.atom(i), &frame).unwrap(), Exponent::ONE, &m).unwrap() / mv[i])
            .fold(0.0, f64::max);
        assert!((c.analysis - direct).abs() < 1e-12 * direct);
        let window_norm = weighted_lp_norm(&analyze(&frame.window(), &frame).unwrap(), Exponent::ONE, &w).unwrap();
        assert!(c.analysis <= window_norm * (1.0 + 1e-12));
    }
}

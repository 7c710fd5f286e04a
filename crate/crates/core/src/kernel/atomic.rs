use num_complex::Complex64;

use super::constants::{column_family_constant, gram, window_constants_of};
use crate::error::Result;
use crate::repr::{LatticePoint, Signal, Weight};
use crate::transforms::{dual_frame, FrameSpec};

/// `f = sum_i c_i pi(lambda_i) psi` with dual-frame coefficients
/// `c_i = <f, S^{-1} pi(lambda_i) psi>` over the full lattice.
#[derive(Debug, Clone)]
pub struct AtomicDecomposition {
    /// Non-zero terms in lattice order.
    pub atoms: Vec<(LatticePoint, Complex64)>,
    pub frame: FrameSpec,
    /// `sum_i |c_i| w(lambda_i)`.
    pub l1_weighted_mass: f64,
    /// `C` with `mass <= C ||f||_{Co l^1_w}` and `||f||_{Co l^1_w} <= C mass`.
    pub equivalence_constant: f64,
}

impl AtomicDecomposition {
    pub fn reconstruct(&self) -> Result<Signal> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.frame.dim()];
        for (p, c) in &self.atoms {
            let atom = self.frame.atom_at(p)?;
            for (slot, a) in out.iter_mut().zip(atom.values()) {
                *slot += c * a;
            }
        }
        Signal::new(out)
    }
}

pub fn atomic_decompose(f: &Signal, frame: &FrameSpec, w: &Weight) -> Result<AtomicDecomposition> {
    f.expect_len(frame.dim())?;
    let dual = dual_frame(frame)?;
    let lattice = frame.lattice();
    let weights = w.values_on(&lattice)?;
    let x = f.to_dvector();
    let coeffs = dual.atoms.adjoint() * &x;

    let mut atoms = Vec::new();
    let mut mass = 0.0;
    for (i, c) in coeffs.iter().enumerate() {
        if *c != Complex64::new(0.0, 0.0) {
            atoms.push((lattice.point(i), *c));
            mass += c.norm() * weights[i];
        }
    }

    // coefficients = G_dual (V f) and V f = G coefficients, with the
    // cross-Gram matrices of the dual and primal systems
    let primal = window_constants_of(&gram(frame), &weights)?.analysis;
    let dual_c = column_family_constant(&dual.atoms, &weights);
    Ok(AtomicDecomposition {
        atoms,
        frame: frame.clone(),
        l1_weighted_mass: mass,
        equivalence_constant: primal.max(dual_c),
    })
}

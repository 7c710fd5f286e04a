use num_complex::Complex64;

use super::constants::window_constants;
use super::galerkin::galerkin_kernel;
use crate::error::Result;
use crate::norms::{product_weighted_sup, weighted_lp_norm, Exponent};
use crate::operator::OperatorMatrix;
use crate::repr::{Signal, Weight};
use crate::transforms::{analyze, tensor_analysis, tensor_synthesis, CoeffField2D, FrameSpec};

/// The sesquilinear form `(upsilon, phi) -> <K upsilon, phi> = <K, phi (x) upsilon>`
/// of a kernel, with the coorbit bound
/// `|<K upsilon, phi>| <= ||V_Psi K||_{l^inf_{1/w}} ||upsilon||_{Co l^1_{w1}} ||phi||_{Co l^1_{w2}}`.
#[derive(Debug, Clone)]
pub struct BilinearForm {
    kernel: OperatorMatrix,
    frame1: FrameSpec,
    frame2: FrameSpec,
    w1: Weight,
    w2: Weight,
    kernel_norm: f64,
}

/// One evaluation of a [`BilinearForm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormValue {
    pub value: Complex64,
    pub bound: f64,
}

impl FormValue {
    pub fn within_bound(&self, rel_tol: f64) -> bool {
        self.value.norm() <= self.bound * (1.0 + rel_tol) + f64::MIN_POSITIVE
    }
}

impl BilinearForm {
    pub fn kernel(&self) -> &OperatorMatrix {
        &self.kernel
    }

    /// `||V_Psi K||_{l^inf_{1/w}}` with `w = w1 (x) w2`.
    pub fn kernel_norm(&self) -> f64 {
        self.kernel_norm
    }

    pub fn eval(&self, upsilon: &Signal, phi: &Signal) -> Result<FormValue> {
        let value = self.kernel.apply(upsilon)?.inner(phi)?;
        let n1 = weighted_lp_norm(&analyze(upsilon, &self.frame1)?, Exponent::ONE, &self.w1)?;
        let n2 = weighted_lp_norm(&analyze(phi, &self.frame2)?, Exponent::ONE, &self.w2)?;
        Ok(FormValue {
            value,
            bound: self.kernel_norm * n1 * n2,
        })
    }
}

pub fn operator_from_kernel(
    k: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
    w1: &Weight,
    w2: &Weight,
) -> Result<BilinearForm> {
    frame1.require_parseval()?;
    frame2.require_parseval()?;
    let vk = tensor_analysis(k, frame1, frame2)?;
    let kernel_norm = product_weighted_sup(&vk, w1, w2)?;
    Ok(BilinearForm {
        kernel: k.clone(),
        frame1: frame1.clone(),
        frame2: frame2.clone(),
        w1: *w1,
        w2: *w2,
        kernel_norm,
    })
}

/// Kernel recovered from an operator, with the norm equivalence data.
#[derive(Debug, Clone)]
pub struct KernelRecovery {
    pub kernel: OperatorMatrix,
    pub galerkin: CoeffField2D,
    /// `||V_Psi K||_{l^inf_{1/w}}`.
    pub kernel_norm: f64,
    /// Norm of the lifted operator `l^1_{w1} -> l^inf_{1/w2}`, by the
    /// column extreme-point oracle.
    pub lifted_norm: f64,
    /// `lifted_norm / kernel_norm`, absent when the kernel vanishes.
    pub equivalence_ratio: Option<f64>,
    /// `max_lambda ||A pi1(lambda) psi1||_{Co l^inf_{1/w2}} / ||pi1(lambda) psi1||_{Co l^1_{w1}}`,
    /// a lower bound for the `Co l^1_{w1} -> Co l^inf_{1/w2}` norm of `A`.
    pub atom_lower_bound: f64,
    /// Analysis constant of frame 1 under `w1`; `kernel_norm <= constant * atom_lower_bound`.
    pub window_constant: f64,
}

/// `K = V_Psi^* k_A` for Parseval frames.
pub fn kernel_from_operator(
    a: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
    w1: &Weight,
    w2: &Weight,
) -> Result<KernelRecovery> {
    frame1.require_parseval()?;
    frame2.require_parseval()?;
    let galerkin = galerkin_kernel(a, frame1, frame2)?;
    let kernel = tensor_synthesis(&galerkin, frame1, frame2)?;
    let kernel_norm = product_weighted_sup(&galerkin, w1, w2)?;
    let lifted_norm = crate::schur::opnorm_oracle_1_to_p(
        &galerkin,
        Exponent::Infinite,
        w1,
        &w2.inverse(),
    )?;
    let equivalence_ratio = (kernel_norm > 0.0).then(|| lifted_norm / kernel_norm);

    let w2inv = w2.inverse();
    let mut atom_lower_bound: f64 = 0.0;
    for i in 0..frame1.len() {
        let atom = frame1.atom(i);
        let denom = weighted_lp_norm(&analyze(&atom, frame1)?, Exponent::ONE, w1)?;
        if denom > 0.0 {
            let image = analyze(&a.apply(&atom)?, frame2)?;
            let num = weighted_lp_norm(&image, Exponent::Infinite, &w2inv)?;
            atom_lower_bound = atom_lower_bound.max(num / denom);
        }
    }
    let window_constant = window_constants(frame1, w1)?.analysis;
    Ok(KernelRecovery {
        kernel,
        galerkin,
        kernel_norm,
        lifted_norm,
        equivalence_ratio,
        atom_lower_bound,
        window_constant,
    })
}

/// A frame-atom pair `(lambda1, lambda2)` on which the forms of two kernels
/// differ by more than `tol`, in lattice order.
pub fn distinguishing_pair(
    k: &OperatorMatrix,
    other: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
    tol: f64,
) -> Result<Option<(usize, usize)>> {
    let a = tensor_analysis(k, frame1, frame2)?;
    let b = tensor_analysis(other, frame1, frame2)?;
    for i1 in 0..frame1.len() {
        for i2 in 0..frame2.len() {
            if (a.get(i1, i2) - b.get(i1, i2)).norm() > tol {
                return Ok(Some((i1, i2)));
            }
        }
    }
    Ok(None)
}

use serde::{Deserialize, Serialize};

use super::constants::window_constants;
use crate::error::Result;
use crate::norms::{product_weighted_l1, weighted_lp_norm, Exponent};
use crate::operator::OperatorMatrix;
use crate::repr::{Signal, Weight};
use crate::transforms::{analyze, tensor_analysis, FrameSpec};

/// Two-sided estimate of the projective tensor norm of a kernel.
///
/// `lower` is `||V_Psi K||_{l^1_{w1 (x) w2}}`. `upper` is the cost
/// `sum |c_i| ||u_i||_{Co l^1_{w2}} ||v_i||_{Co l^1_{w1}}` of the cheaper of two
/// explicit decompositions `K = sum c_i u_i (x) v_i`: the lattice expansion
/// `K = sum V_Psi K(l1, l2) pi2(l2) psi2 (x) pi1(l1) psi1` and the singular
/// value decomposition. Always `lower <= upper <= upper_constant * lower`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectiveBound {
    pub lower: f64,
    pub upper: f64,
    pub lattice_cost: f64,
    pub svd_cost: f64,
    /// Product of the analysis constants of the two frames.
    pub upper_constant: f64,
}

impl ProjectiveBound {
    pub fn holds(&self, rel_tol: f64) -> bool {
        let slack = 1.0 + rel_tol;
        self.lower <= self.upper * slack && self.upper <= self.upper_constant * self.lower * slack
    }
}

fn co_l1(u: &Signal, frame: &FrameSpec, w: &Weight) -> Result<f64> {
    weighted_lp_norm(&analyze(u, frame)?, Exponent::ONE, w)
}

pub fn projective_tensor_bound(
    k: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
    w1: &Weight,
    w2: &Weight,
) -> Result<ProjectiveBound> {
    frame1.require_parseval()?;
    frame2.require_parseval()?;
    let vk = tensor_analysis(k, frame1, frame2)?;
    let lower = product_weighted_l1(&vk, w1, w2)?;

    let a1: Vec<f64> = (0..frame1.len())
        .map(|i| co_l1(&frame1.atom(i), frame1, w1))
        .collect::<Result<_>>()?;
    let a2: Vec<f64> = (0..frame2.len())
        .map(|i| co_l1(&frame2.atom(i), frame2, w2))
        .collect::<Result<_>>()?;
    let mut lattice_cost = 0.0;
    for (i1, x1) in a1.iter().enumerate() {
        for (i2, x2) in a2.iter().enumerate() {
            lattice_cost += vk.get(i1, i2).norm() * x1 * x2;
        }
    }

    let svd = k.entries().clone().svd(true, true);
    let (u, v_t) = (svd.u.expect("u requested"), svd.v_t.expect("v_t requested"));
    let mut svd_cost = 0.0;
    for (i, sigma) in svd.singular_values.iter().enumerate() {
        if *sigma == 0.0 {
            continue;
        }
        let left = Signal::from_dvector(&u.column(i).into_owned())?;
        let right = Signal::from_dvector(&v_t.row(i).adjoint())?;
        svd_cost += sigma * co_l1(&left, frame2, w2)? * co_l1(&right, frame1, w1)?;
    }

    let c1 = window_constants(frame1, w1)?.analysis;
    let c2 = window_constants(frame2, w2)?.analysis;
    Ok(ProjectiveBound {
        lower,
        upper: lattice_cost.min(svd_cost),
        lattice_cost,
        svd_cost,
        upper_constant: c1 * c2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::coorbit_norm;
    use crate::transforms::periodized_gaussian;

    fn gabor(n: usize) -> FrameSpec {
        FrameSpec::parseval_gabor(periodized_gaussian(n).unwrap()).unwrap()
    }

    #[test]
    fn zero_kernel() {
        let f = gabor(4);
        let b = projective_tensor_bound(&OperatorMatrix::zeros(4, 4), &f, &f, &Weight::Constant, &Weight::Constant).unwrap();
        assert_eq!((b.lower, b.upper), (0.0, 0.0));
    }

    #[test]
    fn rank_one_single_term_dominates() {
        let f1 = gabor(8);
        let f2 = FrameSpec::haar(8).unwrap();
        let (w1, w2) = (Weight::PolynomialTf(1.0), Weight::Dyadic(0.5));
        let g1 = crate::random::signal(8, 1);
        let g2 = crate::random::signal(8, 2);
        let k = OperatorMatrix::rank_one(&g2, &g1);
        let b = projective_tensor_bound(&k, &f1, &f2, &w1, &w2).unwrap();
        let product = coorbit_norm(&g1, &f1, Exponent::ONE, &w1).unwrap() * coorbit_norm(&g2, &f2, Exponent::ONE, &w2).unwrap();
        assert!(b.upper <= product * (1.0 + 1e-12));
        assert!((b.lower - product).abs() <= 1e-12 * product);
        assert!(b.holds(1e-12));
    }

    #[test]
    fn random_kernels_sandwich() {
        let f = gabor(4);
        let w = Weight::PolynomialTf(0.5);
        for seed in 0..5 {
            let b = projective_tensor_bound(&crate::random::operator(4, 4, seed), &f, &f, &w, &w).unwrap();
            assert!(b.holds(1e-12), "{b:?}");
        }
    }
}

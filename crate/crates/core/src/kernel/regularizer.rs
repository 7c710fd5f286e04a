use super::galerkin::galerkin_kernel;
use crate::error::Result;
use crate::norms::{product_weighted_l1, weighted_lp_norm, Exponent};
use crate::operator::OperatorMatrix;
use crate::repr::{Signal, Weight};
use crate::schur::{BoundednessReport, CertDirection, Sampling, REPORT_TOLERANCE};
use crate::transforms::{analyze, FrameSpec};

/// Checks `||A f||_{Co l^1_{w2}} <= ||V_Psi K||_{l^1_{w1 (x) w2}} ||f||_{Co l^inf_{1/w1}}`
/// on every atom of the first frame and on `samples` seeded random signals.
pub fn regularizer_check(
    k: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
    w1: &Weight,
    w2: &Weight,
    samples: usize,
    seed: u64,
) -> Result<BoundednessReport> {
    frame1.require_parseval()?;
    frame2.require_parseval()?;
    let vk = galerkin_kernel(k, frame1, frame2)?;
    let bound = product_weighted_l1(&vk, w1, w2)?;
    let w1inv = w1.inverse();

    let mut inputs: Vec<Signal> = (0..frame1.len()).map(|i| frame1.atom(i)).collect();
    let mut rng = crate::random::rng(seed);
    inputs.extend((0..samples).map(|_| crate::random::signal_from(&mut rng, frame1.dim())));

    let mut max_ratio: f64 = 0.0;
    let mut violations = 0;
    for f in &inputs {
        let denom = weighted_lp_norm(&analyze(f, frame1)?, Exponent::Infinite, &w1inv)?;
        if denom == 0.0 {
            continue;
        }
        let num = weighted_lp_norm(&analyze(&k.apply(f)?, frame2)?, Exponent::ONE, w2)?;
        let ratio = num / denom;
        if ratio > bound * (1.0 + REPORT_TOLERANCE) {
            violations += 1;
        }
        max_ratio = max_ratio.max(ratio);
    }

    let mut report = BoundednessReport::new(
        CertDirection::Regularizer,
        Exponent::ONE,
        *w1,
        *w2,
        frame1,
        frame2,
        bound,
        max_ratio,
    );
    report.sampling = Some(Sampling {
        samples: inputs.len(),
        violations,
        max_ratio,
    });
    Ok(report)
}

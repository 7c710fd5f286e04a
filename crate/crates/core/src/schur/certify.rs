use serde::{Deserialize, Serialize};

use super::estimate::lifted_lp_norm;
use super::oracle::{hoelder_extremizer, opnorm_oracle_1_to_p, opnorm_oracle_p_to_inf};
use super::report::{BoundednessReport, EndpointCriteria, Sandwich, SweepEntry, REPORT_TOLERANCE};
use crate::error::Result;
use crate::kernel::{gram, regularizer_check, window_constants_of};
use crate::norms::{discrete_kernel_criterion, weighted_lp_norm, Exponent, KernelDirection};
use crate::operator::OperatorMatrix;
use crate::repr::Weight;
use crate::transforms::{analyze, synthesize, tensor_analysis, CoeffField1D, CoeffField2D, FrameSpec};

/// Number of random inputs sampled by the regularizer direction.
pub const REGULARIZER_SAMPLES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertDirection {
    /// `Co l^1_{m1} -> Co l^p_{m2}`.
    OneToP,
    /// `Co l^p_{m1} -> Co l^inf_{m2}`.
    PToInf,
    /// `Co l^p_{m1} -> Co l^p_{m2}` for every `p`.
    AllP,
    /// `Co l^inf_{1/m1} -> Co l^1_{m2}`.
    Regularizer,
}

impl std::str::FromStr for CertDirection {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "one-to-p" | "oneToP" => Ok(CertDirection::OneToP),
            "p-to-inf" | "pToInf" => Ok(CertDirection::PToInf),
            "all-p" | "allP" => Ok(CertDirection::AllP),
            "regularizer" => Ok(CertDirection::Regularizer),
            other => Err(crate::Error::Config(format!("unknown direction '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertificationSpec {
    pub direction: CertDirection,
    pub p: Exponent,
    pub m1: Weight,
    pub m2: Weight,
    pub frame1: FrameSpec,
    pub frame2: FrameSpec,
    /// Ambient bound on the weight parameters; exceeding it only warns.
    pub sigma: Option<f64>,
    /// Seed for the sampled directions.
    pub seed: u64,
}

impl CertificationSpec {
    pub fn new(direction: CertDirection, p: Exponent, m1: Weight, m2: Weight, frame1: FrameSpec, frame2: FrameSpec) -> Self {
        CertificationSpec {
            direction,
            p,
            m1,
            m2,
            frame1,
            frame2,
            sigma: None,
            seed: 0,
        }
    }

    pub fn with_sigma(mut self, sigma: f64) -> Self {
        self.sigma = Some(sigma);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn warnings(&self) -> Vec<String> {
        let Some(sigma) = self.sigma else {
            return Vec::new();
        };
        [("m1", self.m1), ("m2", self.m2)]
            .into_iter()
            .filter(|(_, w)| w.parameter().abs() > sigma)
            .map(|(name, w)| format!("|s| = {} of {name} exceeds sigma = {sigma}", w.parameter().abs()))
            .collect()
    }
}

/// Boundedness certificate of `A` (equivalently of its kernel) for the
/// direction in `spec`.
pub fn certify(a: &OperatorMatrix, spec: &CertificationSpec) -> Result<BoundednessReport> {
    let (f1, f2) = (&spec.frame1, &spec.frame2);
    f1.require_parseval()?;
    f2.require_parseval()?;
    let mut report = match spec.direction {
        CertDirection::OneToP => one_to_p(a, spec)?,
        CertDirection::PToInf => p_to_inf(a, spec)?,
        CertDirection::AllP => {
            let mut r = certify_all_p(a, &spec.m1, &spec.m2, f1, f2)?;
            r.p = spec.p;
            r
        }
        CertDirection::Regularizer => {
            regularizer_check(a, f1, f2, &spec.m1, &spec.m2, REGULARIZER_SAMPLES, spec.seed)?
        }
    };
    report.warnings = spec.warnings();
    Ok(report)
}

fn one_to_p(a: &OperatorMatrix, spec: &CertificationSpec) -> Result<BoundednessReport> {
    let (f1, f2, p) = (&spec.frame1, &spec.frame2, spec.p);
    let vk = tensor_analysis(a, f1, f2)?;
    let criterion = discrete_kernel_criterion(&vk, p, &spec.m1, &spec.m2, KernelDirection::OneToP)?;
    let oracle = opnorm_oracle_1_to_p(&vk, p, &spec.m1, &spec.m2)?;

    // test vectors: the atoms of the first frame
    let mut lower: f64 = 0.0;
    for i in 0..f1.len() {
        let atom = f1.atom(i);
        let denom = weighted_lp_norm(&analyze(&atom, f1)?, Exponent::ONE, &spec.m1)?;
        if denom > 0.0 {
            let num = weighted_lp_norm(&analyze(&a.apply(&atom)?, f2)?, p, &spec.m2)?;
            lower = lower.max(num / denom);
        }
    }
    let m1 = spec.m1.values_on(&f1.lattice())?;
    let constant = window_constants_of(&gram(f1), &m1)?.analysis;

    let mut report = BoundednessReport::new(spec.direction, p, spec.m1, spec.m2, f1, f2, criterion, oracle);
    report.sandwich = Some(Sandwich::new(lower, constant, oracle, criterion));
    Ok(report)
}

fn p_to_inf(a: &OperatorMatrix, spec: &CertificationSpec) -> Result<BoundednessReport> {
    let (f1, f2, p) = (&spec.frame1, &spec.frame2, spec.p);
    let vk = tensor_analysis(a, f1, f2)?;
    let criterion = discrete_kernel_criterion(&vk, p, &spec.m1, &spec.m2, KernelDirection::PToInf)?;
    let oracle = opnorm_oracle_p_to_inf(&vk, p, &spec.m1, &spec.m2)?;
    let m1 = spec.m1.values_on(&f1.lattice())?;

    // test vectors: synthesized Hoelder extremizers of each output coordinate
    let mut lower: f64 = 0.0;
    for y in 0..f2.len() {
        let column = vk.values().column(y);
        let Some(h) = hoelder_extremizer(column.iter().copied(), &m1, p) else {
            continue;
        };
        let f = synthesize(&CoeffField1D::new(h, f1.lattice())?, f1)?;
        let denom = weighted_lp_norm(&analyze(&f, f1)?, p, &spec.m1)?;
        if denom > 0.0 {
            let num = weighted_lp_norm(&analyze(&a.apply(&f)?, f2)?, Exponent::Infinite, &spec.m2)?;
            lower = lower.max(num / denom);
        }
    }
    let constant = projection_constant(f1, &m1, p)?;

    let mut report = BoundednessReport::new(spec.direction, p, spec.m1, spec.m2, f1, f2, criterion, oracle);
    report.sandwich = Some(Sandwich::new(lower, constant, oracle, criterion));
    Ok(report)
}

/// Schur-test bound `a^{1/p} r^{1 - 1/p}` on the reproducing projection in
/// `l^p_m`, from its `l^1_m` and `l^inf_m` norms.
fn projection_constant(frame: &FrameSpec, m: &[f64], p: Exponent) -> Result<f64> {
    let c = window_constants_of(&gram(frame), m)?;
    Ok(match p {
        Exponent::Infinite => c.row,
        Exponent::Finite(p) => c.analysis.powf(1.0 / p) * c.row.powf(1.0 - 1.0 / p),
    })
}

/// Both endpoint criteria of `V_Psi K` and the lifted `l^p_{m1} -> l^p_{m2}`
/// norm at `p = 1, 2, 4, inf`, each checked against their maximum.
pub fn certify_all_p(
    k: &OperatorMatrix,
    m1: &Weight,
    m2: &Weight,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
) -> Result<BoundednessReport> {
    frame1.require_parseval()?;
    frame2.require_parseval()?;
    let vk = tensor_analysis(k, frame1, frame2)?;
    let first = discrete_kernel_criterion(&vk, Exponent::ONE, m1, m2, KernelDirection::OneToP)?;
    let second = discrete_kernel_criterion(&vk, Exponent::Infinite, m1, m2, KernelDirection::PToInf)?;
    let bound = first.max(second);
    let sweep = p_sweep(&vk, m1, m2, bound)?;
    let oracle = sweep.iter().map(|e| e.lifted_norm).fold(0.0, f64::max);

    let mut report = BoundednessReport::new(CertDirection::AllP, Exponent::ONE, *m1, *m2, frame1, frame2, bound, oracle);
    report.endpoint_criteria = Some(EndpointCriteria {
        sup_over_first: first,
        sup_over_second: second,
    });
    report.p_sweep = sweep;
    Ok(report)
}

fn p_sweep(vk: &CoeffField2D, m1: &Weight, m2: &Weight, bound: f64) -> Result<Vec<SweepEntry>> {
    [Exponent::ONE, Exponent::TWO, Exponent::Finite(4.0), Exponent::Infinite]
        .into_iter()
        .map(|p| {
            let (value, method) = lifted_lp_norm(vk, p, m1, m2)?;
            Ok(SweepEntry {
                p,
                lifted_norm: value,
                method: method.to_string(),
                within_bound: value <= bound * (1.0 + REPORT_TOLERANCE),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::periodized_gaussian;

    fn gabor(n: usize) -> FrameSpec {
        FrameSpec::parseval_gabor(periodized_gaussian(n).unwrap()).unwrap()
    }

    #[test]
    fn identity_one_to_p() {
        let f = gabor(8);
        let m = Weight::PolynomialTf(1.0);
        let spec = CertificationSpec::new(CertDirection::OneToP, Exponent::ONE, m, m, f.clone(), f);
        let r = certify(&OperatorMatrix::identity(8), &spec).unwrap();
        let c = r.sandwich.unwrap().window_constant;
        let ratio = r.equivalence_ratio.unwrap();
        assert!(ratio >= 1.0 / c && ratio <= c);
        assert!(r.consistent(), "{r:?}");
    }

    #[test]
    fn rank_one_one_to_p_factors() {
        let f1 = gabor(8);
        let f2 = FrameSpec::haar(8).unwrap();
        let (m1, m2) = (Weight::PolynomialTf(0.5), Weight::Dyadic(1.0));
        let (phi, upsilon) = (crate::random::signal(8, 1), crate::random::signal(8, 2));
        let spec = CertificationSpec::new(CertDirection::OneToP, Exponent::TWO, m1, m2, f1.clone(), f2.clone());
        let r = certify(&OperatorMatrix::rank_one(&phi, &upsilon), &spec).unwrap();
        let v1 = analyze(&upsilon, &f1).unwrap();
        let w1 = m1.values_on(&f1.lattice()).unwrap();
        let sup = v1.values().iter().zip(&w1).map(|(z, w)| z.norm() / w).fold(0.0, f64::max);
        let expected = sup * weighted_lp_norm(&analyze(&phi, &f2).unwrap(), Exponent::TWO, &m2).unwrap();
        assert!((r.criterion_value - expected).abs() < 1e-12 * expected);
        assert!(r.consistent());
    }

    #[test]
    fn zero_operator() {
        let f = gabor(4);
        for direction in [CertDirection::OneToP, CertDirection::PToInf, CertDirection::AllP, CertDirection::Regularizer] {
            let spec = CertificationSpec::new(direction, Exponent::TWO, Weight::Constant, Weight::Constant, f.clone(), f.clone());
            let r = certify(&OperatorMatrix::zeros(4, 4), &spec).unwrap();
            assert_eq!((r.criterion_value, r.oracle_norm), (0.0, 0.0));
            assert_eq!(r.equivalence_ratio, None);
        }
    }

    #[test]
    fn random_p_to_inf_sandwich() {
        let f1 = FrameSpec::haar(8).unwrap();
        let f2 = gabor(4);
        for (seed, p) in [(0, Exponent::ONE), (1, Exponent::TWO), (2, Exponent::Finite(3.0)), (3, Exponent::Infinite)] {
            let spec = CertificationSpec::new(CertDirection::PToInf, p, Weight::Dyadic(-0.5), Weight::PolynomialTf(1.0), f1.clone(), f2.clone());
            let r = certify(&crate::random::operator(4, 8, seed), &spec).unwrap();
            assert!(r.consistent(), "{p}: {r:?}");
        }
    }

    #[test]
    fn all_p_identity_and_random() {
        let f = gabor(4);
        let r = certify_all_p(&OperatorMatrix::identity(4), &Weight::Constant, &Weight::Constant, &f, &f).unwrap();
        let e = r.endpoint_criteria.unwrap();
        let g = gram(&f);
        let row_mass = (0..16).map(|i| g.row(i).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
        assert!((e.sup_over_first - row_mass).abs() < 1e-12 && (e.sup_over_second - row_mass).abs() < 1e-12);
        assert!(r.consistent());
        let m = Weight::PolynomialTf(1.0);
        for seed in 0..3 {
            let r = certify_all_p(&crate::random::operator(4, 4, seed), &m, &m, &f, &f).unwrap();
            assert!(r.consistent(), "{r:?}");
            assert_eq!(r.p_sweep.len(), 4);
        }
    }

    #[test]
    fn sigma_guard_warns() {
        let f = gabor(4);
        let spec = CertificationSpec::new(CertDirection::OneToP, Exponent::ONE, Weight::PolynomialTf(3.0), Weight::Constant, f.clone(), f)
            .with_sigma(2.0);
        let r = certify(&OperatorMatrix::identity(4), &spec).unwrap();
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn enlarging_m2_does_not_decrease() {
        let f = gabor(4);
        let a = crate::random::operator(4, 4, 9);
        for direction in [CertDirection::OneToP, CertDirection::PToInf, CertDirection::AllP] {
            let small = certify(&a, &CertificationSpec::new(direction, Exponent::TWO, Weight::Constant, Weight::PolynomialTf(0.5), f.clone(), f.clone())).unwrap();
            let large = certify(&a, &CertificationSpec::new(direction, Exponent::TWO, Weight::Constant, Weight::PolynomialTf(1.5), f.clone(), f.clone())).unwrap();
            assert!(large.criterion_value >= small.criterion_value);
            assert!(large.oracle_norm >= small.oracle_norm * (1.0 - 1e-12));
        }
    }
}

use serde::{Deserialize, Serialize};

use super::certify::CertDirection;
use crate::norms::Exponent;
use crate::repr::Weight;
use crate::transforms::FrameSpec;

/// Relative slack used for every inequality checked in a report.
pub const REPORT_TOLERANCE: f64 = 1e-10;

pub const FINITE_SCALE_NOTE: &str = "finite-dimensional setting: every operator is bounded, \
so the certificate is quantitative (criterion value, oracle norm and the window-constant sandwich)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    BoundedWithEstimate,
}

/// Coorbit-level comparison: `lower <= ||A|| <= oracle` and
/// `criterion <= window_constant * lower`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sandwich {
    /// Largest `||A f|| / ||f||` over the tested vectors `f`.
    pub coorbit_lower_bound: f64,
    pub window_constant: f64,
    pub lower_within_oracle: bool,
    pub criterion_within_constant: bool,
}

impl Sandwich {
    pub fn new(lower: f64, constant: f64, oracle: f64, criterion: f64) -> Self {
        let slack = 1.0 + REPORT_TOLERANCE;
        Sandwich {
            coorbit_lower_bound: lower,
            window_constant: constant,
            lower_within_oracle: lower <= oracle * slack,
            criterion_within_constant: criterion <= constant * lower * slack,
        }
    }

    pub fn holds(&self) -> bool {
        self.lower_within_oracle && self.criterion_within_constant
    }
}

/// Both endpoint mixed norms: `sup_l1 sum_l2` and `sup_l2 sum_l1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointCriteria {
    pub sup_over_first: f64,
    pub sup_over_second: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub p: Exponent,
    pub lifted_norm: f64,
    pub method: String,
    pub within_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sampling {
    pub samples: usize,
    pub violations: usize,
    pub max_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundednessReport {
    pub direction: CertDirection,
    pub p: Exponent,
    pub m1: Weight,
    pub m2: Weight,
    pub representation1: String,
    pub representation2: String,
    pub criterion_value: f64,
    pub oracle_norm: f64,
    pub verdict: Verdict,
    /// `oracle_norm / criterion_value`, absent when the criterion vanishes.
    pub equivalence_ratio: Option<f64>,
    pub endpoint_criteria: Option<EndpointCriteria>,
    pub sandwich: Option<Sandwich>,
    pub p_sweep: Vec<SweepEntry>,
    pub sampling: Option<Sampling>,
    pub tolerance_used: f64,
    pub warnings: Vec<String>,
    pub note: String,
}

impl BoundednessReport {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new(
        direction: CertDirection,
        p: Exponent,
        m1: Weight,
        m2: Weight,
        frame1: &FrameSpec,
        frame2: &FrameSpec,
        criterion_value: f64,
        oracle_norm: f64,
    ) -> Self {
        BoundednessReport {
            direction,
            p,
            m1,
            m2,
            representation1: frame1.representation_name().to_string(),
            representation2: frame2.representation_name().to_string(),
            criterion_value,
            oracle_norm,
            verdict: Verdict::BoundedWithEstimate,
            equivalence_ratio: (criterion_value > 0.0).then(|| oracle_norm / criterion_value),
            endpoint_criteria: None,
            sandwich: None,
            p_sweep: Vec::new(),
            sampling: None,
            tolerance_used: REPORT_TOLERANCE,
            warnings: Vec::new(),
            note: FINITE_SCALE_NOTE.to_string(),
        }
    }

    /// True when every inequality recorded in the report holds.
    pub fn consistent(&self) -> bool {
        let slack = 1.0 + self.tolerance_used;
        let sweep = self.p_sweep.iter().all(|e| e.within_bound);
        let sandwich = self.sandwich.is_none_or(|s| s.holds());
        let sampling = self.sampling.is_none_or(|s| s.violations == 0);
        let oracle = match self.direction {
            CertDirection::OneToP | CertDirection::PToInf => {
                (self.oracle_norm - self.criterion_value).abs() <= self.tolerance_used * self.criterion_value
            }
            CertDirection::AllP | CertDirection::Regularizer => self.oracle_norm <= self.criterion_value * slack,
        };
        sweep && sandwich && sampling && oracle
    }
}

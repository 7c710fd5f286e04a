//! Schur-test norms, independent operator-norm oracles and boundedness reports.

mod certify;
mod estimate;
mod oracle;
mod report;

pub use certify::{certify, certify_all_p, CertDirection, CertificationSpec, REGULARIZER_SAMPLES};
pub use estimate::{lifted_lp_norm, lp_norm_estimate, spectral_norm, POWER_ITERATIONS, POWER_SEED, POWER_TOL};
pub use oracle::{
    meyer_criterion, opnorm_oracle_1_to_p, opnorm_oracle_p_to_inf, schur_norm_1_to_p,
    schur_norm_p_to_inf,
};
pub use report::{
    BoundednessReport, EndpointCriteria, Sampling, Sandwich, SweepEntry, Verdict, FINITE_SCALE_NOTE,
    REPORT_TOLERANCE,
};

//! Weighted coorbit spaces under their usual names.
//!
//! A modulation space `M^p_{m_s}` is the coorbit of `l^p` with the polynomial
//! weight `m_s` under a Gabor frame. For the dyadic wavelet frame
//! `Co l^p_{nu_t}` is the homogeneous Besov space `B^{t - 1/2 + 1/p}_{p,p}`,
//! so `B^r_{p,p}` uses `t = r + 1/2 - 1/p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::norms::Exponent;
use crate::repr::Weight;
use crate::schur::{CertDirection, CertificationSpec};
use crate::transforms::FrameSpec;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "space", rename_all = "snake_case")]
pub enum SpaceSpec {
    /// `M^p_{m_s}`.
    Modulation { p: Exponent, s: f64 },
    /// Homogeneous `B^r_{p,p}`.
    Besov { p: Exponent, r: f64 },
}

impl SpaceSpec {
    pub fn exponent(&self) -> Exponent {
        match *self {
            SpaceSpec::Modulation { p, .. } | SpaceSpec::Besov { p, .. } => p,
        }
    }

    pub fn weight(&self) -> Weight {
        match *self {
            SpaceSpec::Modulation { s, .. } => Weight::PolynomialTf(s),
            SpaceSpec::Besov { p, r } => {
                let inv_p = match p {
                    Exponent::Infinite => 0.0,
                    Exponent::Finite(p) => 1.0 / p,
                };
                Weight::Dyadic(r + 0.5 - inv_p)
            }
        }
    }

    pub fn representation_name(&self) -> &'static str {
        match self {
            SpaceSpec::Modulation { .. } => "weyl-heisenberg",
            SpaceSpec::Besov { .. } => "affine",
        }
    }

    /// Checks that `frame` belongs to the representation of this space.
    pub fn check_frame(&self, frame: &FrameSpec) -> Result<()> {
        if frame.representation_name() == self.representation_name() {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "space needs a {} frame, got {}",
                self.representation_name(),
                frame.representation_name()
            )))
        }
    }
}

/// Certification setup for operators `domain -> codomain`.
///
/// `l^1` domains give the `one-to-p` direction, `l^inf` codomains the
/// `p-to-inf` direction, and equal exponents the all-`p` Schur bound.
pub fn operator_class(
    domain: &SpaceSpec,
    codomain: &SpaceSpec,
    frame1: FrameSpec,
    frame2: FrameSpec,
) -> Result<CertificationSpec> {
    domain.check_frame(&frame1)?;
    codomain.check_frame(&frame2)?;
    let (p1, p2) = (domain.exponent(), codomain.exponent());
    let (direction, p) = if p1 == Exponent::ONE {
        (CertDirection::OneToP, p2)
    } else if p2 == Exponent::Infinite {
        (CertDirection::PToInf, p1)
    } else if p1 == p2 {
        (CertDirection::AllP, p1)
    } else {
        return Err(Error::Config(format!("no kernel criterion for l^{p1} -> l^{p2}")));
    };
    Ok(CertificationSpec::new(direction, p, domain.weight(), codomain.weight(), frame1, frame2))
}

//! Weighted sequence norms on lattices, the two mixed norms with one
//! supremum, coorbit norms, and the discrete kernel criteria.
//!
//! All lattices carry counting measure. The weight on a product lattice is
//! always formed here from the two marginals as `m1^{-1} (x) m2`, i.e.
//! `m2(lambda2) / m1(lambda1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::repr::{Signal, Weight};
use crate::transforms::{analyze, CoeffField1D, CoeffField2D, FrameSpec};

/// An exponent `1 <= p <= inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinite,
}

impl Exponent {
    pub const ONE: Exponent = Exponent::Finite(1.0);
    pub const TWO: Exponent = Exponent::Finite(2.0);

    pub fn new(p: f64) -> Result<Self> {
        if p == f64::INFINITY {
            Ok(Exponent::Infinite)
        } else if p.is_finite() && p >= 1.0 {
            Ok(Exponent::Finite(p))
        } else {
            Err(Error::InvalidExponent(p))
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Exponent::Finite(p) => p,
            Exponent::Infinite => f64::INFINITY,
        }
    }

    /// `q` with `1/p + 1/q = 1`.
    pub fn conjugate(&self) -> Exponent {
        match *self {
            Exponent::Infinite => Exponent::ONE,
            Exponent::Finite(p) if p == 1.0 => Exponent::Infinite,
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }

    /// `(sum x_i^p)^{1/p}` of non-negative terms, or their maximum for `p = inf`.
    pub fn norm_of<I: IntoIterator<Item = f64>>(&self, terms: I) -> f64 {
        match *self {
            Exponent::Infinite => terms.into_iter().fold(0.0, f64::max),
            Exponent::Finite(p) if p == 1.0 => terms.into_iter().sum(),
            Exponent::Finite(p) => terms.into_iter().map(|x| x.powf(p)).sum::<f64>().powf(1.0 / p),
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "Inf" | "INF" => Ok(Exponent::Infinite),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|_| Error::Config(format!("cannot parse exponent '{other}'")))?;
                Exponent::new(p)
            }
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => serializer.serialize_f64(*p),
            Exponent::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(p) => Exponent::new(p).map_err(serde::de::Error::custom),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Which variable carries the supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MixedVariant {
    /// `L^{p,inf}`: sup over the second variable of the p-norm over the first.
    SupOverSecond,
    /// Calligraphic `L^{p,inf}`: sup over the first variable of the p-norm over the second.
    SupOverFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixedNormSpec {
    pub p: Exponent,
    pub variant: MixedVariant,
    pub m1: Weight,
    pub m2: Weight,
}

/// Orientation of a Schur-type kernel criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelDirection {
    /// `Co l^1_{m1} -> Co l^p_{m2}`.
    OneToP,
    /// `Co l^p_{m1} -> Co l^inf_{m2}`.
    PToInf,
}

/// `(sum |F|^p m^p)^{1/p}`, or `sup |F| m` for `p = inf`.
pub fn weighted_lp_norm(field: &CoeffField1D, p: Exponent, m: &Weight) -> Result<f64> {
    let weights = m.values_on(field.lattice())?;
    Ok(p.norm_of(
        field
            .values()
            .iter()
            .zip(&weights)
            .map(|(z, w)| z.norm() * w),
    ))
}

pub fn mixed_norm(field: &CoeffField2D, spec: &MixedNormSpec) -> Result<f64> {
    let m1 = spec.m1.values_on(field.lattice1())?;
    let m2 = spec.m2.values_on(field.lattice2())?;
    let values = field.values();
    let weighted = |i1: usize, i2: usize| values[(i1, i2)].norm() * m2[i2] / m1[i1];
    let sup = match spec.variant {
        MixedVariant::SupOverFirst => (0..m1.len())
            .map(|i1| spec.p.norm_of((0..m2.len()).map(|i2| weighted(i1, i2))))
            .fold(0.0, f64::max),
        MixedVariant::SupOverSecond => (0..m2.len())
            .map(|i2| spec.p.norm_of((0..m1.len()).map(|i1| weighted(i1, i2))))
            .fold(0.0, f64::max),
    };
    Ok(sup)
}

/// `||V_psi f||_{l^p_m}` for a Parseval frame.
pub fn coorbit_norm(f: &Signal, frame: &FrameSpec, p: Exponent, m: &Weight) -> Result<f64> {
    frame.require_parseval()?;
    weighted_lp_norm(&analyze(f, frame)?, p, m)
}

/// Discrete kernel criterion of a tensor transform `V_Psi K`.
///
/// `OneToP`: sup over `lambda1` of the weighted p-sum over `lambda2`.
/// `PToInf`: sup over `lambda2` of the weighted q-sum over `lambda1`, `1/p + 1/q = 1`.
pub fn discrete_kernel_criterion(
    vk: &CoeffField2D,
    p: Exponent,
    m1: &Weight,
    m2: &Weight,
    direction: KernelDirection,
) -> Result<f64> {
    let spec = match direction {
        KernelDirection::OneToP => MixedNormSpec {
            p,
            variant: MixedVariant::SupOverFirst,
            m1: *m1,
            m2: *m2,
        },
        KernelDirection::PToInf => MixedNormSpec {
            p: p.conjugate(),
            variant: MixedVariant::SupOverSecond,
            m1: *m1,
            m2: *m2,
        },
    };
    mixed_norm(vk, &spec)
}

/// `sum |F(l1, l2)| w1(l1) w2(l2)`, the `l^1` norm with the product weight `w1 (x) w2`.
pub fn product_weighted_l1(field: &CoeffField2D, w1: &Weight, w2: &Weight) -> Result<f64> {
    let a = w1.values_on(field.lattice1())?;
    let b = w2.values_on(field.lattice2())?;
    let v = field.values();
    let mut total = 0.0;
    for (i1, wa) in a.iter().enumerate() {
        for (i2, wb) in b.iter().enumerate() {
            total += v[(i1, i2)].norm() * wa * wb;
        }
    }
    Ok(total)
}

/// `sup |F(l1, l2)| / (w1(l1) w2(l2))`, the `l^inf_{1/w}` norm.
pub fn product_weighted_sup(field: &CoeffField2D, w1: &Weight, w2: &Weight) -> Result<f64> {
    let a = w1.values_on(field.lattice1())?;
    let b = w2.values_on(field.lattice2())?;
    let v = field.values();
    let mut sup: f64 = 0.0;
    for (i1, wa) in a.iter().enumerate() {
        for (i2, wb) in b.iter().enumerate() {
            sup = sup.max(v[(i1, i2)].norm() / (wa * wb));
        }
    }
    Ok(sup)
}

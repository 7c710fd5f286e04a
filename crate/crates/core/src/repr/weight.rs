use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::lattice::{AffinePoint, Lattice, LatticePoint, TfPoint};
use crate::error::{Error, Result};

/// Weight families on the two lattices.
///
/// `PolynomialTf(s)` is `(1 + |x| + |w|)^s` on signed time-frequency
/// representatives; `Dyadic(s)` is `|a|^{-s}` with `a = 2^{-j}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "s", rename_all = "snake_case")]
pub enum Weight {
    Constant,
    PolynomialTf(f64),
    Dyadic(f64),
}

impl Weight {
    pub fn family_name(&self) -> &'static str {
        match self {
            Weight::Constant => "constant",
            Weight::PolynomialTf(_) => "polynomial_tf",
            Weight::Dyadic(_) => "dyadic",
        }
    }

    /// Smoothness parameter `s` (0 for the constant family).
    pub fn parameter(&self) -> f64 {
        match *self {
            Weight::Constant => 0.0,
            Weight::PolynomialTf(s) | Weight::Dyadic(s) => s,
        }
    }

    /// The reciprocal weight `1/m`, which stays in the same family.
    pub fn inverse(&self) -> Weight {
        match *self {
            Weight::Constant => Weight::Constant,
            Weight::PolynomialTf(s) => Weight::PolynomialTf(-s),
            Weight::Dyadic(s) => Weight::Dyadic(-s),
        }
    }

    pub fn eval(&self, p: &LatticePoint) -> Result<f64> {
        match (self, p) {
            (Weight::Constant, _) => Ok(1.0),
            (Weight::PolynomialTf(s), LatticePoint::Tf(q)) => Ok(Self::polynomial(*s, q)),
            (Weight::Dyadic(s), LatticePoint::Affine(q)) => Ok(Self::dyadic(*s, q.j as i64)),
            (w, LatticePoint::Tf(_)) => Err(Error::WeightMismatch {
                family: w.family_name(),
                lattice: "time-frequency",
            }),
            (w, LatticePoint::Affine(_)) => Err(Error::WeightMismatch {
                family: w.family_name(),
                lattice: "affine",
            }),
        }
    }

    fn polynomial(s: f64, p: &TfPoint) -> f64 {
        let r = 1.0 + p.signed_k().unsigned_abs() as f64 + p.signed_l().unsigned_abs() as f64;
        r.powf(s)
    }

    /// `|2^{-j}|^{-s} = 2^{j s}`.
    fn dyadic(s: f64, j: i64) -> f64 {
        (j as f64 * s).exp2()
    }

    /// Values in lattice order.
    pub fn values_on(&self, lattice: &Lattice) -> Result<Vec<f64>> {
        lattice.points().map(|p| self.eval(&p)).collect()
    }
}

/// Free-function form of [`Weight::eval`].
pub fn weight_eval(w: &Weight, p: &LatticePoint) -> Result<f64> {
    w.eval(p)
}

/// Checks `m(g1 g2 g3) <= w(g1) m(g2) w(g3)` on lattice triples.
///
/// All triples are enumerated when there are at most `samples` of them;
/// otherwise `samples` triples are drawn with a fixed seed. Time-frequency
/// products are taken mod N. For the affine family only the scale part of
/// the product matters, and scales multiply, so the product weight is
/// evaluated at scale index `j1 + j2 + j3`.
pub fn check_moderate(w: &Weight, m: &Weight, lattice: &Lattice, samples: usize) -> Result<bool> {
    let len = lattice.len();
    let wv = w.values_on(lattice)?;
    let mv = m.values_on(lattice)?;
    let tol = 1e-12;

    let holds = |i1: usize, i2: usize, i3: usize| -> Result<bool> {
        let product = match (lattice.point(i1), lattice.point(i2), lattice.point(i3)) {
            (LatticePoint::Tf(a), LatticePoint::Tf(b), LatticePoint::Tf(c)) => {
                m.eval(&LatticePoint::Tf(a.add(&b)?.add(&c)?))?
            }
            (LatticePoint::Affine(a), LatticePoint::Affine(b), LatticePoint::Affine(c)) => {
                affine_product_weight(m, &a, &b, &c)
            }
            _ => unreachable!("single lattice"),
        };
        let bound = wv[i1] * mv[i2] * wv[i3];
        Ok(product <= bound * (1.0 + tol))
    };

    let exhaustive = len
        .checked_pow(3)
        .map(|total| total <= samples)
        .unwrap_or(false);
    if exhaustive {
        for i1 in 0..len {
            for i2 in 0..len {
                for i3 in 0..len {
                    if !holds(i1, i2, i3)? {
                        return Ok(false);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f_6465_7261_7465);
        for _ in 0..samples {
            let (i1, i2, i3) = (
                rng.random_range(0..len),
                rng.random_range(0..len),
                rng.random_range(0..len),
            );
            if !holds(i1, i2, i3)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn affine_product_weight(m: &Weight, a: &AffinePoint, b: &AffinePoint, c: &AffinePoint) -> f64 {
    match m {
        Weight::Dyadic(s) => Weight::dyadic(*s, (a.j + b.j + c.j) as i64),
        _ => 1.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::lattice::{AffineLattice, TfLattice};

    #[test]
    fn polynomial_values() {
        let origin = LatticePoint::Tf(TfPoint::new(0, 0, 16).unwrap());
        assert_eq!(Weight::PolynomialTf(2.0).eval(&origin).unwrap(), 1.0);
        let p = LatticePoint::Tf(TfPoint::new(3, 4, 16).unwrap());
        assert_eq!(Weight::PolynomialTf(1.0).eval(&p).unwrap(), 8.0);
        // signed representatives (-3, -4) give the same value
        let q = LatticePoint::Tf(TfPoint::new(13, 12, 16).unwrap());
        assert_eq!(Weight::PolynomialTf(1.0).eval(&q).unwrap(), 8.0);
    }

    #[test]
    fn dyadic_values() {
        let p = LatticePoint::Affine(AffinePoint::detail(3, 0));
        assert_eq!(Weight::Dyadic(-1.0).eval(&p).unwrap(), 0.125);
        assert_eq!(Weight::Constant.eval(&p).unwrap(), 1.0);
    }

    #[test]
    fn family_mismatch() {
        let p = LatticePoint::Affine(AffinePoint::detail(0, 0));
        assert!(matches!(
            Weight::PolynomialTf(1.0).eval(&p),
            Err(Error::WeightMismatch { .. })
        ));
        let q = LatticePoint::Tf(TfPoint::new(0, 0, 4).unwrap());
        assert!(Weight::Dyadic(1.0).eval(&q).is_err());
    }

    #[test]
    fn constant_weight_is_moderate() {
        let lat = Lattice::Tf(TfLattice::full(4).unwrap());
        assert!(check_moderate(&Weight::PolynomialTf(1.0), &Weight::Constant, &lat, 10_000).unwrap());
    }

    #[test]
    fn polynomial_moderate_exhaustive_n8() {
        let lat = Lattice::Tf(TfLattice::full(8).unwrap());
        let all = 64usize.pow(3);
        for s in [-2.0, -1.0, 0.5, 1.0, 2.0] {
            let m = Weight::PolynomialTf(s);
            let w = Weight::PolynomialTf(f64::abs(s));
            assert!(check_moderate(&w, &m, &lat, all).unwrap(), "s = {s}");
        }
        assert!(!check_moderate(&Weight::Constant, &Weight::PolynomialTf(2.0), &lat, all).unwrap());
    }

    #[test]
    fn dyadic_moderate() {
        let lat = Lattice::Affine(AffineLattice::standard(16).unwrap());
        assert!(check_moderate(&Weight::Dyadic(1.5), &Weight::Dyadic(-1.5), &lat, 5000).unwrap());
        assert!(!check_moderate(&Weight::Constant, &Weight::Dyadic(1.0), &lat, 5000).unwrap());
    }
}

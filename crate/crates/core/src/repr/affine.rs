//! Dyadic affine system realized as an orthogonal periodized two-channel
//! filter bank.
//!
//! One analysis stage on a segment `x` of even length `n`:
//! `a[k] = sum_m h[m] x[(2k + m) mod n]`, `d[k] = sum_m g[m] x[(2k + m) mod n]`.
//! Synthesis is the transpose. Filters are real, so the stage commutes with
//! complex conjugation and coefficients are inner products with real atoms.

use std::f64::consts::SQRT_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::lattice::{AffineLattice, AffinePoint};
use super::signal::Signal;
use crate::error::{Error, Result};

const FILTER_TOL: f64 = 1e-12;

/// Low-pass / high-pass analysis filters of an orthogonal filter bank.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterPair {
    name: String,
    low: Vec<f64>,
    high: Vec<f64>,
}

impl FilterPair {
    pub fn haar() -> Self {
        let h = 1.0 / SQRT_2;
        Self {
            name: "haar".into(),
            low: vec![h, h],
            high: vec![h, -h],
        }
    }

    /// Four-tap Daubechies filters.
    pub fn daubechies4() -> Self {
        let s3 = 3f64.sqrt();
        let d = 4.0 * SQRT_2;
        let low = vec![(1.0 + s3) / d, (3.0 + s3) / d, (3.0 - s3) / d, (1.0 - s3) / d];
        Self::from_low_pass("daubechies4", low).expect("db4 taps are orthogonal")
    }

    /// Builds the pair from a low-pass filter via the alternating flip
    /// `g[m] = (-1)^m h[L - 1 - m]`.
    pub fn from_low_pass(name: &str, low: Vec<f64>) -> Result<Self> {
        let len = low.len();
        let high = (0..len)
            .map(|m| {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sign * low[len - 1 - m]
            })
            .collect();
        Self::new(name, low, high)
    }

    pub fn new(name: &str, low: Vec<f64>, high: Vec<f64>) -> Result<Self> {
        let pair = Self {
            name: name.into(),
            low,
            high,
        };
        pair.validate()?;
        Ok(pair)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn low(&self) -> &[f64] {
        &self.low
    }

    pub fn high(&self) -> &[f64] {
        &self.high
    }

    /// Checks the double-shift orthonormality relations.
    fn validate(&self) -> Result<()> {
        if self.low.is_empty() || self.low.len() != self.high.len() || self.low.len() % 2 != 0 {
            return Err(Error::InvalidFilter(
                "filters must be non-empty with equal even length".into(),
            ));
        }
        if self.low.iter().chain(&self.high).any(|x| !x.is_finite()) {
            return Err(Error::InvalidFilter("non-finite filter tap".into()));
        }
        let corr = |a: &[f64], b: &[f64], shift: usize| -> f64 {
            (0..a.len())
                .filter(|m| m + shift < b.len())
                .map(|m| a[m] * b[m + shift])
                .sum()
        };
        for r in (0..self.low.len()).step_by(2) {
            let target = if r == 0 { 1.0 } else { 0.0 };
            let checks = [
                corr(&self.low, &self.low, r) - target,
                corr(&self.high, &self.high, r) - target,
                corr(&self.low, &self.high, r),
                corr(&self.high, &self.low, r),
            ];
            if checks.iter().any(|c| c.abs() > FILTER_TOL) {
                return Err(Error::InvalidFilter(format!(
                    "{}: double-shift orthonormality fails at shift {r}",
                    self.name
                )));
            }
        }
        Ok(())
    }

    fn analysis_stage(&self, x: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let n = x.len();
        let half = n / 2;
        let mut approx = vec![Complex64::new(0.0, 0.0); half];
        let mut detail = vec![Complex64::new(0.0, 0.0); half];
        for k in 0..half {
            for (m, (&h, &g)) in self.low.iter().zip(&self.high).enumerate() {
                let v = x[(2 * k + m) % n];
                approx[k] += v * h;
                detail[k] += v * g;
            }
        }
        (approx, detail)
    }

    fn synthesis_stage(&self, approx: &[Complex64], detail: &[Complex64]) -> Vec<Complex64> {
        let n = 2 * approx.len();
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        for k in 0..approx.len() {
            for (m, (&h, &g)) in self.low.iter().zip(&self.high).enumerate() {
                x[(2 * k + m) % n] += approx[k] * h + detail[k] * g;
            }
        }
        x
    }

    /// Multi-level analysis; output follows the lattice order.
    pub fn forward(&self, lattice: &AffineLattice, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != lattice.n() {
            return Err(Error::Dimension {
                expected: lattice.n(),
                found: x.len(),
            });
        }
        let mut out = Vec::with_capacity(x.len());
        let mut approx = x.to_vec();
        for _ in 0..lattice.levels() {
            let (a, d) = self.analysis_stage(&approx);
            out.extend_from_slice(&d);
            approx = a;
        }
        out.extend_from_slice(&approx);
        Ok(out)
    }

    /// Inverse of [`FilterPair::forward`].
    pub fn inverse(&self, lattice: &AffineLattice, coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
        if coeffs.len() != lattice.n() {
            return Err(Error::Dimension {
                expected: lattice.n(),
                found: coeffs.len(),
            });
        }
        let mut approx = coeffs[lattice.n() - lattice.approximation_count()..].to_vec();
        for j in (0..lattice.levels()).rev() {
            let start: usize = (0..j).map(|i| lattice.detail_count(i)).sum();
            let detail = &coeffs[start..start + lattice.detail_count(j)];
            approx = self.synthesis_stage(&approx, detail);
        }
        Ok(approx)
    }
}

/// The periodized atom at `p`: synthesis of a unit coefficient.
pub fn affine_atom(filters: &FilterPair, lattice: &AffineLattice, p: &AffinePoint) -> Result<Signal> {
    let index = lattice.check_point(p)?;
    let mut coeffs = vec![Complex64::new(0.0, 0.0); lattice.n()];
    coeffs[index] = Complex64::new(1.0, 0.0);
    Ok(Signal::from_vec_unchecked(filters.inverse(lattice, &coeffs)?))
}

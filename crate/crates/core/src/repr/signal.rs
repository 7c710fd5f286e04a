use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex signal on the cyclic group Z_N.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    values: Vec<Complex64>,
}

impl Signal {
    /// Builds a signal, rejecting empty input and non-finite samples.
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySignal);
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    /// Unit impulse at position `t`.
    pub fn delta(n: usize, t: usize) -> Result<Self> {
        if t >= n {
            return Err(Error::Index(format!("delta position {t} outside 0..{n}")));
        }
        let mut values = vec![Complex64::new(0.0, 0.0); n];
        values[t] = Complex64::new(1.0, 0.0);
        Self::new(values)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<Complex64>) -> Self {
        debug_assert!(!values.is_empty());
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `<self, other> = sum_t self(t) * conj(other(t))`, linear in the first slot.
    pub fn inner(&self, other: &Signal) -> Result<Complex64> {
        self.expect_len(other.len())?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    pub fn scaled(&self, factor: Complex64) -> Signal {
        Signal::from_vec_unchecked(self.values.iter().map(|z| z * factor).collect())
    }

    pub fn sub(&self, other: &Signal) -> Result<Signal> {
        self.expect_len(other.len())?;
        Ok(Signal::from_vec_unchecked(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn to_dvector(&self) -> DVector<Complex64> {
        DVector::from_column_slice(&self.values)
    }

    pub fn from_dvector(v: &DVector<Complex64>) -> Result<Signal> {
        Signal::new(v.iter().copied().collect())
    }

    pub(crate) fn expect_len(&self, n: usize) -> Result<()> {
        if self.values.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: self.values.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite_and_empty() {
        assert_eq!(Signal::new(vec![]), Err(Error::EmptySignal));
        assert_eq!(
            Signal::new(vec![Complex64::new(f64::NAN, 0.0)]),
            Err(Error::NonFinite)
        );
        assert_eq!(
            Signal::new(vec![Complex64::new(0.0, f64::INFINITY)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn inner_product_is_conjugate_linear_in_second_slot() {
        let f = Signal::new(vec![Complex64::new(1.0, 1.0), Complex64::new(0.0, 2.0)]).unwrap();
        let g = Signal::new(vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0)]).unwrap();
        // (1+i)(-i) + (2i)(1) = 1 - i + 2i
        assert_eq!(f.inner(&g).unwrap(), Complex64::new(1.0, 1.0));
        assert!(f.inner(&Signal::zeros(3).unwrap()).is_err());
    }
}

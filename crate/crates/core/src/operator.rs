use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::repr::Signal;

/// A complex `N2 x N1` matrix.
///
/// The same storage serves as an operator `A: C^{N1} -> C^{N2}` and as the
/// abstract kernel `K` in `C^{N2} (x) C^{N1}` under the Hilbert-Schmidt
/// identification; the API keeps the two readings apart by operation name.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: DMatrix<Complex64>,
}

impl OperatorMatrix {
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if entries.nrows() == 0 || entries.ncols() == 0 {
            return Err(Error::EmptySignal);
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_matrix_unchecked(entries: DMatrix<Complex64>) -> Self {
        Self { entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            entries: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: DMatrix::identity(n, n),
        }
    }

    /// `phi (x) upsilon`, the rank-one map `v -> <v, upsilon> phi`.
    pub fn rank_one(phi: &Signal, upsilon: &Signal) -> Self {
        Self {
            entries: phi.to_dvector() * upsilon.to_dvector().adjoint(),
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn cols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> DMatrix<Complex64> {
        self.entries
    }

    pub fn adjoint(&self) -> Self {
        Self {
            entries: self.entries.adjoint(),
        }
    }

    pub fn apply(&self, f: &Signal) -> Result<Signal> {
        f.expect_len(self.cols())?;
        let out = &self.entries * f.to_dvector();
        Ok(Signal::from_vec_unchecked(out.iter().copied().collect()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &OperatorMatrix) -> Result<f64> {
        self.expect_shape(other.rows(), other.cols())?;
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub(crate) fn expect_shape(&self, rows: usize, cols: usize) -> Result<()> {
        if self.rows() != rows || self.cols() != cols {
            return Err(Error::Shape {
                expected_rows: rows,
                expected_cols: cols,
                rows: self.rows(),
                cols: self.cols(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_acts_as_inner_product_times_vector() {
        let phi = Signal::from_real(&[1.0, 2.0]).unwrap();
        let ups = Signal::new(vec![Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        let k = OperatorMatrix::rank_one(&phi, &ups);
        assert_eq!((k.rows(), k.cols()), (2, 3));
        let v = Signal::from_real(&[1.0, 1.0, 5.0]).unwrap();
        let out = k.apply(&v).unwrap();
        let c = v.inner(&ups).unwrap();
        assert!((out.values()[0] - c).norm() < 1e-15);
        assert!((out.values()[1] - c * 2.0).norm() < 1e-15);
    }

    #[test]
    fn rejects_non_finite() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = Complex64::new(f64::NAN, 0.0);
        assert_eq!(OperatorMatrix::new(m), Err(Error::NonFinite));
    }
}

use num_complex::Complex64;
use rustfft::FftPlanner;

use super::frame::{FrameSpec, FrameSystem};
use crate::error::{Error, Result};
use crate::repr::{Lattice, LatticePoint, Signal};

/// Coefficients indexed by a lattice, in the lattice's fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffField1D {
    values: Vec<Complex64>,
    lattice: Lattice,
}

impl CoeffField1D {
    pub fn new(values: Vec<Complex64>, lattice: Lattice) -> Result<Self> {
        if values.len() != lattice.len() {
            return Err(Error::Dimension {
                expected: lattice.len(),
                found: values.len(),
            });
        }
        Ok(Self { values, lattice })
    }

    pub fn zeros(lattice: Lattice) -> Self {
        Self {
            values: vec![Complex64::new(0.0, 0.0); lattice.len()],
            lattice,
        }
    }

    /// Unit coefficient at one lattice point.
    pub fn delta(lattice: Lattice, p: &LatticePoint) -> Result<Self> {
        let index = lattice
            .index_of(p)
            .ok_or_else(|| Error::Index(format!("{p} not in lattice")))?;
        let mut field = Self::zeros(lattice);
        field.values[index] = Complex64::new(1.0, 0.0);
        Ok(field)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `sum_lambda F(lambda) conj(G(lambda))`.
    pub fn inner(&self, other: &CoeffField1D) -> Result<Complex64> {
        self.lattice.expect_same(&other.lattice)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    pub fn l2_norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &CoeffField1D) -> Result<f64> {
        self.lattice.expect_same(&other.lattice)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// `V_psi f(lambda) = <f, pi(lambda) psi>` by direct inner products.
pub fn analyze(f: &Signal, frame: &FrameSpec) -> Result<CoeffField1D> {
    f.expect_len(frame.dim())?;
    let phi = frame.atom_matrix();
    let values = (0..phi.ncols())
        .map(|i| {
            phi.column(i)
                .iter()
                .zip(f.values())
                .map(|(a, x)| x * a.conj())
                .sum()
        })
        .collect();
    CoeffField1D::new(values, frame.lattice())
}

/// Same coefficients as [`analyze`], computed by FFT (Gabor) or by the
/// filter-bank cascade (wavelet).
pub fn analyze_fast(f: &Signal, frame: &FrameSpec) -> Result<CoeffField1D> {
    f.expect_len(frame.dim())?;
    let scale = frame.scale();
    let values = match frame.system() {
        FrameSystem::Gabor { window, lattice } => {
            let n = lattice.n();
            let fft = FftPlanner::<f64>::new().plan_fft_forward(n);
            let mut values = Vec::with_capacity(lattice.len());
            let mut buf = vec![Complex64::new(0.0, 0.0); n];
            for ki in 0..lattice.time_count() {
                let k = ki * lattice.time_step();
                for (t, slot) in buf.iter_mut().enumerate() {
                    *slot = f.values()[t] * window.values()[(t + n - k) % n].conj() * scale;
                }
                fft.process(&mut buf);
                values.extend((0..lattice.freq_count()).map(|li| buf[li * lattice.freq_step()]));
            }
            values
        }
        FrameSystem::Wavelet { filters, lattice } => filters
            .forward(lattice, f.values())?
            .into_iter()
            .map(|z| z * scale)
            .collect(),
    };
    CoeffField1D::new(values, frame.lattice())
}

/// `V_psi^* F = sum_lambda F(lambda) pi(lambda) psi`, accumulated in lattice order.
pub fn synthesize(coeffs: &CoeffField1D, frame: &FrameSpec) -> Result<Signal> {
    coeffs.lattice().expect_same(&frame.lattice())?;
    let phi = frame.atom_matrix();
    let mut out = vec![Complex64::new(0.0, 0.0); frame.dim()];
    for (i, c) in coeffs.values().iter().enumerate() {
        for (slot, a) in out.iter_mut().zip(phi.column(i).iter()) {
            *slot += c * a;
        }
    }
    Signal::new(out)
}

/// `P = V_psi V_psi^*`, the orthogonal projection onto the range of the
/// analysis operator for a Parseval frame.
pub fn reproducing_projection(coeffs: &CoeffField1D, frame: &FrameSpec) -> Result<CoeffField1D> {
    frame.require_parseval()?;
    analyze(&synthesize(coeffs, frame)?, frame)
}

use std::f64::consts::PI;
use std::sync::OnceLock;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::repr::{
    affine_atom, tf_shift, AffineLattice, FilterPair, Lattice, LatticePoint, Signal, TfLattice,
};

/// Tolerance for accepting a frame operator as a scalar multiple of the identity.
pub const TIGHTNESS_TOL: f64 = 1e-8;
/// Tolerance for treating a frame as Parseval.
pub const PARSEVAL_TOL: f64 = 1e-9;
/// Frames whose operator has a smaller eigenvalue are rejected as singular.
pub const MIN_FRAME_EIGENVALUE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum FrameSystem {
    /// Time-frequency shifts `M_l T_k` of a window over a lattice.
    Gabor { window: Signal, lattice: TfLattice },
    /// Periodized dyadic atoms of an orthogonal filter bank.
    Wavelet {
        filters: FilterPair,
        lattice: AffineLattice,
    },
}

/// A system `{c * pi(lambda) psi}` together with its normalization constant `c`.
#[derive(Debug, Clone)]
pub struct FrameSpec {
    system: FrameSystem,
    scale: f64,
    atoms: OnceLock<DMatrix<Complex64>>,
}

impl PartialEq for FrameSpec {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.scale == other.scale
    }
}

impl FrameSpec {
    pub fn new(system: FrameSystem, scale: f64) -> Result<Self> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::Config(format!(
                "normalization constant must be positive, got {scale}"
            )));
        }
        if let FrameSystem::Gabor { window, lattice } = &system {
            window.expect_len(lattice.n())?;
        }
        Ok(Self {
            system,
            scale,
            atoms: OnceLock::new(),
        })
    }

    pub fn gabor(window: Signal, lattice: TfLattice) -> Result<Self> {
        Self::new(FrameSystem::Gabor { window, lattice }, 1.0)
    }

    pub fn wavelet(filters: FilterPair, lattice: AffineLattice) -> Result<Self> {
        Self::new(FrameSystem::Wavelet { filters, lattice }, 1.0)
    }

    /// Full-lattice Gabor frame of the window, normalized to Parseval.
    pub fn parseval_gabor(window: Signal) -> Result<Self> {
        let lattice = TfLattice::full(window.len())?;
        normalize_frame(&Self::gabor(window, lattice)?)
    }

    /// Haar wavelet basis with the standard number of levels.
    pub fn haar(n: usize) -> Result<Self> {
        Self::wavelet(FilterPair::haar(), AffineLattice::standard(n)?)
    }

    pub fn with_scale(&self, scale: f64) -> Result<Self> {
        Self::new(self.system.clone(), scale)
    }

    pub fn system(&self) -> &FrameSystem {
        &self.system
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn dim(&self) -> usize {
        self.lattice().dim()
    }

    pub fn lattice(&self) -> Lattice {
        match &self.system {
            FrameSystem::Gabor { lattice, .. } => Lattice::Tf(*lattice),
            FrameSystem::Wavelet { lattice, .. } => Lattice::Affine(*lattice),
        }
    }

    pub fn len(&self) -> usize {
        self.lattice().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn representation_name(&self) -> &'static str {
        match &self.system {
            FrameSystem::Gabor { .. } => "weyl-heisenberg",
            FrameSystem::Wavelet { .. } => "affine",
        }
    }

    /// Effective window `c * psi`. For wavelet systems this is the finest
    /// detail atom at translation 0.
    pub fn window(&self) -> Signal {
        match &self.system {
            FrameSystem::Gabor { window, .. } => window.scaled(Complex64::new(self.scale, 0.0)),
            FrameSystem::Wavelet { .. } => self.atom(0),
        }
    }

    /// `c * pi(lambda) psi` for the lattice point at `index`.
    pub fn atom(&self, index: usize) -> Signal {
        let column = self.atom_matrix().column(index);
        Signal::from_vec_unchecked(column.iter().copied().collect())
    }

    pub fn atom_at(&self, p: &LatticePoint) -> Result<Signal> {
        let index = self
            .lattice()
            .index_of(p)
            .ok_or_else(|| Error::Index(format!("{p} is not a point of the frame lattice")))?;
        Ok(self.atom(index))
    }

    /// All atoms as the columns of an `N x |Lambda|` matrix (the synthesis operator).
    pub fn atom_matrix(&self) -> &DMatrix<Complex64> {
        self.atoms.get_or_init(|| self.build_atoms())
    }

    fn build_atoms(&self) -> DMatrix<Complex64> {
        let lattice = self.lattice();
        let n = lattice.dim();
        let mut m = DMatrix::zeros(n, lattice.len());
        let c = Complex64::new(self.scale, 0.0);
        for (i, p) in lattice.points().enumerate() {
            let atom = match (&self.system, p) {
                (FrameSystem::Gabor { window, .. }, LatticePoint::Tf(q)) => {
                    tf_shift(window, &q).expect("window length checked at construction")
                }
                (FrameSystem::Wavelet { filters, lattice }, LatticePoint::Affine(q)) => {
                    affine_atom(filters, lattice, &q).expect("point enumerated from lattice")
                }
                _ => unreachable!("lattice kind follows the system"),
            };
            for (t, v) in atom.values().iter().enumerate() {
                m[(t, i)] = v * c;
            }
        }
        m
    }

    /// `max |S - I|` entrywise.
    pub fn parseval_deviation(&self) -> f64 {
        let s = frame_operator(self);
        let n = s.rows();
        let id = DMatrix::<Complex64>::identity(n, n);
        (s.entries() - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_parseval(&self) -> bool {
        self.parseval_deviation() <= PARSEVAL_TOL
    }

    pub(crate) fn require_parseval(&self) -> Result<()> {
        let deviation = self.parseval_deviation();
        if deviation > PARSEVAL_TOL {
            return Err(Error::NotParseval { deviation });
        }
        Ok(())
    }
}

/// `S = sum_lambda <., pi(lambda) psi> pi(lambda) psi` as an `N x N` matrix.
pub fn frame_operator(frame: &FrameSpec) -> OperatorMatrix {
    let phi = frame.atom_matrix();
    OperatorMatrix::from_matrix_unchecked(phi * phi.adjoint())
}

/// Rescales a tight frame so that its frame operator is the identity.
pub fn normalize_frame(frame: &FrameSpec) -> Result<FrameSpec> {
    let s = frame_operator(frame);
    let n = s.rows();
    let alpha = (0..n).map(|i| s.entries()[(i, i)].re).sum::<f64>() / n as f64;
    if !(alpha > 0.0) {
        return Err(Error::NotTight {
            deviation: f64::INFINITY,
        });
    }
    let mut deviation: f64 = 0.0;
    for r in 0..n {
        for c in 0..n {
            let target = if r == c { alpha } else { 0.0 };
            deviation = deviation.max((s.entries()[(r, c)] - target).norm() / alpha);
        }
    }
    if deviation > TIGHTNESS_TOL {
        return Err(Error::NotTight { deviation });
    }
    frame.with_scale(frame.scale() / alpha.sqrt())
}

/// Canonical dual system `{S^{-1} pi(lambda) psi}`.
#[derive(Debug, Clone)]
pub struct DualFrame {
    /// `S^{-1}` applied to every atom, as columns.
    pub atoms: DMatrix<Complex64>,
    /// Smallest eigenvalue of the frame operator.
    pub lower_frame_bound: f64,
    /// Largest eigenvalue of the frame operator.
    pub upper_frame_bound: f64,
}

pub fn dual_frame(frame: &FrameSpec) -> Result<DualFrame> {
    let s = frame_operator(frame).into_entries();
    let eig = SymmetricEigen::new(s.clone());
    let lower = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    let upper = eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(lower > MIN_FRAME_EIGENVALUE) {
        return Err(Error::NotAFrame {
            min_eigenvalue: lower,
        });
    }
    let s_inv = s.try_inverse().ok_or(Error::NotAFrame {
        min_eigenvalue: lower,
    })?;
    Ok(DualFrame {
        atoms: s_inv * frame.atom_matrix(),
        lower_frame_bound: lower,
        upper_frame_bound: upper,
    })
}

/// `S^{-1} psi` for the effective window.
pub fn dual_window(frame: &FrameSpec) -> Result<Signal> {
    let window = frame.window();
    let dual = dual_frame(frame)?;
    let index = match frame.system() {
        FrameSystem::Gabor { .. } => frame.lattice().index_of(&LatticePoint::Tf(
            crate::repr::TfPoint::new(0, 0, frame.dim())?,
        )),
        FrameSystem::Wavelet { .. } => Some(0),
    };
    match index {
        Some(i) => Ok(Signal::from_vec_unchecked(
            dual.atoms.column(i).iter().copied().collect(),
        )),
        None => Err(Error::Index(format!(
            "window of length {} has no lattice index",
            window.len()
        ))),
    }
}

/// Sampled periodized Gaussian `sum_m exp(-pi (t - N/2 + mN)^2 / N)`.
pub fn periodized_gaussian(n: usize) -> Result<Signal> {
    let nf = n as f64;
    let values = (0..n)
        .map(|t| {
            let v: f64 = (-4i32..=4)
                .map(|m| {
                    let x = t as f64 - nf / 2.0 + m as f64 * nf;
                    (-PI * x * x / nf).exp()
                })
                .sum();
            Complex64::new(v, 0.0)
        })
        .collect();
    Signal::new(values)
}

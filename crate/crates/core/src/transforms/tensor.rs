use nalgebra::DMatrix;
use num_complex::Complex64;

use super::frame::FrameSpec;
use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::repr::Lattice;

/// Coefficients indexed by `(lambda1, lambda2)`: rows follow the domain
/// lattice, columns the codomain lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffField2D {
    values: DMatrix<Complex64>,
    lattices: (Lattice, Lattice),
}

impl CoeffField2D {
    pub fn new(values: DMatrix<Complex64>, lattice1: Lattice, lattice2: Lattice) -> Result<Self> {
        if values.nrows() != lattice1.len() || values.ncols() != lattice2.len() {
            return Err(Error::Shape {
                expected_rows: lattice1.len(),
                expected_cols: lattice2.len(),
                rows: values.nrows(),
                cols: values.ncols(),
            });
        }
        Ok(Self {
            values,
            lattices: (lattice1, lattice2),
        })
    }

    pub fn zeros(lattice1: Lattice, lattice2: Lattice) -> Self {
        Self {
            values: DMatrix::zeros(lattice1.len(), lattice2.len()),
            lattices: (lattice1, lattice2),
        }
    }

    pub fn values(&self) -> &DMatrix<Complex64> {
        &self.values
    }

    pub fn lattice1(&self) -> &Lattice {
        &self.lattices.0
    }

    pub fn lattice2(&self) -> &Lattice {
        &self.lattices.1
    }

    pub fn get(&self, i1: usize, i2: usize) -> Complex64 {
        self.values[(i1, i2)]
    }

    pub fn max_abs_diff(&self, other: &CoeffField2D) -> Result<f64> {
        self.lattices.0.expect_same(&other.lattices.0)?;
        self.lattices.1.expect_same(&other.lattices.1)?;
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn expect_kernel_shape(k: &OperatorMatrix, frame1: &FrameSpec, frame2: &FrameSpec) -> Result<()> {
    k.expect_shape(frame2.dim(), frame1.dim())
}

/// `V_Psi K(lambda1, lambda2) = <K pi1(lambda1) psi1, pi2(lambda2) psi2>`.
pub fn tensor_analysis(
    k: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
) -> Result<CoeffField2D> {
    expect_kernel_shape(k, frame1, frame2)?;
    let phi1 = frame1.atom_matrix();
    let phi2 = frame2.atom_matrix();
    let m = phi2.adjoint() * (k.entries() * phi1);
    CoeffField2D::new(m.transpose(), frame1.lattice(), frame2.lattice())
}

/// `sum F(lambda1, lambda2) (pi2(lambda2) psi2) (x) (pi1(lambda1) psi1)`,
/// the adjoint of [`tensor_analysis`].
pub fn tensor_synthesis(
    field: &CoeffField2D,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
) -> Result<OperatorMatrix> {
    field.lattice1().expect_same(&frame1.lattice())?;
    field.lattice2().expect_same(&frame2.lattice())?;
    let phi1 = frame1.atom_matrix();
    let phi2 = frame2.atom_matrix();
    let m = phi2 * (field.values().transpose() * phi1.adjoint());
    OperatorMatrix::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::Signal;
    use crate::transforms::{analyze, periodized_gaussian};

    fn frames() -> (FrameSpec, FrameSpec) {
        (
            FrameSpec::parseval_gabor(periodized_gaussian(4).unwrap()).unwrap(),
            FrameSpec::haar(8).unwrap(),
        )
    }

    #[test]
    fn rank_one_factorizes() {
        let (f1, f2) = frames();
        let a = crate::random::signal(4, 1);
        let b = crate::random::signal(8, 2);
        let k = OperatorMatrix::rank_one(&b, &a);
        let vk = tensor_analysis(&k, &f1, &f2).unwrap();
        let va = analyze(&a, &f1).unwrap();
        let vb = analyze(&b, &f2).unwrap();
        for i1 in 0..va.len() {
            for i2 in 0..vb.len() {
                let expected = vb.values()[i2] * va.values()[i1].conj();
                assert!((vk.get(i1, i2) - expected).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn zero_kernel() {
        let (f1, f2) = frames();
        let vk = tensor_analysis(&OperatorMatrix::zeros(8, 4), &f1, &f2).unwrap();
        assert_eq!(vk.max_abs(), 0.0);
        let k = tensor_synthesis(&vk, &f1, &f2).unwrap();
        assert_eq!(k.frobenius_norm(), 0.0);
    }

    #[test]
    fn round_trip_with_parseval_frames() {
        let (f1, f2) = frames();
        let k = crate::random::operator(8, 4, 9);
        let back = tensor_synthesis(&tensor_analysis(&k, &f1, &f2).unwrap(), &f1, &f2).unwrap();
        assert!(back.max_abs_diff(&k).unwrap() < 1e-10);
    }

    #[test]
    fn delta_field_gives_rank_one_atom_product() {
        let (f1, f2) = frames();
        let mut field = CoeffField2D::zeros(f1.lattice(), f2.lattice());
        field.values[(5, 3)] = Complex64::new(1.0, 0.0);
        let k = tensor_synthesis(&field, &f1, &f2).unwrap();
        let expected = OperatorMatrix::rank_one(&f2.atom(3), &f1.atom(5));
        assert!(k.max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn identity_diagonal_is_atom_norm() {
        let frame = FrameSpec::parseval_gabor(periodized_gaussian(4).unwrap()).unwrap();
        let vk = tensor_analysis(&OperatorMatrix::identity(4), &frame, &frame).unwrap();
        let psi: Signal = frame.window();
        for i in 0..16 {
            assert!((vk.get(i, i).re - psi.norm_sqr()).abs() < 1e-14);
        }
    }

    #[test]
    fn shape_mismatch() {
        let (f1, f2) = frames();
        assert!(matches!(
            tensor_analysis(&OperatorMatrix::zeros(4, 8), &f1, &f2),
            Err(Error::Shape { .. })
        ));
    }
}

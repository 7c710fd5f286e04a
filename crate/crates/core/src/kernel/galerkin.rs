use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::repr::{Lattice, Signal};
use crate::transforms::{analyze, synthesize, CoeffField1D, CoeffField2D, FrameSpec};

/// `k_A(lambda1, lambda2) = <A pi1(lambda1) psi1, pi2(lambda2) psi2>`,
/// evaluated entry by entry from its definition.
pub fn galerkin_kernel(
    a: &OperatorMatrix,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
) -> Result<CoeffField2D> {
    a.expect_shape(frame2.dim(), frame1.dim())?;
    let (l1, l2) = (frame1.len(), frame2.len());
    let images: Vec<Signal> = (0..l1)
        .map(|i| a.apply(&frame1.atom(i)))
        .collect::<Result<_>>()?;
    let atoms2: Vec<Signal> = (0..l2).map(|i| frame2.atom(i)).collect();
    let mut values = DMatrix::zeros(l1, l2);
    for (i1, image) in images.iter().enumerate() {
        for (i2, atom) in atoms2.iter().enumerate() {
            values[(i1, i2)] = image.inner(atom)?;
        }
    }
    CoeffField2D::new(values, frame1.lattice(), frame2.lattice())
}

/// The integral operator on coefficient space with kernel `k_A`:
/// `F -> (lambda2 -> sum_lambda1 F(lambda1) k_A(lambda1, lambda2))`.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftedOperator {
    matrix: DMatrix<Complex64>,
    domain: Lattice,
    codomain: Lattice,
}

impl LiftedOperator {
    /// `|Lambda2| x |Lambda1|` matrix acting on coefficient columns.
    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn domain(&self) -> &Lattice {
        &self.domain
    }

    pub fn codomain(&self) -> &Lattice {
        &self.codomain
    }

    pub fn apply(&self, field: &CoeffField1D) -> Result<CoeffField1D> {
        field.lattice().expect_same(&self.domain)?;
        let input = DVector::from_column_slice(field.values());
        let out = &self.matrix * input;
        CoeffField1D::new(out.iter().copied().collect(), self.codomain)
    }

    /// Applies the operator to a raw coefficient vector in domain order.
    pub fn apply_slice(&self, input: &[Complex64]) -> Result<Vec<Complex64>> {
        if input.len() != self.domain.len() {
            return Err(Error::Dimension {
                expected: self.domain.len(),
                found: input.len(),
            });
        }
        let out = &self.matrix * DVector::from_column_slice(input);
        Ok(out.iter().copied().collect())
    }
}

pub fn lift_operator(k: &CoeffField2D) -> LiftedOperator {
    LiftedOperator {
        matrix: k.values().transpose(),
        domain: *k.lattice1(),
        codomain: *k.lattice2(),
    }
}

/// `V_{psi2}^* A_lift V_{psi1} f`.
pub fn apply_via_factorization(
    k: &CoeffField2D,
    f: &Signal,
    frame1: &FrameSpec,
    frame2: &FrameSpec,
) -> Result<Signal> {
    k.lattice1().expect_same(&frame1.lattice())?;
    k.lattice2().expect_same(&frame2.lattice())?;
    let lifted = lift_operator(k);
    synthesize(&lifted.apply(&analyze(f, frame1)?)?, frame2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{tf_shift_matrix, LatticePoint, TfPoint};
    use crate::transforms::{periodized_gaussian, tensor_analysis};

    fn gabor(n: usize) -> FrameSpec {
        FrameSpec::parseval_gabor(periodized_gaussian(n).unwrap()).unwrap()
    }

    #[test]
    fn zero_operator_has_zero_kernel() {
        let f = gabor(4);
        let k = galerkin_kernel(&OperatorMatrix::zeros(4, 4), &f, &f).unwrap();
        assert_eq!(k.max_abs(), 0.0);
        let lifted = lift_operator(&k);
        let x = analyze(&crate::random::signal(4, 1), &f).unwrap();
        assert!(lifted.apply(&x).unwrap().values().iter().all(|z| z.norm() == 0.0));
        let out = apply_via_factorization(&k, &crate::random::signal(4, 1), &f, &f).unwrap();
        assert_eq!(out.norm(), 0.0);
    }

    #[test]
    fn identity_kernel_is_the_gram_matrix() {
        let f = gabor(4);
        let k = galerkin_kernel(&OperatorMatrix::identity(4), &f, &f).unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let gram = f.atom(i).inner(&f.atom(j)).unwrap();
                assert!((k.get(i, j) - gram).norm() < 1e-15);
            }
            assert!((k.get(i, i).re - f.window().norm_sqr()).abs() < 1e-15);
        }
        // restricted to the range of V it is the reproducing projection
        let v = analyze(&crate::random::signal(4, 3), &f).unwrap();
        let w = lift_operator(&k).apply(&v).unwrap();
        assert!(w.max_abs_diff(&v).unwrap() < 1e-10);
    }

    #[test]
    fn shift_operator_kernel_is_shifted_gram() {
        let f = gabor(8);
        let mu = TfPoint::new(2, 3, 8).unwrap();
        let a = OperatorMatrix::new(tf_shift_matrix(&mu)).unwrap();
        let ka = galerkin_kernel(&a, &f, &f).unwrap();
        let gram = galerkin_kernel(&OperatorMatrix::identity(8), &f, &f).unwrap();
        let lat = f.lattice();
        for (i1, p1) in lat.points().enumerate() {
            let LatticePoint::Tf(p1) = p1 else { unreachable!() };
            let shifted = lat.index_of(&LatticePoint::Tf(p1.add(&mu).unwrap())).unwrap();
            for i2 in 0..lat.len() {
                assert!((ka.get(i1, i2).norm() - gram.get(shifted, i2).norm()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn galerkin_equals_tensor_analysis() {
        let f1 = gabor(4);
        let f2 = FrameSpec::haar(8).unwrap();
        let a = crate::random::operator(8, 4, 2);
        let k1 = galerkin_kernel(&a, &f1, &f2).unwrap();
        let k2 = tensor_analysis(&a, &f1, &f2).unwrap();
        assert!(k1.max_abs_diff(&k2).unwrap() < 1e-12);
    }

    #[test]
    fn rank_one_lifted_map() {
        let f = gabor(4);
        let lat = f.lattice();
        let mut rng = crate::random::rng(8);
        let a: Vec<_> = (0..16).map(|_| crate::random::complex(&mut rng)).collect();
        let b: Vec<_> = (0..16).map(|_| crate::random::complex(&mut rng)).collect();
        let k = CoeffField2D::new(DMatrix::from_fn(16, 16, |i, j| a[i] * b[j]), lat, lat).unwrap();
        let x: Vec<_> = (0..16).map(|_| crate::random::complex(&mut rng)).collect();
        let y = lift_operator(&k).apply_slice(&x).unwrap();
        let pairing: Complex64 = x.iter().zip(&a).map(|(u, v)| u * v).sum();
        for (yi, bi) in y.iter().zip(&b) {
            assert!((yi - pairing * bi).norm() < 1e-13);
        }
    }

    #[test]
    fn factorization_reproduces_operator() {
        let f1 = FrameSpec::haar(8).unwrap();
        let f2 = gabor(4);
        let a = crate::random::operator(4, 8, 5);
        let k = galerkin_kernel(&a, &f1, &f2).unwrap();
        let x = crate::random::signal(8, 6);
        let via = apply_via_factorization(&k, &x, &f1, &f2).unwrap();
        assert!(via.sub(&a.apply(&x).unwrap()).unwrap().norm() < 1e-9);
        let id = galerkin_kernel(&OperatorMatrix::identity(8), &f1, &f1).unwrap();
        assert!(apply_via_factorization(&id, &x, &f1, &f1).unwrap().sub(&x).unwrap().norm() < 1e-10);
    }
}

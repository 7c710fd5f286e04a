//! The wavelet-matrix criterion for diagonal operators in the Haar basis.
//! It coincides with the Schur norm of the Galerkin kernel under the dyadic
//! weight with s = -1/2.

use coorbit::prelude::*;
use num_complex::Complex64;

pub fn run_example() -> coorbit::Result<()> {
    let n = 32;
    let haar = FrameSpec::haar(n)?;
    let phi = haar.atom_matrix().clone();
    let m = Weight::Dyadic(-0.5);
    for seed in 0..3u64 {
        let mut rng = coorbit::random::rng(seed);
        let d = nalgebra::DVector::from_fn(haar.len(), |_, _| Complex64::new(coorbit::random::complex(&mut rng).re, 0.0));
        let a = OperatorMatrix::new(&phi * nalgebra::DMatrix::from_diagonal(&d) * phi.adjoint())?;
        let meyer = meyer_criterion(&a, &haar)?;
        let oracle = opnorm_oracle_1_to_p(&galerkin_kernel(&a, &haar, &haar)?, Exponent::ONE, &m, &m)?;
        let max_d = d.iter().map(|z| z.norm()).fold(0.0, f64::max);
        println!("seed {seed}: criterion {meyer:.12}, Schur oracle {oracle:.12}, max |d| {max_d:.12}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}

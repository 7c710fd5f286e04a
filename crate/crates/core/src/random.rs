//! Seeded random test data. All generators are deterministic in the seed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::operator::OperatorMatrix;
use crate::repr::Signal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Complex sample with real and imaginary parts uniform on `[-1, 1)`.
pub fn complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn signal_from(rng: &mut impl Rng, n: usize) -> Signal {
    Signal::from_vec_unchecked((0..n).map(|_| complex(rng)).collect())
}

pub fn signal(n: usize, seed: u64) -> Signal {
    signal_from(&mut rng(seed), n)
}

pub fn operator_from(rng: &mut impl Rng, rows: usize, cols: usize) -> OperatorMatrix {
    OperatorMatrix::from_matrix_unchecked(DMatrix::from_fn(rows, cols, |_, _| complex(rng)))
}

pub fn operator(rows: usize, cols: usize, seed: u64) -> OperatorMatrix {
    operator_from(&mut rng(seed), rows, cols)
}

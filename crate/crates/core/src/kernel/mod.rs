//! Operators, their kernels, and the maps between them.

mod atomic;
mod bijection;
mod constants;
mod galerkin;
mod projective;
mod regularizer;

pub use atomic::{atomic_decompose, AtomicDecomposition};
pub use bijection::{
    distinguishing_pair, kernel_from_operator, operator_from_kernel, BilinearForm, FormValue,
    KernelRecovery,
};
pub use constants::{window_constants, WindowConstants};
pub use galerkin::{apply_via_factorization, galerkin_kernel, lift_operator, LiftedOperator};
pub use projective::{projective_tensor_bound, ProjectiveBound};
pub use regularizer::regularizer_check;

pub(crate) use constants::{gram, window_constants_of};

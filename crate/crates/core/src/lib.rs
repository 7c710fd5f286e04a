//! Finite-dimensional coorbit kernel theorems.
//!
//! Signals live on `Z_N`. Two families of frames are provided: Gabor systems
//! generated by the projective Weyl-Heisenberg representation on a
//! time-frequency lattice, and periodized dyadic wavelet bases from an
//! orthogonal filter bank. On top of the analysis/synthesis pair the crate
//! builds
//!
//! - the tensor transform `V_Psi K` of an operator kernel and the Galerkin
//!   kernel `k_A(l1, l2) = <A pi1(l1) psi1, pi2(l2) psi2>`,
//! - the lifted coefficient operator with `A = V2^* A_lift V1`,
//! - weighted `l^p` norms and the two sup/sum mixed norms,
//! - exact Schur-test norms with independent extreme-point oracles, and
//! - boundedness reports for operators between weighted coorbit spaces
//!   (modulation spaces, Besov-type sequence spaces, and mixed pairs).
//!
//! ```
//! use coorbit::prelude::*;
//!
//! let frame = FrameSpec::parseval_gabor(periodized_gaussian(8)?)?;
//! let f = coorbit::random::signal(8, 1);
//! let coeffs = analyze(&f, &frame)?;
//! let back = synthesize(&coeffs, &frame)?;
//! assert!(back.sub(&f)?.norm() < 1e-10 * f.norm());
//! # Ok::<(), coorbit::Error>(())
//! ```

pub mod cli;
mod error;
pub mod io;
pub mod kernel;
pub mod norms;
mod operator;
pub mod presets;
pub mod random;
pub mod repr;
pub mod schur;
pub mod transforms;

pub use error::{Error, Result};
pub use operator::OperatorMatrix;

pub mod prelude {
    pub use crate::kernel::*;
    pub use crate::norms::*;
    pub use crate::repr::*;
    pub use crate::schur::*;
    pub use crate::transforms::*;
    pub use crate::{Error, OperatorMatrix, Result};
}

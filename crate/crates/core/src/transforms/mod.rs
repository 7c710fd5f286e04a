//! Analysis and synthesis for both representations, frame operators, the
//! canonical dual, and the tensor-product transform of operator kernels.
//!
//! The direct inner-product definition of the analysis operator is the
//! ground truth; FFT and filter-bank evaluation are checked against it.

mod analysis;
mod frame;
mod tensor;

pub use analysis::{analyze, analyze_fast, reproducing_projection, synthesize, CoeffField1D};
pub use frame::{
    dual_frame, dual_window, frame_operator, normalize_frame, periodized_gaussian, DualFrame,
    FrameSpec, FrameSystem, MIN_FRAME_EIGENVALUE, PARSEVAL_TOL, TIGHTNESS_TOL,
};
pub use tensor::{tensor_analysis, tensor_synthesis, CoeffField2D};

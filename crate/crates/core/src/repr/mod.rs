//! Finite models of the Weyl-Heisenberg and dyadic affine representations,
//! their lattices, and weight families.

mod affine;
mod lattice;
mod signal;
mod weight;
mod weyl_heisenberg;

pub use affine::{affine_atom, FilterPair};
pub use lattice::{
    AffineLattice, AffinePoint, Band, Lattice, LatticePoint, TfLattice, TfPoint,
};
pub use signal::Signal;
pub use weight::{check_moderate, weight_eval, Weight};
pub use weyl_heisenberg::{cocycle, tf_shift, tf_shift_matrix};

#[cfg(test)]
pub(crate) use weyl_heisenberg::root_of_unity;

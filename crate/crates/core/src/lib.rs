//! Exact-arithmetic toolkit for the SL(3,C) 3-spinor formalism.
//!
//! The crate realizes, entirely over Gaussian rationals:
//!
//! * the cubic form on 9-dimensional momentum space and its totally
//!   symmetric coefficient tensor ([`finsler`]);
//! * the linear bijection between 9-momenta and Hermitian 3x3 matrices,
//!   with the determinant identity, cofactors, and the SL(3,C) action
//!   that leaves the cubic form invariant ([`trispinor_map`]);
//! * the nine 12x12 delta matrices, their block construction, the quartic
//!   annihilating identity, and the generalized Duffin-Kemmer relations
//!   ([`delta`]);
//! * the classical 5x5 Duffin-Kemmer baseline for comparison
//!   ([`duffin_kemmer`]);
//! * the 12-component wave function, the quadratic 3-spinor system and its
//!   momentum-linear form, exact solution spaces, and the mass-shell
//!   projector ([`wave`]);
//! * seeded, reproducible verification sweeps over all of the above
//!   ([`verify`]), data-parallel by default (`parallel` feature) with a
//!   sequential fallback.
//!
//! Every check is an exact identity: there are no tolerances anywhere.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod finsler;
pub mod trispinor_map;
pub mod algebra;
pub mod delta;
pub mod duffin_kemmer;
pub mod wave;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::MatrixCN;
pub use scalar::{GaussianRational, Rational};

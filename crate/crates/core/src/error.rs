//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: String },

    #[error("index out of range: {context}")]
    IndexOutOfRange { context: String },

    #[error("matrix is not Hermitian: entry ({row},{col}) = {value} but the conjugate of ({col},{row}) is {conjugate}")]
    NotHermitian {
        row: usize,
        col: usize,
        value: String,
        conjugate: String,
    },

    #[error("matrix is not unimodular: det = {det}")]
    NotUnimodular { det: String },

    #[error("mass must be nonzero")]
    ZeroMass,

    #[error("off-shell input: cubic form {cubic} differs from M^3 = {mass_cubed}")]
    OffShell { cubic: String, mass_cubed: String },

    #[error("invalid {what}: {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("instance generator failed after {attempts} attempts")]
    GeneratorFailure { attempts: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact construction of pseudo H-type Lie algebras `n_{r,s}` from Clifford
//! module data.
//!
//! The pipeline is: build integer generators for `Cl_{r,s}` on a minimal
//! admissible module, pick an initial vector fixed by a set of commuting
//! involutions, span an integral basis by Clifford words, and read off the
//! structure constants `[v_a, v_b] = Σ_k c^k_{ab} z_k`. Every step is checked
//! in exact integer arithmetic.

pub mod basis_builder;
pub mod clifford_rep;
mod config_data;
pub mod exactlin;
pub mod golden;
pub mod lie_algebra;
pub mod pipeline;
pub mod report;
pub mod words;

use thiserror::Error;

use crate::words::Signature;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("signature ({r},{s}) out of range: need 1 <= r+s <= 8")]
    SignatureRange { r: usize, s: usize },
    #[error("letter J{letter} out of range for signature {sig}")]
    LetterRange { letter: usize, sig: Signature },
    #[error("cannot parse {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("no configuration is tabulated for signature {0}")]
    NotTabulated(Signature),
    #[error("fixed subspace is zero: {0}")]
    ZeroSubspace(String),
    #[error("no admissible initial vector: {0}")]
    NoAdmissibleVector(String),
    #[error("basis is degenerate: {0}")]
    BasisDegeneracy(String),
    #[error("construction bug: {0}")]
    Construction(String),
    #[error("golden data: {0}")]
    Golden(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Simulation and analysis toolkit for Pauli channel learning.
//!
//! The crate is organized around the binary symplectic representation of
//! Pauli strings:
//!
//! - [`pauli`]: 2n-bit Pauli labels, the symplectic inner product, and the
//!   fast Walsh-Hadamard transform over `Z_2^{2n}`.
//! - [`channel`]: Pauli channels in both the error-rate and eigenvalue
//!   pictures, kept in sync through the transform.
//! - [`probe`]: entangled and Werner probe states, Bell-measurement outcome
//!   distributions, unbiased eigenvalue estimators, and Hoeffding sample
//!   planning.
//! - [`cover`]: stabilizer groups over GF(2), uniform covering families,
//!   the density-based greedy cover, and syndrome-measurement estimation.
//! - [`bounds`]: closed-form sample-complexity bounds and a runnable
//!   hypothesis-testing game.
//! - [`oracle`]: dense matrix reference implementations used to validate
//!   every closed form at small qubit counts.

pub mod bounds;
pub mod channel;
pub mod cover;
mod gf2;
pub mod oracle;
pub mod pauli;
pub mod probe;
pub mod seed;

pub use channel::PauliChannel;
pub use pauli::{PauliLetter, PauliString, RealFunctionOnPaulis, Transform};
pub use probe::{AlphaProbe, OutcomeRecord, ProbeSpec, WernerProbe};

/// Errors shared by all modules of the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit count {n} exceeds the supported maximum {max}")]
    TooManyQubits { n: usize, max: usize },

    #[error("array length {len} is not 4^n for any n within the qubit cap")]
    BadArrayLength { len: usize },

    #[error("invalid channel: {reason}")]
    InvalidChannel { reason: String },

    #[error("{what} out of range: {details}")]
    OutOfRange { what: &'static str, details: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("probe is degenerate: E(b) = 0 for a targeted b")]
    DegenerateProbe,

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("Pauli string is not in the system image of the group")]
    NotCovered,

    #[error("dense oracle capacity exceeded: dim {dim} > {cap}")]
    OracleCapacity { dim: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

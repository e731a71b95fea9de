//! Toolkit for the Dirac-Sidharth equation, the Dirac equation extended by
//! the Planck-scale correction term that follows from the Snyder-modified
//! energy-momentum relation `E² = c²p² + m²c⁴ + α(c/ħ)²ℓ²p⁴`.
//!
//! The crate is organised around four layers:
//!
//! * [`algebra`] — Pauli matrices, Kronecker products, gamma-matrix
//!   representations and their algebraic invariants,
//! * [`dispersion`] — the modified energy-momentum relation, energy branches
//!   and group velocity,
//! * [`plane_wave`] — momentum-space spinor solutions: helicity spinors, the
//!   effective 2×2 Hamiltonian, the positive-energy 4-spinor and the χ–φ
//!   two-spinor system,
//! * [`evolution`] — exact spectral time evolution of 1D spinor wavepackets
//!   on a periodic momentum grid.
//!
//! All internal computation uses natural units, ħ = c = 1.

// Small dense matrix kernels read better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod dispersion;
pub mod evolution;
pub mod numeric;
pub mod plane_wave;

/// Double-precision complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;

/// Error type shared by all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Structurally invalid input value.
    #[error("validation error: {0}")]
    Validation(String),
    /// API misuse (mismatched tags, out-of-range indices).
    #[error("usage error: {0}")]
    Usage(String),
    /// Numerical failure inside an otherwise valid computation.
    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

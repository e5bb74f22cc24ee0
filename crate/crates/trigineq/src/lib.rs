//! Exact-arithmetic positivity certificates for trigonometric sums.
//!
//! The library turns finite sine/cosine sums with rational coefficients into
//! algebraic polynomials via Chebyshev conversion, then proves positivity on
//! intervals with Sturm root counting over exact rationals. A high-precision
//! floating point oracle cross-checks every exact result, and a power-series
//! engine certifies absolute monotonicity of a two-parameter function family.
//!
//! Modules:
//!
//! - [`rat`], [`poly`], [`sturm`]: arbitrary-precision rationals, dense
//!   polynomial algebra, and Sturm chains.
//! - [`cheb`]: Chebyshev tables and the half-angle algebraic form.
//! - [`sums`]: the catalog of trigonometric sum families and evaluators.
//! - [`hp`]: high-precision floating point evaluation (oracle path).
//! - [`verify`]: positivity certificates, lemma checkers, sharpness probes.
//! - [`series`]: truncated power series and absolute-monotonicity checks.
//! - [`report`], [`cli`]: deterministic JSON/CSV reports and the CLI driver.

pub mod cheb;
pub mod cli;
pub mod hp;
pub mod poly;
pub mod rat;
pub mod report;
pub mod series;
pub mod sturm;
pub mod sums;
pub mod verify;

pub use poly::Poly;
pub use rat::Rat;
pub use sturm::SturmChain;
pub use sums::{FamilyId, TrigSum};

use thiserror::Error;

/// Errors produced by the exact-arithmetic layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    #[error("Sturm chain of the zero polynomial")]
    ZeroPolynomial,
    #[error("angle {0} has no rational half-angle cosine; use the grid path")]
    IrrationalAngle(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("power series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("|omega| must be <= 1, got {0}")]
    OmegaOutOfRange(String),
    #[error("invalid decimal literal: {0}")]
    BadDecimal(String),
    #[error("{0}")]
    Config(String),
}

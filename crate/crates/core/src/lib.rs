//! Exact and numerical tools for entrywise positivity, Gegenbauer
//! polynomials, Delsarte linear-programming bounds on spherical codes, and
//! lattice packing invariants.
//!
//! Everything that is a certificate (polynomial nonpositivity, Gegenbauer
//! coefficients, bounds, lattice minima and kissing numbers) is computed in
//! exact rational or integer arithmetic. Floating point is reserved for
//! eigenvalue checks, linear programming and densities.

// Dense matrix code reads better with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod delsarte;
pub mod entrywise;
pub mod gegenbauer;
pub mod json;
pub mod lattice;
pub mod polycore;
pub mod schurdet;

pub use polycore::{rat, Poly, Rational};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error(transparent)]
    Certificate(Box<delsarte::Rejection>),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("distance {distance} between points {i} and {j} exceeds pi")]
    Diameter { i: usize, j: usize, distance: f64 },
    #[error("integer overflow during lattice enumeration")]
    Overflow,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<delsarte::Rejection> for Error {
    fn from(r: delsarte::Rejection) -> Self {
        Error::Certificate(Box::new(r))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

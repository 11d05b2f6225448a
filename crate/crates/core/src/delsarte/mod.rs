//! Linear-programming upper bounds for spherical codes `A(n, ψ)`.
//!
//! A bound is certified by a polynomial `f = Σ c_k G_k^{(n)}` with all
//! `c_k >= 0`, `c_0 > 0` and `f <= 0` on `[-1, cos ψ]`; then
//! `A(n, ψ) <= f(1) / c_0`. Angles are carried as their cosines so the
//! standard cases (`1/2`, `-1/2`, `-1`) stay exact.

mod certificate;
mod classical;
mod code;
mod lp;
pub mod simplex;

pub use certificate::{
    kissing_polynomial_24, kissing_polynomial_8, named_certificate, verify_certificate,
    BoundCertificate, CertificateJson, Rejection, FIXTURE_NAMES,
};
pub use classical::{
    blichfeldt_density, classical_upper_bounds, cohn_zhao, hermite_gamma_upper, ClassicalBounds,
};
pub use code::{code_upper_bound_check, SphericalCode};
pub use lp::{grid_points, lp_bound, LpBound, LpGridPoint};

//! Closed-form packing bounds, evaluated in floating point.
//!
//! The Kabatiansky–Levenshtein asymptotic `Δ <= 2^{-0.599 n (1 + o(1))}` is
//! not computed: its constant and validity window are not reproducible from
//! the statement alone.

use serde::Serialize;
use std::f64::consts::PI;

use crate::{Error, Result};

/// Blichfeldt: `Δ <= (n + 2)/2 · 2^{-n/2}`.
pub fn blichfeldt_density(n: u32) -> f64 {
    (n as f64 + 2.0) / 2.0 * 2f64.powf(-(n as f64) / 2.0)
}

/// Hermite: `γ_n <= (4/3)^{(n-1)/2}`.
pub fn hermite_gamma_upper(n: u32) -> f64 {
    (4.0f64 / 3.0).powf((n as f64 - 1.0) / 2.0)
}

/// Cohn–Zhao: `Δ <= sin(θ/2)^n · A(n, θ)` for `θ` in `[π/3, π]`.
pub fn cohn_zhao(n: u32, theta: f64, code_bound: f64) -> Result<f64> {
    if !(PI / 3.0 - 1e-15..=PI + 1e-15).contains(&theta) {
        return Err(Error::InvalidInput(format!(
            "angle {theta} outside [pi/3, pi]"
        )));
    }
    Ok((theta / 2.0).sin().powi(n as i32) * code_bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassicalBounds {
    pub dim: u32,
    pub blichfeldt_density: f64,
    pub hermite_gamma_upper: f64,
    pub cohn_zhao: Option<f64>,
}

pub fn classical_upper_bounds(
    n: u32,
    cohn_zhao_point: Option<(f64, f64)>,
) -> Result<ClassicalBounds> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension must be at least 2, got {n}")));
    }
    Ok(ClassicalBounds {
        dim: n,
        blichfeldt_density: blichfeldt_density(n),
        hermite_gamma_upper: hermite_gamma_upper(n),
        cohn_zhao: cohn_zhao_point
            .map(|(theta, a)| cohn_zhao(n, theta, a))
            .transpose()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_eight_values() {
        assert!((blichfeldt_density(8) - 0.3125).abs() < 1e-15);
        let h = hermite_gamma_upper(8);
        assert!((h - (4.0f64 / 3.0).powf(3.5)).abs() < 1e-15);
        // (4/3)^3 · sqrt(4/3) = (64/27) · 1.1547005...
        assert!((h - 2.737_068).abs() < 1e-6);
        assert!(h > 2.0);
        assert!((cohn_zhao(8, PI / 3.0, 240.0).unwrap() - 0.9375).abs() < 1e-12);
    }

    #[test]
    fn angle_range() {
        assert!(cohn_zhao(8, 0.5, 240.0).is_err());
        assert!(cohn_zhao(8, 4.0, 240.0).is_err());
        let r = classical_upper_bounds(8, Some((PI, 2.0))).unwrap();
        assert!((r.cohn_zhao.unwrap() - 2.0).abs() < 1e-12);
    }
}

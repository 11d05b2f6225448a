use serde::Serialize;

use super::matrix::SymMatrix;
use crate::Result;

/// Relative cutoff used when no explicit tolerance is given.
pub const DEFAULT_RELATIVE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsdReport {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
    /// Eigenvalues above the tolerance.
    pub rank: usize,
    /// `(negative, zero, positive)` counts under the tolerance.
    pub inertia: (usize, usize, usize),
    pub tolerance: f64,
    pub eigenvalues: Vec<f64>,
}

/// Tolerance `1e-10 · max |λ|`, the default for `psd_check`.
pub fn default_tolerance(eigenvalues: &[f64]) -> f64 {
    let scale = eigenvalues.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    DEFAULT_RELATIVE_TOL * scale
}

/// Full eigendecomposition; psd iff the least eigenvalue is `>= -tol`.
pub fn psd_check(a: &SymMatrix, tol: Option<f64>) -> Result<PsdReport> {
    let eigenvalues = a.eigenvalues();
    let tol = match tol {
        Some(t) if t >= 0.0 => t,
        Some(t) => {
            return Err(crate::Error::InvalidInput(format!(
                "tolerance must be nonnegative, got {t}"
            )))
        }
        None => default_tolerance(&eigenvalues),
    };
    let neg = eigenvalues.iter().filter(|&&v| v < -tol).count();
    let pos = eigenvalues.iter().filter(|&&v| v > tol).count();
    let zero = eigenvalues.len() - neg - pos;
    Ok(PsdReport {
        is_psd: neg == 0,
        min_eigenvalue: eigenvalues.first().copied().unwrap_or(0.0),
        rank: pos,
        inertia: (neg, zero, pos),
        tolerance: tol,
        eigenvalues,
    })
}

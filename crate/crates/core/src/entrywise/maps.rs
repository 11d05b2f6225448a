use serde::{Deserialize, Serialize};

use super::matrix::SymMatrix;
use crate::{Error, Result};

/// A scalar function applied to every entry, `f[A] = (f(a_ij))`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EntrywiseMap {
    /// `Σ c_k t^k`, coefficients in increasing degree.
    Polynomial { coeffs: Vec<f64> },
    /// `t^alpha`. Non-integer or negative exponents need positive entries.
    Power { alpha: f64 },
    /// Zero every entry with `|a_ij| < level`.
    HardThreshold { level: f64 },
}

fn is_nonneg_integer(alpha: f64) -> bool {
    alpha >= 0.0 && alpha.fract() == 0.0
}

pub fn apply_entrywise(map: &EntrywiseMap, a: &SymMatrix) -> Result<SymMatrix> {
    match map {
        EntrywiseMap::Polynomial { coeffs } => {
            a.map(|x| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c))
        }
        EntrywiseMap::Power { alpha } => {
            let alpha = *alpha;
            if is_nonneg_integer(alpha) {
                return a.map(|x| x.powi(alpha as i32));
            }
            for i in 0..a.n() {
                for j in i..a.n() {
                    if a.get(i, j) <= 0.0 {
                        return Err(Error::InvalidInput(format!(
                            "power {alpha} applied to nonpositive entry {} at ({i}, {j})",
                            a.get(i, j)
                        )));
                    }
                }
            }
            a.map(|x| x.powf(alpha))
        }
        EntrywiseMap::HardThreshold { level } => {
            if *level < 0.0 || level.is_nan() {
                return Err(Error::InvalidInput(format!(
                    "threshold level must be nonnegative, got {level}"
                )));
            }
            a.map(|x| if x.abs() < *level { 0.0 } else { x })
        }
    }
}

/// Entrywise (Hadamard) product.
pub fn schur_product(a: &SymMatrix, b: &SymMatrix) -> Result<SymMatrix> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    SymMatrix::from_fn(a.n(), |i, j| a.get(i, j) * b.get(i, j))
}

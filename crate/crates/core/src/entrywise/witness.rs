//! Searches for Jain matrices whose entrywise power is not psd.
//!
//! For distinct positive `x`, `(1 + x_i x_j)^α` is psd exactly when `α` is a
//! nonnegative integer or `α >= n - 2`. Outside that set a randomized search
//! finds a certificate quickly; inside it the search must come back empty.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::maps::{apply_entrywise, EntrywiseMap};
use super::matrix::SymMatrix;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WitnessSearch {
    pub seed: u64,
    pub trials: usize,
    /// Relative tolerance: a witness needs `λ_min < -tol · max(1, ρ)`.
    pub tol: f64,
}

impl Default for WitnessSearch {
    fn default() -> Self {
        WitnessSearch {
            seed: 0,
            trials: 200,
            tol: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerWitness {
    pub x: Vec<f64>,
    pub jain: Vec<Vec<f64>>,
    pub powered: Vec<Vec<f64>>,
    pub min_eigenvalue: f64,
    pub trial: usize,
}

pub fn jain_matrix(x: &[f64]) -> SymMatrix {
    SymMatrix::from_fn(x.len(), |i, j| 1.0 + x[i] * x[j]).expect("finite inputs")
}

/// Least eigenvalue of `(1 + x_i x_j)^α` and the spectral radius.
pub fn jain_power_spectrum(x: &[f64], alpha: f64) -> Result<(f64, f64)> {
    let powered = apply_entrywise(&EntrywiseMap::Power { alpha }, &jain_matrix(x))?;
    let eig = powered.eigenvalues();
    let rho = eig.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok((eig.first().copied().unwrap_or(0.0), rho))
}

fn sample_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        // log-uniform on [e^-2, e^2]: spread-out points give larger
        // negative eigenvalues than clustered ones.
        let mut x: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0f64..2.0).exp()).collect();
        x.sort_by(f64::total_cmp);
        if x.windows(2).all(|w| w[1] - w[0] > 1e-3 * w[1]) {
            return x;
        }
    }
}

pub fn power_preserver_witness(
    n: usize,
    alpha: f64,
    search: WitnessSearch,
) -> Result<Option<PowerWitness>> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension must be at least 2, got {n}")));
    }
    if !alpha.is_finite() {
        return Err(Error::InvalidInput(format!("power must be finite, got {alpha}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    for trial in 0..search.trials {
        let x = sample_points(&mut rng, n);
        let (min_eig, rho) = jain_power_spectrum(&x, alpha)?;
        if min_eig < -search.tol * rho.max(1.0) {
            let jain = jain_matrix(&x);
            let powered = apply_entrywise(&EntrywiseMap::Power { alpha }, &jain)?;
            return Ok(Some(PowerWitness {
                x,
                jain: jain.rows(),
                powered: powered.rows(),
                min_eigenvalue: min_eig,
                trial,
            }));
        }
    }
    Ok(None)
}

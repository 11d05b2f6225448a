use serde::{Deserialize, Serialize};

use super::matrix::SymMatrix;
use crate::{Error, Result};

/// Finite positive combination of point masses.
#[derive(Clone, Debug, PartialEq)]
pub struct AtomicMeasure {
    atoms: Vec<(f64, f64)>,
}

/// Wire form `{"atoms": [[location, mass], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeasureJson {
    pub atoms: Vec<(f64, f64)>,
}

impl AtomicMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidInput("measure has no atoms".into()));
        }
        for (k, &(loc, mass)) in atoms.iter().enumerate() {
            if !loc.is_finite() || !(mass > 0.0 && mass.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "atom {k} needs a finite location and positive mass, got ({loc}, {mass})"
                )));
            }
            if atoms[..k].iter().any(|&(l, _)| l == loc) {
                return Err(Error::InvalidInput(format!("repeated atom location {loc}")));
            }
        }
        Ok(AtomicMeasure { atoms })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn from_json(json: &MeasureJson) -> Result<Self> {
        Self::new(json.atoms.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentKind {
    /// `H_ij = Σ mass · loc^(i+j)`: moments of a measure on the line.
    Hankel,
    /// `T_ij = Σ mass · cos((i-j) · loc)`: real Fourier coefficients of a
    /// symmetric measure on the circle, locations read as angles in `[0, π]`.
    Toeplitz,
}

pub fn moment_matrix(kind: MomentKind, measure: &AtomicMeasure, size: usize) -> Result<SymMatrix> {
    if size == 0 {
        return Err(Error::InvalidInput("moment matrix size must be at least 1".into()));
    }
    if kind == MomentKind::Toeplitz {
        if let Some(&(loc, _)) = measure
            .atoms
            .iter()
            .find(|(l, _)| !(0.0..=std::f64::consts::PI).contains(l))
        {
            return Err(Error::InvalidInput(format!(
                "toeplitz atom angle {loc} outside [0, pi]"
            )));
        }
    }
    SymMatrix::from_fn(size, |i, j| {
        measure
            .atoms
            .iter()
            .map(|&(loc, mass)| match kind {
                MomentKind::Hankel => mass * loc.powi((i + j) as i32),
                MomentKind::Toeplitz => mass * ((i as f64 - j as f64) * loc).cos(),
            })
            .sum()
    })
}

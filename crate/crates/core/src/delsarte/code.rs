use num_traits::ToPrimitive;

use super::certificate::BoundCertificate;
use crate::polycore::rational::to_f64;
use crate::{Error, Result};

/// Finite set of unit vectors; `max_cosine` is the largest pairwise inner
/// product.
#[derive(Clone, Debug, PartialEq)]
pub struct SphericalCode {
    dim: usize,
    points: Vec<Vec<f64>>,
    max_cosine: f64,
}

const UNIT_TOL: f64 = 1e-12;

impl SphericalCode {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
            let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
            if (norm - 1.0).abs() > UNIT_TOL {
                return Err(Error::InvalidInput(format!("point {i} has norm {norm}")));
            }
        }
        let mut max_cosine = -1.0f64;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let dot: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
                max_cosine = max_cosine.max(dot);
            }
        }
        Ok(SphericalCode {
            dim,
            points,
            max_cosine,
        })
    }

    /// Rescales nonzero vectors to unit length first.
    pub fn from_directions(dim: usize, vectors: &[Vec<f64>]) -> Result<Self> {
        let points = vectors
            .iter()
            .map(|v| {
                let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                v.iter().map(|x| x / norm).collect()
            })
            .collect();
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn max_cosine(&self) -> f64 {
        self.max_cosine
    }
}

/// Soundness spot check: a code respecting the certificate's angle has at
/// most `bound` points. Evidence only, never a proof.
pub fn code_upper_bound_check(code: &SphericalCode, cert: &BoundCertificate) -> Result<bool> {
    if code.dim() != cert.dim as usize {
        return Err(Error::DimensionMismatch {
            expected: cert.dim as usize,
            got: code.dim(),
        });
    }
    let s = to_f64(&cert.cos_angle);
    if code.len() > 1 && code.max_cosine() > s + UNIT_TOL {
        return Err(Error::InvalidInput(format!(
            "code has inner product {} above the certificate threshold {s}",
            code.max_cosine()
        )));
    }
    let floor = cert.bound.floor().to_integer().to_usize().unwrap_or(usize::MAX);
    Ok(code.len() <= floor)
}

//! Euclidean and spherical embeddability of finite metric spaces.

use serde::Serialize;

use super::matrix::SymMatrix;
use super::psd::psd_check;
use crate::{Error, Result};

/// Distances among points `0..=n`; point `0` is the base point.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    d: SymMatrix,
}

impl DistanceMatrix {
    pub fn new(d: SymMatrix) -> Result<Self> {
        for i in 0..d.n() {
            if d.get(i, i) != 0.0 {
                return Err(Error::InvalidInput(format!(
                    "distance matrix has nonzero diagonal at {i}"
                )));
            }
            for j in i + 1..d.n() {
                if d.get(i, j) <= 0.0 {
                    return Err(Error::InvalidInput(format!(
                        "distance between distinct points {i} and {j} must be positive"
                    )));
                }
            }
        }
        Ok(DistanceMatrix { d })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(SymMatrix::from_rows(rows)?)
    }

    pub fn points(&self) -> usize {
        self.d.n()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d.get(i, j)
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.d
    }

    /// First `(i, j, k)` with `d_ij > d_ik + d_kj` beyond a `1e-12` slack.
    pub fn triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.points();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, j) > self.get(i, k) + self.get(k, j) + 1e-12 {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `CM'_ij = d_i0² + d_j0² - d_ij²` over `i, j = 1..n`.
    pub fn cayley_menger(&self) -> SymMatrix {
        let n = self.points().saturating_sub(1);
        SymMatrix::from_fn(n, |i, j| {
            let (a, b, c) = (self.get(i + 1, 0), self.get(j + 1, 0), self.get(i + 1, j + 1));
            a * a + b * b - c * c
        })
        .expect("finite distances give finite entries")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Embedding {
    Embedded {
        dimension: usize,
        points: Vec<Vec<f64>>,
    },
    /// The test matrix has this negative eigenvalue.
    NotEmbeddable { min_eigenvalue: f64 },
}

/// Rows of `V_r · sqrt(Λ_r)` for the eigenvalues above tolerance, so the
/// returned vectors have Gram matrix `m` up to rounding.
fn factor_gram(m: &SymMatrix, tol: f64) -> (usize, Vec<Vec<f64>>) {
    let pairs: Vec<_> = m
        .eigen_descending()
        .into_iter()
        .filter(|(l, _)| *l > tol)
        .collect();
    let r = pairs.len();
    let points = (0..m.n())
        .map(|i| pairs.iter().map(|(l, v)| v[i] * l.sqrt()).collect())
        .collect();
    (r, points)
}

/// Embeds in `R^r` with point 0 at the origin when the modified
/// Cayley–Menger matrix is positive semidefinite of rank `r`.
pub fn euclidean_embed(d: &DistanceMatrix) -> Result<Embedding> {
    let cm = d.cayley_menger();
    let report = psd_check(&cm, None)?;
    if !report.is_psd {
        return Ok(Embedding::NotEmbeddable {
            min_eigenvalue: report.min_eigenvalue,
        });
    }
    // ⟨x_i - x_0, x_j - x_0⟩ = CM'_ij / 2
    let gram = cm.map(|x| x / 2.0)?;
    let (r, rest) = factor_gram(&gram, report.tolerance / 2.0);
    let mut points = vec![vec![0.0; r]];
    points.extend(rest);
    Ok(Embedding::Embedded {
        dimension: r,
        points,
    })
}

/// Embeds on the unit sphere of `R^r` (geodesic distance) when no distance
/// exceeds π and `cos[D]` is positive semidefinite of rank `r`.
pub fn sphere_embed(d: &DistanceMatrix) -> Result<Embedding> {
    let n = d.points();
    for i in 0..n {
        for j in i + 1..n {
            let distance = d.get(i, j);
            if distance > std::f64::consts::PI {
                return Err(Error::Diameter { i, j, distance });
            }
        }
    }
    let c = d.matrix().map(f64::cos)?;
    let report = psd_check(&c, None)?;
    if !report.is_psd {
        return Ok(Embedding::NotEmbeddable {
            min_eigenvalue: report.min_eigenvalue,
        });
    }
    let (r, points) = factor_gram(&c, report.tolerance);
    Ok(Embedding::Embedded {
        dimension: r,
        points,
    })
}

/// Pairwise Euclidean distances.
pub fn euclidean_distances(points: &[Vec<f64>]) -> SymMatrix {
    SymMatrix::from_fn(points.len(), |i, j| {
        points[i]
            .iter()
            .zip(&points[j])
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    })
    .expect("finite coordinates")
}

/// Pairwise geodesic distances `arccos⟨x_i, x_j⟩` on the unit sphere.
pub fn geodesic_distances(points: &[Vec<f64>]) -> SymMatrix {
    SymMatrix::from_fn(points.len(), |i, j| {
        if i == j {
            return 0.0;
        }
        let dot: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
        dot.clamp(-1.0, 1.0).acos()
    })
    .expect("finite coordinates")
}

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dense real symmetric matrix. Symmetric by construction: every
/// constructor reads the upper triangle and mirrors it.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

/// Wire form `{"n": int, "rows": [[float, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<f64>>,
}

const SYMMETRY_TOL: f64 = 1e-12;

impl SymMatrix {
    /// Builds from `f(i, j)` evaluated on `i <= j` only.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                if !v.is_finite() {
                    return Err(Error::NonFinite(i, j));
                }
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        Ok(SymMatrix { n, data })
    }

    /// Full square rows; asymmetry above `1e-12` is rejected.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (rows[i][j], rows[j][i]);
                if (a - b).abs() > SYMMETRY_TOL {
                    return Err(Error::InvalidInput(format!(
                        "matrix is not symmetric at ({i}, {j}): {a} vs {b}"
                    )));
                }
            }
        }
        Self::from_fn(n, |i, j| rows[i][j])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 }).unwrap()
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_, _| 1.0).unwrap()
    }

    /// Gram matrix of the given vectors.
    pub fn gram(vectors: &[Vec<f64>]) -> Result<Self> {
        Self::from_fn(vectors.len(), |i, j| {
            vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum()
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            n: self.n,
            rows: self.rows(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        if json.rows.len() != json.n {
            return Err(Error::DimensionMismatch {
                expected: json.n,
                got: json.rows.len(),
            });
        }
        Self::from_rows(&json.rows)
    }

    pub fn map(&self, mut f: impl FnMut(f64) -> f64) -> Result<Self> {
        Self::from_fn(self.n, |i, j| f(self.get(i, j)))
    }

    fn to_nalgebra(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.n, self.n, &self.data)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut values: Vec<f64> = SymmetricEigen::new(self.to_nalgebra())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        values.sort_by(f64::total_cmp);
        values
    }

    /// Eigenpairs sorted by descending eigenvalue, each eigenvector's first
    /// component of magnitude above `1e-12` made positive.
    pub fn eigen_descending(&self) -> Vec<(f64, Vec<f64>)> {
        if self.n == 0 {
            return Vec::new();
        }
        let eig = SymmetricEigen::new(self.to_nalgebra());
        let mut pairs: Vec<(f64, Vec<f64>)> = (0..self.n)
            .map(|k| {
                let mut v: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
                if let Some(first) = v.iter().find(|x| x.abs() > 1e-12) {
                    if *first < 0.0 {
                        v.iter_mut().for_each(|x| *x = -*x);
                    }
                }
                (eig.eigenvalues[k], v)
            })
            .collect();
        pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
        pairs
    }
}

//! Dense two-phase tableau simplex.
//!
//! Sized for the Delsarte programs here: a handful of rows and a few
//! thousand columns. Entering columns are priced by most negative reduced
//! cost; after a degenerate pivot the solver switches to Bland's rule until
//! the objective moves again, which rules out cycling.

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `minimize objective · x` subject to the constraints and `x >= 0`.
#[derive(Clone, Debug, Default)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    /// Simplex multipliers `c_B B⁻¹`, one per constraint in its original
    /// orientation.
    pub duals: Vec<f64>,
    pub pivots: usize,
}

const EPS: f64 = 1e-11;
const MAX_PIVOTS: usize = 100_000;

struct Tableau {
    /// `rows × (cols + 1)`, the last column is the right-hand side.
    a: Vec<Vec<f64>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize, cost: &mut [f64]) {
        let p = self.a[row][col];
        for v in self.a[row].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.a[row].clone();
        for (r, line) in self.a.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let f = line[col];
            if f != 0.0 {
                for (v, pv) in line.iter_mut().zip(&pivot_row) {
                    *v -= f * pv;
                }
            }
        }
        let f = cost[col];
        if f != 0.0 {
            for (v, pv) in cost.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
        }
        self.basis[row] = col;
    }

    /// Runs to optimality on the reduced-cost row `cost` (last entry is
    /// minus the objective value). Columns with `allowed[j] == false` never
    /// enter.
    fn optimize(&mut self, cost: &mut [f64], allowed: &[bool], pivots: &mut usize) -> Result<()> {
        let mut bland = false;
        loop {
            let candidates = (0..self.cols).filter(|&j| allowed[j] && cost[j] < -EPS);
            let entering = if bland {
                candidates.min()
            } else {
                candidates.min_by(|&a, &b| cost[a].total_cmp(&cost[b]))
            };
            let Some(col) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, f64)> = None;
            for (r, line) in self.a.iter().enumerate() {
                let coef = line[col];
                if coef > EPS {
                    let ratio = line[self.cols] / coef;
                    let better = match best {
                        None => true,
                        Some((br, bratio)) => {
                            ratio < bratio - EPS
                                || (ratio <= bratio + EPS && self.basis[r] < self.basis[br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            let Some((row, step)) = best else {
                return Err(Error::Unbounded);
            };
            bland = step <= EPS;
            self.pivot(row, col, cost);
            *pivots += 1;
            if *pivots > MAX_PIVOTS {
                return Err(Error::InvalidInput("simplex pivot limit exceeded".into()));
            }
        }
    }
}

impl LinearProgram {
    pub fn solve(&self) -> Result<LpSolution> {
        let n = self.objective.len();
        let m = self.constraints.len();
        for c in &self.constraints {
            if c.coeffs.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: c.coeffs.len(),
                });
            }
        }
        // Normalize to nonnegative right-hand sides.
        let rows: Vec<(Vec<f64>, Relation, f64, f64)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs < 0.0 {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), rel, -c.rhs, -1.0)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs, 1.0)
                }
            })
            .collect();

        // Column layout: originals, one slack/surplus per inequality, one
        // artificial per >= or = row.
        let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
        let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
        let cols = n + n_slack + n_art;
        let mut a = vec![vec![0.0; cols + 1]; m];
        let mut basis = vec![0; m];
        // Column whose original coefficient is +e_r in row r.
        let mut unit_col = vec![0; m];
        let (mut next_slack, mut next_art) = (n, n + n_slack);
        for (r, (coeffs, rel, rhs, _)) in rows.iter().enumerate() {
            a[r][..n].copy_from_slice(coeffs);
            a[r][cols] = *rhs;
            match rel {
                Relation::Le => {
                    a[r][next_slack] = 1.0;
                    basis[r] = next_slack;
                    unit_col[r] = next_slack;
                    next_slack += 1;
                }
                Relation::Ge => {
                    a[r][next_slack] = -1.0;
                    next_slack += 1;
                    a[r][next_art] = 1.0;
                    basis[r] = next_art;
                    unit_col[r] = next_art;
                    next_art += 1;
                }
                Relation::Eq => {
                    a[r][next_art] = 1.0;
                    basis[r] = next_art;
                    unit_col[r] = next_art;
                    next_art += 1;
                }
            }
        }
        let mut tab = Tableau { a, basis, cols };
        let mut pivots = 0;
        let is_art = |j: usize| j >= n + n_slack && j < cols;

        if n_art > 0 {
            let mut cost = vec![0.0; cols + 1];
            for j in n + n_slack..cols {
                cost[j] = 1.0;
            }
            for r in 0..m {
                if is_art(tab.basis[r]) {
                    for j in 0..=cols {
                        cost[j] -= tab.a[r][j];
                    }
                }
            }
            let allowed = vec![true; cols];
            tab.optimize(&mut cost, &allowed, &mut pivots)?;
            if -cost[cols] > 1e-9 {
                return Err(Error::Infeasible);
            }
            // Drive zero-level artificials out of the basis where possible.
            for r in 0..m {
                if is_art(tab.basis[r]) {
                    if let Some(col) = (0..n + n_slack).find(|&j| tab.a[r][j].abs() > EPS) {
                        tab.pivot(r, col, &mut cost);
                    }
                }
            }
        }

        let mut cost = vec![0.0; cols + 1];
        cost[..n].copy_from_slice(&self.objective);
        for r in 0..m {
            let b = tab.basis[r];
            let cb = if b < n { self.objective[b] } else { 0.0 };
            if cb != 0.0 {
                for j in 0..=cols {
                    cost[j] -= cb * tab.a[r][j];
                }
            }
        }
        let allowed: Vec<bool> = (0..cols).map(|j| !is_art(j)).collect();
        tab.optimize(&mut cost, &allowed, &mut pivots)?;

        let mut x = vec![0.0; n];
        for (r, &b) in tab.basis.iter().enumerate() {
            if b < n {
                x[b] = tab.a[r][cols];
            }
        }
        let objective = self.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
        // Reduced cost of the unit column of row r is -π_r.
        let duals = (0..m).map(|r| -cost[unit_col[r]] * rows[r].3).collect();
        Ok(LpSolution {
            x,
            objective,
            duals,
            pivots,
        })
    }
}

//! The Delsarte linear program on a grid, followed by exact repair.

use num_traits::{One, Zero};
use serde::Serialize;

use super::certificate::{verify_certificate, BoundCertificate};
use super::simplex::{Constraint, LinearProgram, Relation};
use crate::gegenbauer::GegenbauerFamily;
use crate::polycore::rational::{round_to_denominator, to_f64};
use crate::polycore::{certify_nonpositive, int, Interval, Poly, Rational};
use crate::{Error, Result};

/// Rounding denominators tried in turn, `2^20 .. 2^40`.
const DENOMINATOR_EXPONENTS: [u32; 6] = [20, 24, 28, 32, 36, 40];
const SLACK_BISECTIONS: usize = 40;

#[derive(Clone, Debug)]
pub struct LpBound {
    pub dim: u32,
    pub degree: usize,
    pub grid: usize,
    /// `c_0 = 1, c_1 .. c_d` from the floating solve.
    pub coeffs: Vec<f64>,
    /// `f(1) = Σ c_k` at the floating optimum.
    pub float_bound: f64,
    pub certificate: std::result::Result<BoundCertificate, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LpGridPoint {
    pub t: f64,
    pub f: f64,
}

/// `grid + 1` equally spaced points of `[-1, s]`, both ends included.
pub fn grid_points(s: f64, grid: usize) -> Vec<f64> {
    (0..=grid)
        .map(|i| {
            if i == grid {
                s
            } else {
                -1.0 + (s + 1.0) * i as f64 / grid as f64
            }
        })
        .collect()
}

/// Solves `min f(1)` over `f = 1 + Σ_{k=1}^{d} c_k G_k`, `c_k >= 0`, subject
/// to `f(t_i) <= 0` on the grid, then rounds to rationals, lowers `c_0` by
/// the least slack that makes `f <= 0` on all of `[-1, s]`, and verifies the
/// result exactly.
///
/// The simplex runs on the dual program (`d` rows, `grid + 1` columns); the
/// Gegenbauer coefficients are read off its multipliers.
pub fn lp_bound(n: u32, s: &Rational, d: usize, grid: usize) -> Result<LpBound> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension must be at least 2, got {n}")));
    }
    if s < &int(-1) || s >= &int(1) {
        return Err(Error::InvalidInput("cosine threshold must lie in [-1, 1)".into()));
    }
    if d == 0 {
        // f = c_0 > 0 can never be <= 0.
        return Err(Error::Infeasible);
    }
    if grid < d + 2 {
        return Err(Error::InvalidInput(format!(
            "grid must be at least degree + 2 = {}, got {grid}",
            d + 2
        )));
    }
    let family = GegenbauerFamily::new(n, d)?;
    let sf = to_f64(s);
    let ts = grid_points(sf, grid);
    // values[k][i] = G_k(t_i)
    let values: Vec<Vec<f64>> = (1..=d)
        .map(|k| ts.iter().map(|&t| family.get(k).eval_f64(t)).collect())
        .collect();

    // Dual: max Σ y_i s.t. Σ_i y_i (-G_k(t_i)) <= 1 for k = 1..d, y >= 0.
    let lp = LinearProgram {
        objective: vec![-1.0; ts.len()],
        constraints: values
            .iter()
            .map(|row| Constraint {
                coeffs: row.iter().map(|v| -v).collect(),
                relation: Relation::Le,
                rhs: 1.0,
            })
            .collect(),
    };
    let sol = match lp.solve() {
        Ok(sol) => sol,
        Err(Error::Unbounded) => return Err(Error::Infeasible),
        Err(e) => return Err(e),
    };
    let mut coeffs = vec![1.0];
    coeffs.extend(sol.duals.iter().map(|p| (-p).max(0.0)));
    let float_bound = coeffs.iter().sum();

    let certificate = repair(n, s, &family, &coeffs);
    Ok(LpBound {
        dim: n,
        degree: d,
        grid,
        coeffs,
        float_bound,
        certificate,
    })
}

/// Least `eps` (up to bisection precision) with `f - eps <= 0` on `iv`, or
/// `None` if even `eps = 1` fails.
fn slack_needed(f: &Poly, iv: &Interval) -> Option<Rational> {
    if certify_nonpositive(f, iv) {
        return Some(Rational::zero());
    }
    let shifted = |eps: &Rational| f - &Poly::constant(eps.clone());
    let mut hi = Rational::new(1.into(), (1u64 << 40).into());
    while !certify_nonpositive(&shifted(&hi), iv) {
        hi *= int(2);
        if hi >= Rational::one() {
            return None;
        }
    }
    let mut lo = Rational::zero();
    for _ in 0..SLACK_BISECTIONS {
        let mid = (&lo + &hi) / int(2);
        if certify_nonpositive(&shifted(&mid), iv) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

fn repair(
    n: u32,
    s: &Rational,
    family: &GegenbauerFamily,
    coeffs: &[f64],
) -> std::result::Result<BoundCertificate, String> {
    let iv = Interval::new(int(-1), s.clone()).map_err(|e| e.to_string())?;
    let mut last_reason = String::from("no rounding attempted");
    for exp in DENOMINATOR_EXPONENTS {
        let mut rounded: Vec<Rational> = coeffs
            .iter()
            .map(|&c| round_to_denominator(c.max(0.0), 1u64 << exp))
            .collect();
        rounded[0] = Rational::one();
        let f = family.expand(&rounded);
        let Some(eps) = slack_needed(&f, &iv) else {
            last_reason = format!("slack repair at denominator 2^{exp} needs eps >= 1");
            continue;
        };
        let repaired = &f - &Poly::constant(eps);
        match verify_certificate(n, s, &repaired) {
            Ok(cert) => return Ok(cert),
            Err(e) => last_reason = format!("denominator 2^{exp}: {e}"),
        }
    }
    Err(format!("slack repair failed: {last_reason}"))
}

impl LpBound {
    /// The floating polynomial `Σ c_k G_k` sampled on `[-1, 1]`.
    pub fn sample(&self, points: usize) -> Result<Vec<LpGridPoint>> {
        let family = GegenbauerFamily::new(self.dim, self.degree)?;
        Ok((0..points)
            .map(|i| {
                let t = -1.0 + 2.0 * i as f64 / (points.max(2) - 1) as f64;
                let f = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * family.get(k).eval_f64(t))
                    .sum();
                LpGridPoint { t, f }
            })
            .collect())
    }
}

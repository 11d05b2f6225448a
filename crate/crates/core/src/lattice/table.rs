//! Known Hermite constants, packing densities and kissing numbers, recomputed
//! from the named lattices.

use std::f64::consts::PI;

use serde::Serialize;

use super::{lattice_invariants, standard_lattice, unit_ball_volume};
use crate::polycore::{format_rational, int, rat, Rational};
use crate::Result;

const DENSITY_REL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub lattice: String,
    #[serde(with = "crate::polycore::rational::serde_rational")]
    pub lambda1_sq: Rational,
    #[serde(with = "crate::polycore::rational::serde_rational")]
    pub hermite_pow_n: Rational,
    #[serde(with = "crate::polycore::rational::serde_rational")]
    pub expected_hermite_pow_n: Rational,
    pub ball_volume: f64,
    pub density: f64,
    pub expected_density: f64,
    pub kissing: u64,
    pub expected_kissing: u64,
    pub matches: bool,
}

/// `γ_n ≤ γ_{n-1}^{(n-1)/(n-2)}`, checked exactly in the form
/// `(γ_nⁿ)^{n-2} ≤ (γ_{n-1}^{n-1})ⁿ`.
#[derive(Clone, Debug, Serialize)]
pub struct MordellCheck {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    pub mordell: Vec<MordellCheck>,
}

impl TableReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches) && self.mordell.iter().all(|m| m.holds)
    }
}

fn factorial(k: u32) -> f64 {
    (1..=k).map(f64::from).product()
}

/// `(n, lattice, γⁿ, Δ, kissing)` for the known optimal dimensions.
fn known_rows() -> Vec<(usize, &'static str, Rational, f64, u64)> {
    let (s2, s3) = (2f64.sqrt(), 3f64.sqrt());
    vec![
        (1, "Z1", int(1), 1.0, 2),
        (2, "A2", rat(4, 3), PI / (2.0 * s3), 6),
        (3, "A3", int(2), PI / (3.0 * s2), 12),
        (4, "D4", int(4), PI.powi(2) / 16.0, 24),
        (5, "D5", int(8), PI.powi(2) / (15.0 * s2), 40),
        (6, "E6", rat(64, 3), PI.powi(3) / (48.0 * s3), 72),
        (7, "E7", int(64), PI.powi(3) / 105.0, 126),
        (8, "E8", int(256), PI.powi(4) / 384.0, 240),
        (24, "Leech", num_traits::pow(int(4), 24), PI.powi(12) / factorial(12), 196560),
    ]
}

fn report(rows_wanted: impl Fn(usize) -> bool) -> Result<TableReport> {
    let mut rows = Vec::new();
    for (n, name, gamma, density, kissing) in known_rows() {
        if !rows_wanted(n) {
            continue;
        }
        let lattice = standard_lattice(name)?;
        let inv = lattice_invariants(&lattice);
        let hermite_pow_n = inv.hermite_pow_n();
        let matches = hermite_pow_n == gamma
            && inv.kissing == kissing
            && ((inv.density - density) / density).abs() <= DENSITY_REL_TOL;
        rows.push(TableRow {
            n,
            lattice: name.to_owned(),
            lambda1_sq: inv.lambda1_sq,
            hermite_pow_n,
            expected_hermite_pow_n: gamma,
            ball_volume: unit_ball_volume(n),
            density: inv.density,
            expected_density: density,
            kissing: inv.kissing,
            expected_kissing: kissing,
            matches,
        });
    }
    let mordell = rows
        .windows(2)
        .filter(|w| w[1].n == w[0].n + 1 && w[1].n >= 3)
        .map(|w| {
            let n = w[1].n;
            let lhs = num_traits::pow(w[1].hermite_pow_n.clone(), n - 2);
            let rhs = num_traits::pow(w[0].hermite_pow_n.clone(), n);
            MordellCheck {
                n,
                holds: lhs <= rhs,
                lhs: format_rational(&lhs),
                rhs: format_rational(&rhs),
            }
        })
        .collect();
    Ok(TableReport { rows, mordell })
}

/// Rows for `n = 1..=8` and, if requested, the Leech lattice in dimension 24
/// (whose 196560 minimal vectors dominate the running time).
pub fn table_report(include_leech: bool) -> Result<TableReport> {
    report(|n| n <= 8 || include_leech)
}

/// A single row, for any dimension in the table.
pub fn table_row(n: usize) -> Result<Option<TableRow>> {
    Ok(report(|m| m == n)?.rows.pop())
}

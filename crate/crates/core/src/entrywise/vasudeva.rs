use serde::Serialize;

use crate::{Error, Result};

/// The three conditions characterizing maps on `(0, ∞)` that preserve
/// positivity of 2x2 matrices, tested on samples.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VasudevaReport {
    pub nonnegative: bool,
    pub nondecreasing: bool,
    pub mult_midconvex: bool,
    pub negative_at: Option<f64>,
    pub decrease_between: Option<(f64, f64)>,
    /// `(x, sqrt(x·y), y)` with `f(sqrt(x·y))² > f(x) f(y)`.
    pub midconvex_violation: Option<(f64, f64, f64)>,
}

impl VasudevaReport {
    pub fn all_hold(&self) -> bool {
        self.nonnegative && self.nondecreasing && self.mult_midconvex
    }
}

const MATCH_TOL: f64 = 1e-12;

/// `samples` are `(x, f(x))` with `x` positive, distinct and increasing.
/// Midconvexity is tested on every pair whose geometric mean is itself a
/// sample point.
pub fn vasudeva_2x2_check(samples: &[(f64, f64)]) -> Result<VasudevaReport> {
    for (k, &(x, fx)) in samples.iter().enumerate() {
        if !x.is_finite() || x <= 0.0 || !fx.is_finite() {
            return Err(Error::InvalidInput(format!("sample {k} = ({x}, {fx}) is not admissible")));
        }
        if k > 0 && samples[k - 1].0 >= x {
            return Err(Error::InvalidInput("sample points must be strictly increasing".into()));
        }
    }
    let negative_at = samples.iter().find(|s| s.1 < 0.0).map(|s| s.0);
    let decrease_between = samples
        .windows(2)
        .find(|w| w[1].1 < w[0].1)
        .map(|w| (w[0].0, w[1].0));

    let mut midconvex_violation = None;
    'outer: for (i, &(x, fx)) in samples.iter().enumerate() {
        for &(y, fy) in samples.get(i + 2..).unwrap_or_default() {
            let g = (x * y).sqrt();
            let Some(&(m, fm)) = samples[i + 1..]
                .iter()
                .find(|s| (s.0 - g).abs() <= MATCH_TOL * g)
            else {
                continue;
            };
            let lhs = fm * fm;
            let rhs = fx * fy;
            if lhs > rhs + MATCH_TOL * lhs.abs().max(rhs.abs()) {
                midconvex_violation = Some((x, m, y));
                break 'outer;
            }
        }
    }
    Ok(VasudevaReport {
        nonnegative: negative_at.is_none(),
        nondecreasing: decrease_between.is_none(),
        mult_midconvex: midconvex_violation.is_none(),
        negative_at,
        decrease_between,
        midconvex_violation,
    })
}

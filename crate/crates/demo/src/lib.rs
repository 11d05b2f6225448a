//! Browser demo: Gegenbauer curves, Delsarte bounds and Jain matrix spectra.
//!
//! Exports return plain numbers or JSON strings so the page needs no
//! bindings beyond `wasm-bindgen` and the functions can be tested natively.

use positivity_core::delsarte::lp_bound;
use positivity_core::entrywise::jain_power_spectrum;
use positivity_core::gegenbauer::gegenbauer;
use positivity_core::polycore::format_rational;
use positivity_core::rat;
use serde_json::json;
use wasm_bindgen::prelude::*;

fn error(reason: impl ToString) -> String {
    json!({ "error": reason.to_string() }).to_string()
}

/// `G_k^{(n)}` at `samples` equally spaced points of `[-1, 1]`, with its
/// coefficients: `{"poly": "...", "t": [...], "y": [...]}`.
#[wasm_bindgen]
pub fn gegenbauer_curve(n: u32, k: usize, samples: usize) -> String {
    let g = match gegenbauer(n, k) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let samples = samples.max(2);
    let t: Vec<f64> = (0..samples)
        .map(|i| -1.0 + 2.0 * i as f64 / (samples - 1) as f64)
        .collect();
    let y: Vec<f64> = t.iter().map(|&t| g.eval_f64(t)).collect();
    json!({ "poly": g.to_string(), "t": t, "y": y }).to_string()
}

/// Solves the degree-`degree` Delsarte program for inner products at most
/// `cos_num / cos_den` and returns the optimum, the exact certified bound
/// (when repair succeeds) and the optimal polynomial sampled on `[-1, 1]`.
#[wasm_bindgen]
pub fn delsarte_bound(n: u32, cos_num: i32, cos_den: i32, degree: usize, grid: usize) -> String {
    if cos_den <= 0 {
        return error("denominator must be positive");
    }
    let s = rat(cos_num.into(), cos_den.into());
    let lp = match lp_bound(n, &s, degree, grid) {
        Ok(lp) => lp,
        Err(e) => return error(e),
    };
    let curve = match lp.sample(200) {
        Ok(points) => points,
        Err(e) => return error(e),
    };
    let (bound, bound_value, reason) = match &lp.certificate {
        Ok(c) => (
            Some(format_rational(&c.bound)),
            Some(positivity_core::polycore::rational::to_f64(&c.bound)),
            None,
        ),
        Err(r) => (None, None, Some(r.clone())),
    };
    json!({
        "float_bound": lp.float_bound,
        "coeffs": lp.coeffs,
        "bound": bound,
        "bound_value": bound_value,
        "reason": reason,
        "t": curve.iter().map(|p| p.t).collect::<Vec<_>>(),
        "f": curve.iter().map(|p| p.f).collect::<Vec<_>>(),
    })
    .to_string()
}

/// Spread-out positive points `e^{-1.5} .. e^{1.5}`.
fn jain_points(n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![1.0];
    }
    (0..n)
        .map(|i| (-1.5 + 3.0 * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// For each `α` in `steps` points of `[alpha_lo, alpha_hi]`, the least
/// eigenvalue of `(1 + x_i x_j)^α` divided by its spectral radius. Negative
/// values mark powers that do not preserve positivity in dimension `n`.
#[wasm_bindgen]
pub fn jain_min_eigenvalues(n: usize, alpha_lo: f64, alpha_hi: f64, steps: usize) -> Vec<f64> {
    let x = jain_points(n.max(1));
    let steps = steps.max(2);
    (0..steps)
        .map(|i| {
            let alpha = alpha_lo + (alpha_hi - alpha_lo) * i as f64 / (steps - 1) as f64;
            match jain_power_spectrum(&x, alpha) {
                Ok((min, rho)) if rho > 0.0 => min / rho,
                _ => f64::NAN,
            }
        })
        .collect()
}

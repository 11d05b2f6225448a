use std::path::Path;

use positivity_core::delsarte::{
    lp_bound, named_certificate, BoundCertificate, CertificateJson, FIXTURE_NAMES,
};
use positivity_core::entrywise::{
    euclidean_embed, power_preserver_witness, psd_check, sphere_embed, vasudeva_2x2_check,
    DistanceMatrix, Embedding, MatrixJson, SymMatrix, WitnessSearch,
};
use positivity_core::gegenbauer::{dim_spherical_harmonics, gegenbauer, to_gegenbauer_basis};
use positivity_core::json::{read_file, PolyJson, SamplesJson};
use positivity_core::lattice::{lattice_invariants, standard_lattice, table_report, LatticeInfoJson};
use positivity_core::polycore::{format_rational, parse_rational, Rational};
use positivity_core::schurdet::{random_instance, TruncatedSeries};
use positivity_core::{Error, Poly};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::text::{matrix, table, vector, yes_no};
use crate::{BoundCommand, CheckCommand, Command, Geometry, InputError, LatticeCommand, Outcome, SchurCommand};

type Handled = Result<Outcome, InputError>;

pub(crate) fn dispatch(command: Command) -> Handled {
    match command {
        Command::Gegenbauer { dim, k, expand } => gegenbauer_cmd(dim, k, expand.as_deref()),
        Command::Bound(BoundCommand::SphericalCode { dim, cos, degree, grid }) => {
            spherical_code(dim, &cos, degree, grid)
        }
        Command::Bound(BoundCommand::Kissing { cert }) => kissing(&cert),
        Command::Check(CheckCommand::Psd { file, tol }) => check_psd(&file, tol),
        Command::Check(CheckCommand::Preserver { power, dim, seed, trials }) => {
            preserver(power, dim, seed, trials)
        }
        Command::Check(CheckCommand::Midconvex { file }) => midconvex(&file),
        Command::Embed { geometry, file } => embed(geometry, &file),
        Command::Lattice(LatticeCommand::Info { name }) => lattice_info(&name),
        Command::Schur(SchurCommand::Verify { n, degree, seed, trials }) => {
            schur_verify(n, degree, seed, trials)
        }
        Command::Tables { skip_leech } => tables(!skip_leech),
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn ok(payload: Value, text: String) -> Handled {
    Ok(Outcome {
        passed: true,
        payload,
        text,
    })
}

/// `p/q`, an integer, or a finite decimal such as `-0.25`, read exactly.
pub(crate) fn parse_exact(text: &str) -> Result<Rational, InputError> {
    let t = text.trim();
    if let Some((whole, frac)) = t.split_once('.') {
        let digits_ok = !frac.is_empty() && frac.chars().all(|c| c.is_ascii_digit());
        let (sign, whole) = match whole.strip_prefix('-') {
            Some(rest) => ("-", rest),
            None => ("", whole.strip_prefix('+').unwrap_or(whole)),
        };
        if !digits_ok || !whole.chars().all(|c| c.is_ascii_digit()) {
            return Err(InputError(format!("not an exact number: {text:?}")));
        }
        let whole = if whole.is_empty() { "0" } else { whole };
        let num = format!("{sign}{whole}{frac}/1{}", "0".repeat(frac.len()));
        return Ok(parse_rational(&num)?);
    }
    Ok(parse_rational(t)?)
}

fn gegenbauer_cmd(dim: u32, k: usize, expand: Option<&Path>) -> Handled {
    let g = gegenbauer(dim, k)?;
    let harmonics = dim_spherical_harmonics(dim, k as u64)?;
    let mut payload = json!({
        "dim": dim,
        "k": k,
        "poly": strings(g.coeffs()),
        "display": g.to_string(),
        "harmonics_dim": harmonics.to_string(),
    });
    let mut text = format!("G_{k}^({dim})(t) = {g}\nspherical harmonics of degree {k} on S^{}: {harmonics}\n", dim - 1);
    if let Some(path) = expand {
        let p: PolyJson = read_file(path)?;
        let poly = p.to_poly();
        let coeffs = to_gegenbauer_basis(dim, &poly)?;
        payload["expansion"] = json!({
            "poly": strings(poly.coeffs()),
            "gegenbauer_coeffs": strings(&coeffs.coeffs),
        });
        text += &format!("\n{poly}\n  = ");
        let terms: Vec<String> = coeffs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| format!("({}) G_{j}", format_rational(c)))
            .collect();
        text += &if terms.is_empty() { "0".to_owned() } else { terms.join(" + ") };
        text.push('\n');
    }
    ok(payload, text)
}

fn certificate_text(cert: &BoundCertificate) -> String {
    let mut text = format!(
        "dimension {}, cos angle {}\nf(t) = {}\nGegenbauer coefficients:\n",
        cert.dim,
        format_rational(&cert.cos_angle),
        cert.f
    );
    let jacobi = cert.coeffs.jacobi_scaled();
    for (k, (c, j)) in cert.coeffs.coeffs.iter().zip(&jacobi).enumerate() {
        text += &format!(
            "  c_{k} = {}    (Jacobi scale: {})\n",
            format_rational(c),
            format_rational(j)
        );
    }
    text += &format!("bound f(1)/c_0 = {}\n", format_rational(&cert.bound));
    text
}

fn spherical_code(dim: u32, cos: &str, degree: usize, grid: usize) -> Handled {
    let s = parse_exact(cos)?;
    let lp = lp_bound(dim, &s, degree, grid).map_err(|e| match e {
        Error::Infeasible => InputError(format!("the degree-{degree} program has no feasible polynomial")),
        other => other.into(),
    })?;
    let mut payload = json!({
        "dim": dim,
        "cos_angle": format_rational(&s),
        "degree": degree,
        "grid": grid,
        "float_bound": lp.float_bound,
        "coeffs": lp.coeffs,
    });
    let mut text = format!(
        "LP optimum on a {grid}-interval grid: {:.9}\ncoefficients c_0..c_{degree}: {}\n",
        lp.float_bound,
        vector(&lp.coeffs)
    );
    let passed = match &lp.certificate {
        Ok(cert) => {
            payload["certificate"] = serde_json::to_value(cert.to_json()).expect("serializable");
            payload["bound"] = json!(format_rational(&cert.bound));
            text += &format!("\ncertified:\n{}", certificate_text(cert));
            true
        }
        Err(reason) => {
            payload["certificate"] = Value::Null;
            payload["reason"] = json!(reason);
            text += &format!("no exact certificate: {reason}\n");
            false
        }
    };
    Ok(Outcome { passed, payload, text })
}

fn kissing(cert: &str) -> Handled {
    let verified = if FIXTURE_NAMES.contains(&cert) {
        named_certificate(cert)
    } else {
        let json: CertificateJson = read_file(cert).map_err(|e| {
            InputError(format!("{e}; built-in certificates are {}", FIXTURE_NAMES.join(", ")))
        })?;
        BoundCertificate::from_json(&json)
    };
    match verified {
        Ok(c) => {
            let mut payload = serde_json::to_value(c.to_json()).expect("serializable");
            payload["name"] = json!(cert);
            payload["jacobi_scaled_coeffs"] = json!(strings(&c.coeffs.jacobi_scaled()));
            payload["accepted"] = json!(true);
            ok(payload, certificate_text(&c))
        }
        Err(Error::Certificate(rejection)) => Ok(Outcome {
            passed: false,
            payload: json!({ "name": cert, "accepted": false, "reason": rejection.to_string() }),
            text: format!("certificate rejected: {rejection}\n"),
        }),
        Err(other) => Err(other.into()),
    }
}

fn load_matrix(path: &Path) -> Result<SymMatrix, InputError> {
    let json: MatrixJson = read_file(path)?;
    Ok(SymMatrix::from_json(&json)?)
}

fn check_psd(path: &Path, tol: Option<f64>) -> Handled {
    let m = load_matrix(path)?;
    let report = psd_check(&m, tol)?;
    let (neg, zero, pos) = report.inertia;
    let text = format!(
        "psd: {}\nminimum eigenvalue: {:e}\nrank: {}\ninertia (neg, zero, pos): ({neg}, {zero}, {pos})\ntolerance: {:e}\n",
        yes_no(report.is_psd),
        report.min_eigenvalue,
        report.rank,
        report.tolerance
    );
    let mut payload = serde_json::to_value(&report).expect("serializable");
    if !report.is_psd {
        payload["reason"] = json!(format!(
            "minimum eigenvalue {:e} is below -{:e}",
            report.min_eigenvalue, report.tolerance
        ));
    }
    Ok(Outcome {
        passed: report.is_psd,
        payload,
        text,
    })
}

fn preserver(power: f64, dim: usize, seed: u64, trials: usize) -> Handled {
    let search = WitnessSearch {
        seed,
        trials,
        ..WitnessSearch::default()
    };
    let witness = power_preserver_witness(dim, power, search)?;
    let mut payload = json!({
        "power": power,
        "dim": dim,
        "seed": seed,
        "trials": trials,
        "found": witness.is_some(),
        "witness": witness,
    });
    let text = match &witness {
        Some(w) => {
            payload["reason"] = json!(format!(
                "x ↦ x^{power} does not preserve psd {dim}x{dim} matrices"
            ));
            format!(
                "witness after {} trials: x = {}\nJain matrix 1 + x_i x_j:\n{}entrywise power {power}:\n{}minimum eigenvalue: {:e}\n",
                w.trial + 1,
                vector(&w.x),
                matrix(&w.jain),
                matrix(&w.powered),
                w.min_eigenvalue
            )
        }
        None => format!("no witness in {trials} trials (seed {seed})\n"),
    };
    ok(payload, text)
}

fn midconvex(path: &Path) -> Handled {
    let samples: SamplesJson = read_file(path)?;
    let report = vasudeva_2x2_check(&samples.samples)?;
    let passed = report.all_hold();
    let mut payload = serde_json::to_value(&report).expect("serializable");
    payload["all_hold"] = json!(passed);
    let mut text = format!(
        "nonnegative: {}\nnondecreasing: {}\nmultiplicatively midconvex: {}\n",
        yes_no(report.nonnegative),
        yes_no(report.nondecreasing),
        yes_no(report.mult_midconvex)
    );
    if !passed {
        let mut reasons = Vec::new();
        if let Some(x) = report.negative_at {
            reasons.push(format!("f({x}) < 0"));
        }
        if let Some((a, b)) = report.decrease_between {
            reasons.push(format!("f decreases between {a} and {b}"));
        }
        if let Some((x, g, y)) = report.midconvex_violation {
            reasons.push(format!("f({g})^2 > f({x}) f({y})"));
        }
        let reason = reasons.join("; ");
        text += &format!("reason: {reason}\n");
        payload["reason"] = json!(reason);
    }
    Ok(Outcome { passed, payload, text })
}

fn embed(geometry: Geometry, path: &Path) -> Handled {
    let d = DistanceMatrix::new(load_matrix(path)?)?;
    let (name, result, test_matrix) = match geometry {
        Geometry::Euclidean => (
            "euclidean",
            euclidean_embed(&d),
            d.cayley_menger().map(|x| x / 2.0),
        ),
        Geometry::Sphere => ("sphere", sphere_embed(&d), d.matrix().map(f64::cos)),
    };
    let embedding = match result {
        Ok(e) => e,
        Err(e @ Error::Diameter { .. }) => {
            return Ok(Outcome {
                passed: false,
                payload: json!({ "geometry": name, "status": "not_embeddable", "reason": e.to_string() }),
                text: format!("not embeddable on the sphere: {e}\n"),
            })
        }
        Err(e) => return Err(e.into()),
    };
    let test_matrix = test_matrix?;
    let mut payload = serde_json::to_value(&embedding).expect("serializable");
    payload["geometry"] = json!(name);
    payload["n"] = json!(test_matrix.n());
    payload["rows"] = json!(test_matrix.rows());
    match embedding {
        Embedding::Embedded { dimension, points } => ok(
            payload,
            format!("embeds in dimension {dimension}; points:\n{}", matrix(&points)),
        ),
        Embedding::NotEmbeddable { min_eigenvalue } => {
            let reason = format!("test matrix has eigenvalue {min_eigenvalue:e} < 0");
            payload["reason"] = json!(reason);
            Ok(Outcome {
                passed: false,
                payload,
                text: format!("not embeddable: {reason}\n"),
            })
        }
    }
}

fn lattice_info(name: &str) -> Handled {
    let lattice = standard_lattice(name)?;
    let inv = lattice_invariants(&lattice);
    let info = LatticeInfoJson::new(&lattice, &inv);
    let mut text = format!(
        "{}: rank {}\nminimal norm λ1² = {}\nkissing number = {}\ncovolume² = {}\ndensity = {:.12}\nHermite constant = {:.12}\n",
        lattice.name().unwrap_or(name),
        info.rank,
        info.lambda1_sq,
        info.kissing,
        info.covolume_sq,
        info.density,
        info.hermite
    );
    if info.rank <= 8 {
        text += "Gram matrix:\n";
        for row in &info.gram {
            text += &format!("  {}\n", row.join(" "));
        }
    }
    ok(serde_json::to_value(&info).expect("serializable"), text)
}

fn series(s: &TruncatedSeries) -> Vec<String> {
    strings(s.coeffs())
}

fn schur_verify(n: usize, degree: usize, seed: u64, trials: u64) -> Handled {
    if !(1..=7).contains(&n) {
        return Err(InputError(format!("--N must be between 1 and 7, got {n}")));
    }
    let mut instances = Vec::new();
    let mut failures = Vec::new();
    let mut cutoff = 0;
    let mut last = None;
    for t in 0..trials {
        let s = seed.wrapping_add(t);
        let inst = random_instance(n, degree, s);
        cutoff = inst.cutoff;
        let (direct, formula) = inst.sides()?;
        let equal = direct == formula;
        if !equal {
            failures.push(s);
        }
        let rendered = Poly::new(direct.coeffs().to_vec()).to_string();
        instances.push(json!({
            "seed": s,
            "f": strings(&inst.f),
            "u": strings(&inst.u),
            "v": strings(&inst.v),
            "direct": series(&direct),
            "formula": series(&formula),
            "equal": equal,
        }));
        last = Some(rendered);
    }
    let passed = failures.is_empty();
    let mut payload = json!({
        "N": n,
        "degree": degree,
        "seed": seed,
        "trials": trials,
        "cutoff": cutoff,
        "all_equal": passed,
        "instances": instances,
    });
    let mut text = format!(
        "N = {n}, f of degree <= {degree}, cutoff t^{cutoff}: {} of {trials} instances agree\n",
        trials as usize - failures.len()
    );
    if let (1, Some(det)) = (trials, last) {
        text += &format!("det f[t u v^T] = {det}\n");
    }
    if !passed {
        let reason = format!("series differ for seeds {failures:?}");
        text += &format!("{reason}\n");
        payload["reason"] = json!(reason);
    }
    Ok(Outcome { passed, payload, text })
}

fn tables(include_leech: bool) -> Handled {
    let report = table_report(include_leech)?;
    let passed = report.all_match();
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.lattice.clone(),
                format_rational(&r.hermite_pow_n),
                format_rational(&r.expected_hermite_pow_n),
                format!("{:.12}", r.density),
                format!("{:.12}", r.expected_density),
                r.kissing.to_string(),
                r.expected_kissing.to_string(),
                yes_no(r.matches).to_owned(),
            ]
        })
        .collect();
    let mut text = table(
        &["n", "lattice", "γ^n", "expected", "density", "expected", "kissing", "expected", "match"],
        &rows,
    );
    text += "\nγ_n <= γ_{n-1}^{(n-1)/(n-2)} as (γ_n^n)^(n-2) <= (γ_{n-1}^(n-1))^n:\n";
    for m in &report.mordell {
        text += &format!("  n = {}: {} <= {}  {}\n", m.n, m.lhs, m.rhs, yes_no(m.holds));
    }
    let mut payload = serde_json::to_value(&report).expect("serializable");
    payload["all_match"] = json!(passed);
    if !passed {
        payload["reason"] = json!("a computed value differs from the known table");
    }
    Ok(Outcome { passed, payload, text })
}

#[cfg(test)]
mod tests {
    use super::*;
    use positivity_core::rat;

    #[test]
    fn exact_decimals() {
        assert_eq!(parse_exact("0.5").ok(), Some(rat(1, 2)));
        assert_eq!(parse_exact("-0.25").ok(), Some(rat(-1, 4)));
        assert_eq!(parse_exact("-.5").ok(), Some(rat(-1, 2)));
        assert_eq!(parse_exact("1/3").ok(), Some(rat(1, 3)));
        assert!(parse_exact("1e-3").is_err());
        assert!(parse_exact("0.").is_err());
        assert!(parse_exact("a.5").is_err());
    }
}

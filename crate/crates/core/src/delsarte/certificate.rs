use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::gegenbauer::{to_gegenbauer_basis, GegenbauerCoeffs};
use crate::polycore::rational::{serde_rational, serde_rational_vec};
use crate::polycore::{
    certify_nonpositive, format_rational, int, positive_witness, rat, Interval, Poly, Rational,
    SturmSequence,
};
use crate::{Error, Result};

/// Why a candidate polynomial does not certify a bound.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Rejection {
    #[error("Gegenbauer coefficient c_{k} = {} is negative", format_rational(value))]
    NegativeCoefficient { k: usize, value: Rational },
    #[error("constant Gegenbauer coefficient c_0 = {} is not positive", format_rational(value))]
    NonPositiveConstant { value: Rational },
    #[error(
        "polynomial is positive on [{}, {}] inside the forbidden range",
        format_rational(lo),
        format_rational(hi)
    )]
    PositivityViolation { lo: Rational, hi: Rational },
    #[error("certificate field {field} does not match the recomputed value")]
    Mismatch { field: &'static str },
}

/// A verified upper bound `A(n, ψ) <= f(1) / c_0` with `s = cos ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub dim: u32,
    pub cos_angle: Rational,
    pub f: Poly,
    pub coeffs: GegenbauerCoeffs,
    pub bound: Rational,
}

/// Wire form of a certificate; all rationals as `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub dim: u32,
    #[serde(with = "serde_rational")]
    pub cos_angle: Rational,
    #[serde(with = "serde_rational_vec")]
    pub poly: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub gegenbauer_coeffs: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub bound: Rational,
}

fn check_angle(n: u32, s: &Rational) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("dimension must be at least 2, got {n}")));
    }
    if s < &int(-1) || s >= &int(1) {
        return Err(Error::InvalidInput(format!(
            "cosine threshold {} must lie in [-1, 1)",
            format_rational(s)
        )));
    }
    Ok(())
}

/// A subinterval of `iv` around `x` (where `f(x) > 0`) on which `f > 0`.
fn positive_region(f: &Poly, iv: &Interval, x: &Rational) -> (Rational, Rational) {
    let seq = SturmSequence::new(&f.squarefree_part());
    let mut width = iv.hi() - iv.lo();
    loop {
        let lo = (x - &width).max(iv.lo().clone());
        let hi = (x + &width).min(iv.hi().clone());
        if f.eval(&lo).is_positive() && seq.count_roots(&lo, &hi) == 0 {
            return (lo, hi);
        }
        width /= int(2);
    }
}

/// Exact check of the Delsarte–Goethals–Seidel hypotheses for `f`:
/// nonnegative Gegenbauer coefficients, positive constant term, and
/// `f <= 0` on `[-1, s]`.
pub fn verify_certificate(n: u32, s: &Rational, f: &Poly) -> Result<BoundCertificate> {
    check_angle(n, s)?;
    let coeffs = to_gegenbauer_basis(n, f)?;
    let c0 = coeffs.coeffs.first().cloned().unwrap_or_else(Rational::zero);
    if !c0.is_positive() {
        return Err(Rejection::NonPositiveConstant { value: c0 }.into());
    }
    if let Some((k, value)) = coeffs.coeffs.iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Rejection::NegativeCoefficient {
            k,
            value: value.clone(),
        }
        .into());
    }
    let iv = Interval::new(int(-1), s.clone())?;
    if let Some(x) = positive_witness(f, &iv) {
        let (lo, hi) = positive_region(f, &iv, &x);
        return Err(Rejection::PositivityViolation { lo, hi }.into());
    }
    debug_assert!(certify_nonpositive(f, &iv));
    let bound = f.eval(&Rational::one()) / &c0;
    Ok(BoundCertificate {
        dim: n,
        cos_angle: s.clone(),
        f: f.clone(),
        coeffs,
        bound,
    })
}

impl BoundCertificate {
    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            dim: self.dim,
            cos_angle: self.cos_angle.clone(),
            poly: self.f.coeffs().to_vec(),
            gegenbauer_coeffs: self.coeffs.coeffs.clone(),
            bound: self.bound.clone(),
        }
    }

    /// Re-verifies `poly` and checks the stated coefficients and bound.
    pub fn from_json(json: &CertificateJson) -> Result<Self> {
        let cert = verify_certificate(json.dim, &json.cos_angle, &Poly::new(json.poly.clone()))?;
        if cert.coeffs.coeffs != json.gegenbauer_coeffs {
            return Err(Rejection::Mismatch {
                field: "gegenbauer_coeffs",
            }
            .into());
        }
        if cert.bound != json.bound {
            return Err(Rejection::Mismatch { field: "bound" }.into());
        }
        Ok(cert)
    }
}

/// `(320/3)(t+1)(t+1/2)²t²(t-1/2)`: the kissing certificate in dimension 8.
pub fn kissing_polynomial_8() -> Poly {
    Poly::from_roots(
        rat(320, 3),
        &[(int(-1), 1), (rat(-1, 2), 2), (int(0), 2), (rat(1, 2), 1)],
    )
}

/// `(1490944/15)(t+1)(t+1/2)²(t+1/4)²t²(t-1/4)²(t-1/2)`: dimension 24.
pub fn kissing_polynomial_24() -> Poly {
    Poly::from_roots(
        rat(1_490_944, 15),
        &[
            (int(-1), 1),
            (rat(-1, 2), 2),
            (rat(-1, 4), 2),
            (int(0), 2),
            (rat(1, 4), 2),
            (rat(1, 2), 1),
        ],
    )
}

pub const FIXTURE_NAMES: [&str; 2] = ["paper-8", "paper-24"];

/// Embedded kissing-number certificates, verified on every call.
pub fn named_certificate(name: &str) -> Result<BoundCertificate> {
    let (n, f) = match name {
        "paper-8" => (8, kissing_polynomial_8()),
        "paper-24" => (24, kissing_polynomial_24()),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown certificate {other:?}; expected one of {FIXTURE_NAMES:?}"
            )))
        }
    };
    verify_certificate(n, &rat(1, 2), &f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_eight_polynomial() {
        let f = kissing_polynomial_8();
        assert_eq!(f.degree(), Some(6));
        assert_eq!(f.leading(), Some(&rat(320, 3)));
        assert!(f.eval(&rat(1, 2)).is_zero());
        assert_eq!(f.eval(&int(1)), int(240));
    }

    #[test]
    fn dimension_eight_coefficients() {
        let cert = named_certificate("paper-8").unwrap();
        let unit: Vec<_> = [(1, 1), (8, 1), (25, 1), (52, 1), (133, 2), (60, 1), (55, 2)]
            .iter()
            .map(|&(p, q)| rat(p, q))
            .collect();
        assert_eq!(cert.coeffs.coeffs, unit);
        let table: Vec<_> = [
            (1, 1),
            (16, 7),
            (200, 63),
            (832, 231),
            (1216, 429),
            (5120, 3003),
            (2560, 4641),
        ]
        .iter()
        .map(|&(p, q)| rat(p, q))
        .collect();
        assert_eq!(cert.coeffs.jacobi_scaled(), table);
    }

    #[test]
    fn antipodal_pair_bound() {
        let f = Poly::from_ints(&[1, 1]);
        for n in [2, 3, 8] {
            let cert = verify_certificate(n, &int(-1), &f).unwrap();
            assert_eq!(cert.coeffs.coeffs, vec![int(1), int(1)]);
            assert_eq!(cert.bound, int(2));
        }
    }

    fn rejection(r: Result<BoundCertificate>) -> Rejection {
        match r {
            Err(Error::Certificate(r)) => *r,
            other => panic!("expected a rejection, got {other:?}"),
        }
    }

    #[test]
    fn constant_one_violates() {
        match rejection(verify_certificate(8, &rat(1, 2), &Poly::one())) {
            Rejection::PositivityViolation { lo, hi } => {
                assert!(lo >= int(-1) && hi <= rat(1, 2) && lo < hi);
            }
            other => panic!("expected positivity violation, got {other:?}"),
        }
    }

    #[test]
    fn negative_coefficient_named() {
        // 1 - t: c_1 = -1
        let f = Poly::from_ints(&[1, -1]);
        match rejection(verify_certificate(3, &int(-1), &f)) {
            Rejection::NegativeCoefficient { k, .. } => assert_eq!(k, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nonpositive_constant() {
        let f = Poly::from_ints(&[-1, 1]);
        assert!(matches!(
            rejection(verify_certificate(3, &int(-1), &f)),
            Rejection::NonPositiveConstant { .. }
        ));
        assert!(matches!(
            rejection(verify_certificate(3, &int(-1), &Poly::zero())),
            Rejection::NonPositiveConstant { .. }
        ));
    }

    #[test]
    fn angle_validation() {
        let f = Poly::from_ints(&[1, 1]);
        assert!(verify_certificate(3, &int(1), &f).is_err());
        assert!(verify_certificate(3, &int(-2), &f).is_err());
        assert!(verify_certificate(1, &int(-1), &f).is_err());
    }

    #[test]
    fn json_round_trip_and_tamper() {
        let cert = named_certificate("paper-8").unwrap();
        let text = serde_json::to_string(&cert.to_json()).unwrap();
        assert!(text.contains(r#""bound":"240""#));
        let back: CertificateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(BoundCertificate::from_json(&back).unwrap(), cert);
        let mut tampered = back.clone();
        tampered.bound = int(239);
        assert!(BoundCertificate::from_json(&tampered).is_err());
        assert!(named_certificate("paper-9").is_err());
    }
}

//! Gegenbauer polynomials `G_k^{(n)}` normalized by `G_k(1) = 1`.
//!
//! These are the zonal polynomials of the sphere `S^{n-1}`: orthogonal on
//! `[-1, 1]` against `(1 - t^2)^{(n-3)/2} dt`. For `n = 2, 3, 4` they are the
//! Chebyshev (first kind), Legendre and Chebyshev (second kind, rescaled)
//! polynomials.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::entrywise::SymMatrix;
use crate::polycore::{int, Poly, Rational};
use crate::{Error, Result};

fn check_dim(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "sphere dimension parameter must be at least 2, got {n}"
        )));
    }
    Ok(())
}

/// `G_0 .. G_kmax` for one dimension, built by the three-term recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GegenbauerFamily {
    dim: u32,
    polys: Vec<Poly>,
}

impl GegenbauerFamily {
    pub fn new(n: u32, kmax: usize) -> Result<Self> {
        check_dim(n)?;
        let mut polys = vec![Poly::one()];
        if kmax >= 1 {
            polys.push(Poly::t());
        }
        // The recurrence starts at k = 2; at (n, k) = (2, 1) its
        // denominator would vanish, so G_1 = t is taken as given.
        for k in 2..=kmax {
            let kk = k as i64;
            let nn = n as i64;
            let a = &Poly::monomial(int(2 * kk + nn - 4), 1) * &polys[k - 1];
            let b = polys[k - 2].scale(&int(kk - 1));
            let next = (&a - &b).scale(&Rational::new(1.into(), (kk + nn - 3).into()));
            polys.push(next);
        }
        Ok(GegenbauerFamily { dim: n, polys })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn kmax(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn get(&self, k: usize) -> &Poly {
        &self.polys[k]
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    /// `Σ c_k G_k`; panics if there are more coefficients than polynomials.
    pub fn expand(&self, coeffs: &[Rational]) -> Poly {
        coeffs
            .iter()
            .zip(&self.polys)
            .fold(Poly::zero(), |acc, (c, g)| &acc + &g.scale(c))
    }
}

/// The single polynomial `G_k^{(n)}`.
pub fn gegenbauer(n: u32, k: usize) -> Result<Poly> {
    Ok(GegenbauerFamily::new(n, k)?.polys.swap_remove(k))
}

/// Truncated power series in `r` whose coefficients are polynomials in `t`.
fn series_mul(a: &[Poly], b: &[Poly], len: usize) -> Vec<Poly> {
    let mut out = vec![Poly::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Unnormalized `C_0 .. C_kmax` read off the generating function.
///
/// For `n >= 3` this expands `(1 - 2rt + r^2)^{(2-n)/2}` as a binomial series
/// with rational exponent. For `n = 2` the exponent is zero and the series
/// `(1 - rt) / (1 - 2rt + r^2)` is used instead; its coefficients are already
/// normalized.
pub fn gegenbauer_via_generating_series(n: u32, kmax: usize) -> Result<Vec<Poly>> {
    check_dim(n)?;
    let len = kmax + 1;
    // u = 2rt - r^2, so (1 - 2rt + r^2) = 1 - u.
    let mut u = vec![Poly::zero(); len];
    if len > 1 {
        u[1] = Poly::monomial(int(2), 1);
    }
    if len > 2 {
        u[2] = Poly::constant(int(-1));
    }
    let mut power = vec![Poly::zero(); len];
    power[0] = Poly::one();
    let mut sum = vec![Poly::zero(); len];

    if n == 2 {
        // 1 / (1 - u) = Σ u^j
        for _ in 0..len {
            for (s, p) in sum.iter_mut().zip(&power) {
                *s = &*s + p;
            }
            power = series_mul(&power, &u, len);
        }
        let mut numer = vec![Poly::zero(); len];
        numer[0] = Poly::one();
        if len > 1 {
            numer[1] = Poly::monomial(int(-1), 1);
        }
        return Ok(series_mul(&numer, &sum, len));
    }

    // (1 - u)^alpha = Σ_j binom(alpha, j) (-u)^j, alpha = (2 - n) / 2.
    let alpha = Rational::new((2 - n as i64).into(), 2.into());
    let mut binom = Rational::one();
    for j in 0..len {
        let coeff = if j % 2 == 0 { binom.clone() } else { -binom.clone() };
        for (s, p) in sum.iter_mut().zip(&power) {
            *s = &*s + &p.scale(&coeff);
        }
        power = series_mul(&power, &u, len);
        binom = binom * (&alpha - int(j as i64)) / int(j as i64 + 1);
    }
    Ok(sum)
}

/// Coefficients of a polynomial in the `G_k^{(n)}` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GegenbauerCoeffs {
    pub dim: u32,
    pub coeffs: Vec<Rational>,
}

impl GegenbauerCoeffs {
    /// Back to the monomial basis.
    pub fn expand(&self) -> Result<Poly> {
        let kmax = self.coeffs.len().saturating_sub(1);
        Ok(GegenbauerFamily::new(self.dim, kmax)?.expand(&self.coeffs))
    }

    /// Coefficients against the same orthogonal family scaled to
    /// `P_k(1) = ((n-1)/2)_k / k!` (Jacobi `P_k^{(a,a)}`, `a = (n-3)/2`),
    /// i.e. `c_k · k! / ((n-1)/2)_k`. Older tables of kissing certificates
    /// list their coefficients in this scale.
    pub fn jacobi_scaled(&self) -> Vec<Rational> {
        let half = Rational::new((self.dim as i64 - 1).into(), 2.into());
        let mut value_at_one = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    value_at_one *= (&half + int(k as i64 - 1)) / int(k as i64);
                }
                c / &value_at_one
            })
            .collect()
    }
}

/// Triangular change of basis, peeling off the top degree each step.
pub fn to_gegenbauer_basis(n: u32, p: &Poly) -> Result<GegenbauerCoeffs> {
    check_dim(n)?;
    let Some(deg) = p.degree() else {
        return Ok(GegenbauerCoeffs {
            dim: n,
            coeffs: Vec::new(),
        });
    };
    let family = GegenbauerFamily::new(n, deg)?;
    let mut rest = p.clone();
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for k in (0..=deg).rev() {
        let g = family.get(k);
        let c = rest.coeff(k) / g.leading().expect("G_k has degree k");
        rest = &rest - &g.scale(&c);
        coeffs[k] = c;
    }
    debug_assert!(rest.is_zero());
    Ok(GegenbauerCoeffs { dim: n, coeffs })
}

fn binomial(top: u64, bottom: u64) -> BigUint {
    if bottom > top {
        return BigUint::zero();
    }
    let bottom = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 0..bottom {
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    acc
}

/// Dimension of the space of degree-`k` spherical harmonics on `S^{n-1}`:
/// `binom(k+n-2, k) + binom(k+n-3, k-1)`, the second term read as 0 at `k = 0`.
pub fn dim_spherical_harmonics(n: u32, k: u64) -> Result<BigUint> {
    check_dim(n)?;
    let n = n as u64;
    let first = binomial(k + n - 2, k);
    let second = if k == 0 {
        BigUint::zero()
    } else {
        binomial(k + n - 3, k - 1)
    };
    Ok(first + second)
}

/// `∫ t^j w / ∫ w` for `w = (1 - t^2)^{(n-3)/2}` on `[-1, 1]`.
///
/// Always rational: `m_{2k} = m_{2k-2} (2k - 1) / (2k + n - 2)`.
pub fn normalized_moment(n: u32, j: usize) -> Result<Rational> {
    check_dim(n)?;
    if j % 2 == 1 {
        return Ok(Rational::zero());
    }
    let mut m = Rational::one();
    for k in 1..=(j / 2) as i64 {
        m = m * int(2 * k - 1) / int(2 * k + n as i64 - 2);
    }
    Ok(m)
}

/// `⟨p, q⟩` against the normalized sphere-projected measure, exact.
pub fn inner_product_normalized(n: u32, p: &Poly, q: &Poly) -> Result<Rational> {
    check_dim(n)?;
    let prod = p * q;
    let Some(deg) = prod.degree() else {
        return Ok(Rational::zero());
    };
    let mut moments = Vec::with_capacity(deg + 1);
    let mut m = Rational::one();
    for j in 0..=deg {
        if j % 2 == 0 {
            if j > 0 {
                let k = (j / 2) as i64;
                m = m * int(2 * k - 1) / int(2 * k + n as i64 - 2);
            }
            moments.push(m.clone());
        } else {
            moments.push(Rational::zero());
        }
    }
    Ok(prod
        .coeffs()
        .iter()
        .zip(&moments)
        .fold(Rational::zero(), |acc, (c, m)| acc + c * m))
}

/// Minimum eigenvalue of `(G_k^{(n)}(⟨ξ_i, ξ_j⟩))` for unit vectors `ξ_i` in
/// `R^n`, in floating point. The matrix is positive semidefinite in exact
/// arithmetic, so callers compare the result against `-tol`.
pub fn gegenbauer_gram_check(n: u32, k: usize, points: &[Vec<f64>]) -> Result<f64> {
    let g = gegenbauer(n, k)?;
    for (i, p) in points.iter().enumerate() {
        if p.len() != n as usize {
            return Err(Error::DimensionMismatch {
                expected: n as usize,
                got: p.len(),
            });
        }
        let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "point {i} has norm {norm}, expected 1"
            )));
        }
    }
    let m = points.len();
    let gram = SymMatrix::from_fn(m, |i, j| {
        let dot: f64 = points[i].iter().zip(&points[j]).map(|(a, b)| a * b).sum();
        g.eval_f64(dot.clamp(-1.0, 1.0))
    })?;
    Ok(gram.eigenvalues().first().copied().unwrap_or(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn base_cases() {
        for n in 2..10 {
            assert_eq!(gegenbauer(n, 0).unwrap(), Poly::one());
            assert_eq!(gegenbauer(n, 1).unwrap(), Poly::t());
        }
    }

    #[test]
    fn legendre_and_chebyshev() {
        assert_eq!(
            gegenbauer(3, 2).unwrap(),
            Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)])
        );
        assert_eq!(gegenbauer(2, 2).unwrap(), Poly::from_ints(&[-1, 0, 2]));
        // T_3 = 4t^3 - 3t
        assert_eq!(gegenbauer(2, 3).unwrap(), Poly::from_ints(&[0, -3, 0, 4]));
    }

    #[test]
    fn rejects_small_dim() {
        assert!(gegenbauer(1, 3).is_err());
        assert!(gegenbauer_via_generating_series(0, 3).is_err());
    }

    #[test]
    fn generating_series_low_order() {
        for n in 2..8 {
            let c = gegenbauer_via_generating_series(n, 3).unwrap();
            assert_eq!(c[0], Poly::one());
        }
        // n = 3: C_1 = t, C_2 = P_2
        let c = gegenbauer_via_generating_series(3, 2).unwrap();
        assert_eq!(c[1], Poly::t());
        assert_eq!(c[2], Poly::new(vec![rat(-1, 2), int(0), rat(3, 2)]));
        let c2 = gegenbauer_via_generating_series(2, 1).unwrap();
        assert_eq!(c2[1], Poly::t());
    }

    #[test]
    fn basis_element_coordinates() {
        let g = gegenbauer(5, 3).unwrap();
        let c = to_gegenbauer_basis(5, &g).unwrap();
        assert_eq!(c.coeffs, vec![int(0), int(0), int(0), int(1)]);
        assert!(to_gegenbauer_basis(5, &Poly::zero()).unwrap().coeffs.is_empty());
    }

    #[test]
    fn jacobi_scale_on_legendre() {
        // n = 3: a = 0, so Jacobi and Legendre coincide and the scale is 1.
        let c = GegenbauerCoeffs {
            dim: 3,
            coeffs: vec![int(2), int(3), int(5)],
        };
        assert_eq!(c.jacobi_scaled(), c.coeffs);
        // n = 5: P_k(1) = (2)_k / k! = k + 1.
        let c = GegenbauerCoeffs {
            dim: 5,
            coeffs: vec![int(1), int(4), int(9)],
        };
        assert_eq!(c.jacobi_scaled(), vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn harmonic_dimensions() {
        for n in 2..12 {
            assert_eq!(dim_spherical_harmonics(n, 0).unwrap(), BigUint::one());
        }
        for k in 1..20 {
            assert_eq!(dim_spherical_harmonics(2, k).unwrap(), BigUint::from(2u32));
        }
        assert_eq!(dim_spherical_harmonics(3, 2).unwrap(), BigUint::from(5u32));
        // n = 3 gives 2k + 1
        assert_eq!(dim_spherical_harmonics(3, 7).unwrap(), BigUint::from(15u32));
    }

    #[test]
    fn moments() {
        for n in 2..10 {
            assert!(normalized_moment(n, 1).unwrap().is_zero());
            assert_eq!(normalized_moment(n, 0).unwrap(), int(1));
        }
        assert_eq!(normalized_moment(3, 2).unwrap(), rat(1, 3));
        assert_eq!(normalized_moment(2, 2).unwrap(), rat(1, 2));
        // Chebyshev weight: m_4 = 3/8
        assert_eq!(normalized_moment(2, 4).unwrap(), rat(3, 8));
    }

    #[test]
    fn small_inner_products() {
        for n in 2..8 {
            let g1 = gegenbauer(n, 1).unwrap();
            let g2 = gegenbauer(n, 2).unwrap();
            assert!(inner_product_normalized(n, &g1, &g2).unwrap().is_zero());
            assert_eq!(
                inner_product_normalized(n, &Poly::one(), &Poly::one()).unwrap(),
                int(1)
            );
        }
        let g2 = gegenbauer(3, 2).unwrap();
        let g3 = gegenbauer(3, 3).unwrap();
        assert!(inner_product_normalized(3, &g2, &g3).unwrap().is_zero());
        // Legendre: ⟨P_2, P_2⟩ / 2 = 1/5
        assert_eq!(inner_product_normalized(3, &g2, &g2).unwrap(), rat(1, 5));
    }

    #[test]
    fn gram_check_on_basis_vectors() {
        let n = 5;
        let pts: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        for k in 0..6 {
            let g0 = gegenbauer(n as u32, k).unwrap().eval_f64(0.0);
            // I + g0 (J - I): eigenvalues 1 - g0 and 1 + (n - 1) g0
            let expected = (1.0 - g0).min(1.0 + (n as f64 - 1.0) * g0);
            let got = gegenbauer_gram_check(n as u32, k, &pts).unwrap();
            assert!((got - expected).abs() < 1e-12, "k={k}: {got} vs {expected}");
            assert!(got >= -1e-12);
        }
        let got = gegenbauer_gram_check(n as u32, 0, &pts).unwrap();
        assert!(got.abs() < 1e-12);
    }

    #[test]
    fn gram_check_rejects_non_unit() {
        let pts = vec![vec![1.0, 0.0], vec![0.5, 0.5]];
        assert!(gegenbauer_gram_check(2, 2, &pts).is_err());
        assert!(gegenbauer_gram_check(3, 2, &[vec![1.0, 0.0]]).is_err());
    }
}

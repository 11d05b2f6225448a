//! Fincke–Pohst enumeration of short lattice vectors in exact integer
//! arithmetic.
//!
//! The Gram matrix is factored as `G = Uᵀ D U` over the rationals, so that
//! `xᵀ G x = Σ_i d_i (x_i + Σ_{j>i} μ_ij x_j)²`. Each level is rescaled to an
//! integer coordinate `y_i = m_i x_i + Σ_{j>i} a_ij x_j` with a common
//! integer weight `W_i`, so the search itself touches only integers. It runs
//! in `i128` and falls back to big integers if anything overflows.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::polycore::Rational;

/// `G = Uᵀ D U` with `U` unit upper triangular. Returns `(d, μ)` or `None`
/// if some pivot is not positive.
pub(crate) fn ldl(gram: &[Vec<Rational>]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let n = gram.len();
    let mut d: Vec<Rational> = Vec::with_capacity(n);
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let mut di = gram[i][i].clone();
        for k in 0..i {
            di -= &mu[k][i] * &mu[k][i] * &d[k];
        }
        if !di.is_positive() {
            return None;
        }
        for j in i + 1..n {
            let mut g = gram[i][j].clone();
            for k in 0..i {
                g -= &mu[k][i] * &mu[k][j] * &d[k];
            }
            mu[i][j] = g / &di;
        }
        mu[i][i] = Rational::one();
        d.push(di);
    }
    Some((d, mu))
}

fn lcm_of_denominators<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    values.fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

trait EnumInt:
    Clone + Integer + Signed + Roots + CheckedAdd + CheckedSub + CheckedMul + ToPrimitive
{
    fn from_big(b: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl EnumInt for i128 {
    fn from_big(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl EnumInt for BigInt {
    fn from_big(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Integer data of the factored form.
struct Scaled {
    m: Vec<BigInt>,
    a: Vec<Vec<BigInt>>,
    w: Vec<BigInt>,
    /// `xᵀ G x = (Σ W_i y_i²) / denom`.
    denom: BigInt,
}

fn scale(d: &[Rational], mu: &[Vec<Rational>]) -> Scaled {
    let n = d.len();
    let mut m = Vec::with_capacity(n);
    let mut a = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let mi = lcm_of_denominators(mu[i][i + 1..].iter());
        let mi_rat = Rational::from_integer(mi.clone());
        a.push(
            (0..n)
                .map(|j| {
                    if j > i {
                        (&mu[i][j] * &mi_rat).to_integer()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect::<Vec<_>>(),
        );
        w.push(&d[i] / (&mi_rat * &mi_rat));
        m.push(mi);
    }
    let denom = lcm_of_denominators(w.iter());
    let denom_rat = Rational::from_integer(denom.clone());
    let w = w.iter().map(|wi| (wi * &denom_rat).to_integer()).collect();
    Scaled { m, a, w, denom }
}

struct Search<T> {
    m: Vec<T>,
    a: Vec<Vec<T>>,
    w: Vec<T>,
    x: Vec<T>,
    budget: T,
    out: Vec<(Vec<i64>, T)>,
}

impl<T: EnumInt> Search<T> {
    fn new(s: &Scaled, budget: &BigInt) -> Option<Self> {
        let conv = |v: &BigInt| T::from_big(v);
        Some(Search {
            m: s.m.iter().map(conv).collect::<Option<_>>()?,
            a: s.a
                .iter()
                .map(|row| row.iter().map(conv).collect::<Option<Vec<T>>>())
                .collect::<Option<_>>()?,
            w: s.w.iter().map(conv).collect::<Option<_>>()?,
            x: vec![T::zero(); s.m.len()],
            budget: T::from_big(budget)?,
            out: Vec::new(),
        })
    }

    fn level(&mut self, i: usize, remaining: T) -> Option<()> {
        let n = self.x.len();
        let mut s = T::zero();
        for j in i + 1..n {
            if !self.x[j].is_zero() {
                s = s.checked_add(&self.a[i][j].checked_mul(&self.x[j])?)?;
            }
        }
        let ymax = (remaining.clone() / self.w[i].clone()).sqrt();
        let mi = self.m[i].clone();
        let lo = -(ymax.clone() + s.clone()).div_floor(&mi);
        let hi = (ymax - s.clone()).div_floor(&mi);
        let mut xi = lo;
        while xi <= hi {
            let y = mi.checked_mul(&xi)?.checked_add(&s)?;
            let used = self.w[i].checked_mul(&y.checked_mul(&y)?)?;
            let rest = remaining.checked_sub(&used)?;
            self.x[i] = xi.clone();
            if i == 0 {
                if self.x.iter().any(|v| !v.is_zero()) {
                    let coords = self.x.iter().map(|v| v.to_i64()).collect::<Option<_>>()?;
                    let norm = self.budget.checked_sub(&rest)?;
                    self.out.push((coords, norm));
                }
            } else {
                self.level(i - 1, rest)?;
            }
            xi = xi + T::one();
        }
        self.x[i] = T::zero();
        Some(())
    }

    fn run(mut self) -> Option<Vec<(Vec<i64>, BigInt)>> {
        let n = self.x.len();
        if n > 0 {
            self.level(n - 1, self.budget.clone())?;
        }
        Some(self.out.into_iter().map(|(c, norm)| (c, norm.to_big())).collect())
    }
}

/// All nonzero `x ∈ Zⁿ` with `xᵀ G x <= bound`, each with its exact norm,
/// sorted by norm then coordinates. `gram` must be positive definite.
pub(crate) fn enumerate(gram: &[Vec<Rational>], bound: &Rational) -> Vec<(Vec<i64>, Rational)> {
    if !bound.is_positive() {
        return Vec::new();
    }
    let (d, mu) = ldl(gram).expect("gram matrix must be positive definite");
    let scaled = scale(&d, &mu);
    let budget = (bound * Rational::from_integer(scaled.denom.clone())).floor().to_integer();
    let found = Search::<i128>::new(&scaled, &budget)
        .and_then(Search::run)
        .or_else(|| Search::<BigInt>::new(&scaled, &budget).and_then(Search::run))
        .expect("coordinates of short vectors fit in i64");
    let mut out: Vec<(Vec<i64>, Rational)> = found
        .into_iter()
        .map(|(c, norm)| (c, Rational::new(norm, scaled.denom.clone())))
        .collect();
    out.sort_by(|(ca, na), (cb, nb)| na.cmp(nb).then_with(|| ca.cmp(cb)));
    out
}

//! The determinant of an entrywise power series applied to a rank-one
//! matrix, `det f[t u vᵀ]`, computed two ways:
//!
//! * directly, as the determinant of a matrix of truncated series;
//! * as `V(u) V(v) Σ_M t^M Σ_{n ⊢ M} s_n(u) s_n(v) Π_j f_{n_j}`, summing
//!   over strictly decreasing tuples `n = (n_N > … > n_1 >= 0)` of weight
//!   `M`, with `s_n` the bialternant `det(x_i^{n_j}) / V(x)` and
//!   `V(x) = Π_{i<j} (x_i - x_j)`.
//!
//! Under this convention the staircase `(N-1, …, 0)` has `s = 1`.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polycore::{int, Rational};
use crate::{Error, Result};

/// Strictly decreasing tuple `(n_N, …, n_1)`, stored largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictTuple(Vec<usize>);

impl StrictTuple {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInput(format!(
                "tuple {parts:?} is not strictly decreasing"
            )));
        }
        Ok(StrictTuple(parts))
    }

    pub fn staircase(n: usize) -> Self {
        StrictTuple((0..n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The partition `λ_j = n_j - (j - 1)`, largest part first.
    pub fn partition(&self) -> Vec<usize> {
        let n = self.0.len();
        self.0.iter().enumerate().map(|(i, &p)| p - (n - 1 - i)).collect()
    }
}

/// Power series in `t` truncated after `t^cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); cutoff + 1],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>, cutoff: usize) -> Self {
        coeffs.resize(cutoff + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &Rational {
        &self.coeffs[m]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add_assign(&mut self, other: &TruncatedSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cutoff = self.cutoff().min(other.cutoff());
        let mut out = TruncatedSeries::zero(cutoff);
        for (i, a) in self.coeffs.iter().enumerate().take(cutoff + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cutoff + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

/// `Π_{i<j} (x_i - x_j)`.
pub fn vandermonde(x: &[Rational]) -> Rational {
    let mut v = Rational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= &x[i] - &x[j];
        }
    }
    v
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

fn distinct(x: &[Rational], what: &str) -> Result<()> {
    for i in 0..x.len() {
        if x[i + 1..].contains(&x[i]) {
            return Err(Error::InvalidInput(format!(
                "{what} has repeated entry {}",
                crate::polycore::format_rational(&x[i])
            )));
        }
    }
    Ok(())
}

fn bialternant(tuple: &StrictTuple, x: &[Rational]) -> Rational {
    let m = x
        .iter()
        .map(|xi| tuple.parts().iter().map(|&p| num_traits::pow(xi.clone(), p)).collect())
        .collect();
    determinant(m)
}

/// `s_n(x) = det(x_i^{n_j}) / V(x)`; requires pairwise distinct `x`.
pub fn schur_eval(tuple: &StrictTuple, x: &[Rational]) -> Result<Rational> {
    if tuple.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: tuple.len(),
            got: x.len(),
        });
    }
    distinct(x, "evaluation point")?;
    Ok(bialternant(tuple, x) / vandermonde(x))
}

fn check_cutoff(n: usize, cutoff: usize) -> Result<()> {
    let min = n * n.saturating_sub(1) / 2;
    if cutoff < min {
        return Err(Error::InvalidInput(format!(
            "cutoff {cutoff} is below binom(N, 2) = {min}"
        )));
    }
    Ok(())
}

/// All permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (perm, even) in permutations(n - 1) {
        // Insert n-1 at each slot; moving it left past k entries flips the
        // sign k times.
        for slot in 0..n {
            let mut p = perm.clone();
            p.insert(slot, n - 1);
            let moved = n - 1 - slot;
            out.push((p, even == moved.is_multiple_of(2)));
        }
    }
    out
}

/// `det f[t u vᵀ]` by Leibniz expansion over the truncated-series ring.
pub fn det_series_direct(
    f: &[Rational],
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> Result<TruncatedSeries> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    check_cutoff(n, cutoff)?;
    let entry = |i: usize, j: usize| {
        let x = &u[i] * &v[j];
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(cutoff + 1);
        for m in 0..=cutoff {
            let fm = f.get(m).cloned().unwrap_or_else(Rational::zero);
            coeffs.push(fm * &power);
            power *= &x;
        }
        TruncatedSeries::from_coeffs(coeffs, cutoff)
    };
    let matrix: Vec<Vec<TruncatedSeries>> =
        (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();

    let mut total = TruncatedSeries::zero(cutoff);
    for (perm, even) in permutations(n) {
        let mut term = TruncatedSeries::from_coeffs(vec![Rational::one()], cutoff);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&matrix[i][j]);
            if term.is_zero() {
                break;
            }
        }
        if !even {
            term = term.scale(&int(-1));
        }
        total.add_assign(&term);
    }
    Ok(total)
}

/// Strict tuples of length `n` with entries in `support` and weight at most
/// `cutoff`.
pub fn strict_tuples(n: usize, support: &[usize], cutoff: usize) -> Vec<StrictTuple> {
    fn go(
        n: usize,
        support: &[usize],
        start: usize,
        budget: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<StrictTuple>,
    ) {
        if chosen.len() == n {
            let mut parts = chosen.clone();
            parts.reverse();
            out.push(StrictTuple(parts));
            return;
        }
        for k in start..support.len() {
            let m = support[k];
            if m > budget {
                break;
            }
            chosen.push(m);
            go(n, support, k + 1, budget - m, chosen, out);
            chosen.pop();
        }
    }
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    go(n, &sorted, 0, cutoff, &mut Vec::new(), &mut out);
    out
}

/// The Schur-polynomial side of the identity, summed exactly.
pub fn det_series_formula(
    f: &[Rational],
    u: &[Rational],
    v: &[Rational],
    cutoff: usize,
) -> Result<TruncatedSeries> {
    let n = u.len();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    check_cutoff(n, cutoff)?;
    distinct(u, "u")?;
    distinct(v, "v")?;
    let support: Vec<usize> = (0..=cutoff)
        .filter(|&m| f.get(m).is_some_and(|c| !c.is_zero()))
        .collect();
    let (vu, vv) = (vandermonde(u), vandermonde(v));
    let prefactor = &vu * &vv;
    let mut out = TruncatedSeries::zero(cutoff);
    for tuple in strict_tuples(n, &support, cutoff) {
        // s_n(u) s_n(v) V(u) V(v) = bialternant(u) · bialternant(v)
        let su = bialternant(&tuple, u) / &vu;
        let sv = bialternant(&tuple, v) / &vv;
        let prod_f = tuple
            .parts()
            .iter()
            .fold(Rational::one(), |acc, &m| acc * &f[m]);
        out.coeffs[tuple.weight()] += &prefactor * su * sv * prod_f;
    }
    Ok(out)
}

/// Inputs for one check of the identity.
#[derive(Clone, Debug, PartialEq)]
pub struct SchurInstance {
    pub f: Vec<Rational>,
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    pub cutoff: usize,
}

/// Seeded random instance: `f` has small integer coefficients on degrees
/// `0..=degree` (about a third of them zero), `u` and `v` are distinct small
/// integers, and the cutoff is `binom(N, 2) + 6`.
pub fn random_instance(n: usize, degree: usize, seed: u64) -> SchurInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = (0..=degree)
        .map(|_| {
            if rng.gen_bool(1.0 / 3.0) {
                Rational::zero()
            } else {
                int(rng.gen_range(-5..=5))
            }
        })
        .collect();
    let mut pool: Vec<i64> = (-6..=6).collect();
    let mut distinct_ints = |rng: &mut ChaCha8Rng| {
        pool.shuffle(rng);
        pool[..n].iter().map(|&x| int(x)).collect::<Vec<_>>()
    };
    let u = distinct_ints(&mut rng);
    let v = distinct_ints(&mut rng);
    SchurInstance {
        f,
        u,
        v,
        cutoff: n * n.saturating_sub(1) / 2 + 6,
    }
}

impl SchurInstance {
    /// Both sides of the identity.
    pub fn sides(&self) -> Result<(TruncatedSeries, TruncatedSeries)> {
        Ok((
            det_series_direct(&self.f, &self.u, &self.v, self.cutoff)?,
            det_series_formula(&self.f, &self.u, &self.v, self.cutoff)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn staircase_is_one() {
        for n in 1..5 {
            let x: Vec<Rational> = (0..n).map(|i| rat(2 * i as i64 + 1, 3)).collect();
            assert_eq!(schur_eval(&StrictTuple::staircase(n), &x).unwrap(), int(1));
        }
    }

    #[test]
    fn two_variable_hand_value() {
        let t = StrictTuple::new(vec![2, 0]).unwrap();
        assert_eq!(t.partition(), vec![1, 0]);
        assert_eq!(schur_eval(&t, &ints(&[1, 2])).unwrap(), int(3));
    }

    #[test]
    fn repeated_points_rejected() {
        let t = StrictTuple::new(vec![2, 0]).unwrap();
        assert!(schur_eval(&t, &ints(&[2, 2])).is_err());
        assert!(StrictTuple::new(vec![1, 1]).is_err());
    }

    #[test]
    fn one_by_one() {
        let f = ints(&[3, 5, 7]);
        let s = det_series_direct(&f, &ints(&[2]), &ints(&[3]), 2).unwrap();
        assert_eq!(s.coeffs(), &ints(&[3, 30, 252])[..]);
    }

    #[test]
    fn two_by_two_hand_expansion() {
        let f = ints(&[1, 1]);
        let u = ints(&[1, 2]);
        let direct = det_series_direct(&f, &u, &u, 3).unwrap();
        assert_eq!(direct.coeffs(), &ints(&[0, 1, 0, 0])[..]);
        let formula = det_series_formula(&f, &u, &u, 3).unwrap();
        assert_eq!(direct, formula);
    }

    #[test]
    fn proportional_rows_vanish() {
        let f = ints(&[1, 2, 3, 4]);
        let s = det_series_direct(&f, &ints(&[3, 3]), &ints(&[1, 5]), 5).unwrap();
        assert!(s.is_zero());
        assert!(det_series_formula(&f, &ints(&[3, 3]), &ints(&[1, 5]), 5).is_err());
    }

    #[test]
    fn no_constant_term() {
        let f = ints(&[0, 1, 1, 1]);
        let s = det_series_formula(&f, &ints(&[1, 2]), &ints(&[3, 5]), 4).unwrap();
        assert!(s.coeff(0).is_zero() && s.coeff(1).is_zero() && s.coeff(2).is_zero());
        assert!(!s.coeff(3).is_zero());
        assert_eq!(s, det_series_direct(&f, &ints(&[1, 2]), &ints(&[3, 5]), 4).unwrap());
    }

    #[test]
    fn geometric_series_three_by_three() {
        let f = vec![int(1); 10];
        let u = ints(&[1, 2, 4]);
        let v = ints(&[-1, 3, 5]);
        let direct = det_series_direct(&f, &u, &v, 9).unwrap();
        let formula = det_series_formula(&f, &u, &v, 9).unwrap();
        assert_eq!(direct, formula);
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|p| p.1).count(), 3);
        for (p, even) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(even, inversions % 2 == 0);
        }
    }

    #[test]
    fn random_instances_agree() {
        for n in 1..=3 {
            for seed in 0..5 {
                let inst = random_instance(n, 8, seed);
                assert_eq!(inst, random_instance(n, 8, seed));
                let (direct, formula) = inst.sides().unwrap();
                assert_eq!(direct, formula);
            }
        }
    }

    #[test]
    fn cutoff_too_small() {
        assert!(det_series_direct(&ints(&[1]), &ints(&[1, 2, 3]), &ints(&[1, 2, 3]), 2).is_err());
    }
}

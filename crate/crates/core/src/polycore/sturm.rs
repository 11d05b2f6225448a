//! Exact sign certification on closed intervals via Sturm sequences.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::{int, serde_rational, Rational};
use crate::Error;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "serde_rational")]
    lo: Rational,
    #[serde(with = "serde_rational")]
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "interval endpoints out of order: {lo} > {hi}"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Sturm chain of a squarefree polynomial, each member made primitive.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    /// `p` should be squarefree; otherwise counts refer to its distinct roots
    /// only when the chain is built from `p.squarefree_part()`.
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push((-&r).primitive_part());
        }
        SturmSequence { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let positive = v.is_positive();
            if last.is_some_and(|l| l != positive) {
                count += 1;
            }
            last = Some(positive);
        }
        count
    }

    /// Number of distinct roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Half-open isolating interval `(lo, hi]` holding exactly one root.
#[derive(Clone, Debug)]
struct Isolated {
    lo: Rational,
    hi: Rational,
}

fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

fn isolate(seq: &SturmSequence, lo: Rational, hi: Rational, out: &mut Vec<Isolated>) {
    let mut stack = vec![(lo, hi)];
    // Process left halves first so the output is sorted.
    while let Some((lo, hi)) = stack.pop() {
        match seq.count_roots(&lo, &hi) {
            0 => {}
            1 => out.push(Isolated { lo, hi }),
            _ => {
                let mid = midpoint(&lo, &hi);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
}

/// A point strictly between `floor` and the single root of `iv`, assuming no
/// root lies in `(floor, root)` and `iv.lo >= floor`.
fn point_above(seq: &SturmSequence, iv: &Isolated, floor: &Rational) -> Rational {
    let (lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    if &lo > floor {
        return lo;
    }
    loop {
        let mid = midpoint(&lo, &hi);
        if seq.count_roots(&lo, &mid) == 1 {
            hi = mid;
        } else {
            return mid;
        }
    }
}

/// Returns a rational point of `iv` where `p > 0`, or `None` when `p <= 0` on
/// the whole interval. Exact throughout.
pub fn positive_witness(p: &Poly, iv: &Interval) -> Option<Rational> {
    if p.is_zero() {
        return None;
    }
    let (a, b) = (iv.lo(), iv.hi());
    for end in [a, b] {
        if p.eval(end).is_positive() {
            return Some(end.clone());
        }
    }
    if a == b {
        return None;
    }
    let q = p.squarefree_part();
    if q.degree() == Some(0) {
        return None;
    }
    let seq = SturmSequence::new(&q);
    let mut roots = Vec::new();
    isolate(&seq, a.clone(), b.clone(), &mut roots);

    // One sample per open gap between consecutive distinct roots. The gap
    // touching `a` is covered by `a` itself unless `a` is a root; the gap
    // touching `b` is covered by `b` unless `b` is a root.
    let mut samples = Vec::new();
    let mut floor = if q.eval(a).is_zero() {
        Some(a.clone())
    } else {
        None
    };
    for iv in &roots {
        if let Some(f) = &floor {
            samples.push(point_above(&seq, iv, f));
        }
        if q.eval(&iv.hi).is_zero() {
            floor = Some(iv.hi.clone());
        } else {
            samples.push(iv.hi.clone());
            floor = None;
        }
    }
    samples.into_iter().find(|x| p.eval(x).is_positive())
}

/// True iff `p(t) <= 0` for every `t` in `iv`, decided exactly.
pub fn certify_nonpositive(p: &Poly, iv: &Interval) -> bool {
    positive_witness(p, iv).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::rat;

    fn iv(lo: Rational, hi: Rational) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn reversed_interval_rejected() {
        assert!(Interval::new(int(1), int(0)).is_err());
    }

    #[test]
    fn counts_distinct_roots() {
        let p = Poly::from_roots(int(1), &[(int(-1), 1), (rat(1, 3), 1), (int(2), 1)]);
        let s = SturmSequence::new(&p);
        assert_eq!(s.count_roots(&int(-5), &int(5)), 3);
        assert_eq!(s.count_roots(&int(-1), &int(2)), 2);
        assert_eq!(s.count_roots(&int(-2), &int(-1)), 1);
    }

    #[test]
    fn negative_square() {
        let p = Poly::from_ints(&[0, 0, -1]);
        assert!(certify_nonpositive(&p, &iv(int(-1), int(1))));
    }

    #[test]
    fn identity_positive_at_right_end() {
        let p = Poly::t();
        assert!(!certify_nonpositive(&p, &iv(int(-1), rat(1, 2))));
        assert!(certify_nonpositive(&p, &iv(int(-1), int(0))));
    }

    #[test]
    fn interior_bump_detected() {
        // -(t - 1/3)(t - 2/3) is positive strictly between its roots only.
        let p = Poly::from_roots(int(-1), &[(rat(1, 3), 1), (rat(2, 3), 1)]);
        let w = positive_witness(&p, &iv(int(0), int(1))).unwrap();
        assert!(p.eval(&w).is_positive());
        assert!(certify_nonpositive(&p, &iv(int(0), rat(1, 3))));
    }

    #[test]
    fn bump_between_endpoint_roots() {
        // Roots exactly at both endpoints, positive in between.
        let p = Poly::from_roots(int(-1), &[(int(0), 1), (int(1), 1)]);
        assert!(!certify_nonpositive(&p, &iv(int(0), int(1))));
        // Double root at an endpoint with a sign change right after.
        let q = Poly::from_roots(int(1), &[(int(0), 2), (int(1), 1)]);
        assert!(certify_nonpositive(&q, &iv(int(0), int(1))));
        assert!(!certify_nonpositive(&q, &iv(int(0), int(2))));
    }

    #[test]
    fn degenerate_interval() {
        let p = Poly::from_ints(&[1, 1]);
        assert!(certify_nonpositive(&p, &iv(int(-1), int(-1))));
        assert!(!certify_nonpositive(&p, &iv(int(0), int(0))));
    }

    #[test]
    fn touching_roots_stay_nonpositive() {
        let p = Poly::from_roots(int(-3), &[(rat(-1, 2), 2), (int(0), 2), (rat(1, 4), 2)]);
        assert!(certify_nonpositive(&p, &iv(int(-1), int(1))));
        let bumped = &p + &Poly::constant(rat(1, 1_000_000_000));
        assert!(!certify_nonpositive(&bumped, &iv(int(-1), int(1))));
    }
}

//! Exact rational arithmetic, dense polynomials and Sturm sign certification.

pub mod poly;
pub mod rational;
pub mod sturm;

pub use poly::Poly;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use sturm::{certify_nonpositive, positive_witness, Interval, SturmSequence};

//! Lattices given by exact Gram matrices, their short vectors and packing
//! invariants, and the binary codes used to build the Leech lattice.

mod code;
mod enumerate;
mod named;
mod table;

pub use code::{
    golay_code, golay_generator, hamming_distance, hamming_example, min_weight, weight,
    BinaryCode,
};
pub use named::{
    cartan_matrix, e8_from_coordinates, integer_basis, leech, pairwise_reduce, standard_lattice,
    CartanType, STANDARD_NAMES,
};
pub use table::{table_report, table_row, MordellCheck, TableReport, TableRow};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::polycore::rational::to_f64;
use crate::polycore::{format_rational, int, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    name: Option<String>,
    gram: Vec<Vec<Rational>>,
}

impl Lattice {
    /// Accepts a symmetric Gram matrix whose leading principal minors are all
    /// positive.
    pub fn new(gram: Vec<Vec<Rational>>, name: Option<String>) -> Result<Self> {
        let n = gram.len();
        for row in &gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidInput(format!(
                        "gram matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        if n == 0 {
            return Err(Error::InvalidInput("lattice of rank 0".into()));
        }
        if enumerate::ldl(&gram).is_none() {
            return Err(Error::InvalidInput("gram matrix is not positive definite".into()));
        }
        Ok(Lattice { name, gram })
    }

    /// Lattice spanned by integer row vectors, with Gram `scale · B Bᵀ`.
    pub fn from_basis(rows: &[Vec<i64>], scale: &Rational, name: Option<String>) -> Result<Self> {
        let gram = rows
            .iter()
            .map(|a| {
                rows.iter()
                    .map(|b| {
                        let dot: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
                        Rational::from_integer(BigInt::from(dot)) * scale
                    })
                    .collect()
            })
            .collect();
        Lattice::new(gram, name)
    }

    pub fn from_integer_gram(rows: &[&[i64]], name: Option<&str>) -> Result<Self> {
        let gram = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Lattice::new(gram, name.map(str::to_owned))
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_owned());
        self
    }

    pub fn leading_minors(&self) -> Vec<Rational> {
        let (d, _) = enumerate::ldl(&self.gram).expect("validated at construction");
        d.iter()
            .scan(Rational::one(), |acc, di| {
                *acc *= di;
                Some(acc.clone())
            })
            .collect()
    }

    /// `det(gram)`, the squared covolume.
    pub fn covolume_sq(&self) -> Rational {
        self.leading_minors().pop().expect("rank is positive")
    }

    pub fn norm(&self, coords: &[i64]) -> Rational {
        let mut q = Rational::zero();
        for (i, &xi) in coords.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &xj) in coords.iter().enumerate() {
                if xj != 0 {
                    q += &self.gram[i][j] * int(xi) * int(xj);
                }
            }
        }
        q
    }

    pub fn is_integral(&self) -> bool {
        self.gram.iter().flatten().all(|v| v.is_integer())
    }

    pub fn is_even(&self) -> bool {
        self.is_integral()
            && (0..self.rank()).all(|i| (self.gram[i][i].to_integer() % 2u32).is_zero())
    }
}

/// Nonzero lattice vectors, as basis coordinates, with norm at most
/// `bound_sq`. Both members of each `±v` pair are listed. Sorted by norm,
/// then lexicographically.
pub fn short_vectors(lattice: &Lattice, bound_sq: &Rational) -> Vec<Vec<i64>> {
    short_vectors_with_norms(lattice, bound_sq).into_iter().map(|(c, _)| c).collect()
}

pub fn short_vectors_with_norms(lattice: &Lattice, bound_sq: &Rational) -> Vec<(Vec<i64>, Rational)> {
    enumerate::enumerate(&lattice.gram, bound_sq)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeInvariants {
    pub rank: usize,
    pub lambda1_sq: Rational,
    pub covolume_sq: Rational,
    pub kissing: u64,
    pub density: f64,
    pub hermite: f64,
}

impl LatticeInvariants {
    /// `γⁿ = λ1²ⁿ / det`, exact.
    pub fn hermite_pow_n(&self) -> Rational {
        num_traits::pow(self.lambda1_sq.clone(), self.rank) / &self.covolume_sq
    }
}

/// Volume of the unit ball in `Rⁿ`, `π^{n/2} / Γ(n/2 + 1)`.
pub fn unit_ball_volume(n: usize) -> f64 {
    // V_0 = 1, V_1 = 2, V_n = (2π/n) V_{n-2}.
    let mut v = if n.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if n.is_multiple_of(2) { 2 } else { 3 };
    while k <= n {
        v *= 2.0 * std::f64::consts::PI / k as f64;
        k += 2;
    }
    v
}

/// Least norm found by doubling a search radius from `min_diag / 64`; the
/// radius never exceeds the smallest diagonal entry, which bounds λ1².
pub fn minimal_vectors(lattice: &Lattice) -> (Rational, Vec<Vec<i64>>) {
    let min_diag = (0..lattice.rank())
        .map(|i| lattice.gram[i][i].clone())
        .min()
        .expect("rank is positive");
    let mut bound = &min_diag / int(64);
    loop {
        let found = short_vectors_with_norms(lattice, &bound);
        if let Some((_, least)) = found.first() {
            let least = least.clone();
            let minimal = found
                .into_iter()
                .take_while(|(_, norm)| *norm == least)
                .map(|(c, _)| c)
                .collect();
            return (least, minimal);
        }
        bound = (&bound * int(2)).min(min_diag.clone());
    }
}

pub fn lattice_invariants(lattice: &Lattice) -> LatticeInvariants {
    let n = lattice.rank();
    let (lambda1_sq, minimal) = minimal_vectors(lattice);
    let covolume_sq = lattice.covolume_sq();
    let (l2, det) = (to_f64(&lambda1_sq), to_f64(&covolume_sq));
    let density = unit_ball_volume(n) * (l2 / 4.0).powf(n as f64 / 2.0) / det.sqrt();
    let hermite = l2 / det.powf(1.0 / n as f64);
    LatticeInvariants {
        rank: n,
        lambda1_sq,
        covolume_sq,
        kissing: minimal.len() as u64,
        density,
        hermite,
    }
}

/// Stable JSON form of a lattice with its invariants.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LatticeInfoJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub rank: usize,
    pub gram: Vec<Vec<String>>,
    pub lambda1_sq: String,
    pub kissing: u64,
    pub covolume_sq: String,
    pub density: f64,
    pub hermite: f64,
}

impl LatticeInfoJson {
    pub fn new(lattice: &Lattice, inv: &LatticeInvariants) -> Self {
        LatticeInfoJson {
            name: lattice.name().map(str::to_owned),
            rank: lattice.rank(),
            gram: lattice
                .gram()
                .iter()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
            lambda1_sq: format_rational(&inv.lambda1_sq),
            kissing: inv.kissing,
            covolume_sq: format_rational(&inv.covolume_sq),
            density: inv.density,
            hermite: inv.hermite,
        }
    }
}

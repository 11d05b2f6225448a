//! Root lattices, the integer lattices `Zⁿ`, and coordinate constructions of
//! E8 and the Leech lattice.

use num_integer::Integer;

use super::{golay_generator, Lattice};
use crate::polycore::{int, rat, Rational};
use crate::{Error, Result};

pub const STANDARD_NAMES: &[&str] = &["A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8", "Leech", "Zn(k)"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    D(usize),
    E(usize),
}

impl CartanType {
    fn edges(self) -> Result<(usize, Vec<(usize, usize)>)> {
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self {
            CartanType::A(n) if n >= 1 => Ok((n, chain(n))),
            CartanType::D(n) if n >= 3 => {
                let mut e = chain(n - 1);
                e.push((n - 3, n - 1));
                Ok((n, e))
            }
            CartanType::E(n) if (6..=8).contains(&n) => {
                let mut e = chain(n - 1);
                e.push((2, n - 1));
                Ok((n, e))
            }
            other => Err(Error::InvalidInput(format!("no root system {other:?}"))),
        }
    }
}

/// Cartan matrix of a simply laced root system: 2 on the diagonal, -1 on
/// edges of the Dynkin diagram.
pub fn cartan_matrix(kind: CartanType) -> Result<Vec<Vec<i64>>> {
    let (n, edges) = kind.edges()?;
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a][b] = -1;
        m[b][a] = -1;
    }
    Ok(m)
}

fn root_lattice(kind: CartanType, name: &str) -> Result<Lattice> {
    // Dynkin diagrams are trees, so negating alternate simple roots turns
    // every -1 into +1 without changing the lattice.
    let gram = cartan_matrix(kind)?
        .into_iter()
        .map(|row| row.into_iter().map(|v| int(v.abs())).collect())
        .collect();
    Lattice::new(gram, Some(name.to_owned()))
}

fn integer_lattice(k: usize) -> Result<Lattice> {
    if k == 0 {
        return Err(Error::InvalidInput("Z^0 has rank 0".into()));
    }
    let gram = (0..k)
        .map(|i| (0..k).map(|j| int((i == j) as i64)).collect())
        .collect();
    Lattice::new(gram, Some(format!("Z{k}")))
}

/// Looks up `A1…A3, D4, D5, E6…E8, Leech` (and more generally `An`, `Dn`,
/// `Zk`, `Zn(k)`), ignoring case.
pub fn standard_lattice(name: &str) -> Result<Lattice> {
    let trimmed = name.trim();
    let upper = trimmed.to_ascii_uppercase();
    let unknown = || {
        Error::InvalidInput(format!(
            "unknown lattice {trimmed:?}; expected one of {}",
            STANDARD_NAMES.join(", ")
        ))
    };
    if upper == "LEECH" {
        return leech();
    }
    if let Some(k) = upper.strip_prefix("ZN(").and_then(|r| r.strip_suffix(')')) {
        return integer_lattice(k.parse().map_err(|_| unknown())?);
    }
    let (head, tail) = upper.split_at(upper.len().min(1));
    let rank: usize = tail.parse().map_err(|_| unknown())?;
    let kind = match head {
        "Z" => return integer_lattice(rank),
        "A" => CartanType::A(rank),
        "D" => CartanType::D(rank),
        "E" => CartanType::E(rank),
        _ => return Err(unknown()),
    };
    root_lattice(kind, &upper).map_err(|_| unknown())
}

/// Hermite normal form basis of the integer row span of `generators`.
pub fn integer_basis(generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let dim = generators.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(generators.len());
    for g in generators {
        if g.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.len(),
            });
        }
        rows.push(g.iter().map(|&v| v as i128).collect());
    }
    let axpy = |target: &mut Vec<i128>, q: i128, source: &[i128]| -> Result<()> {
        for (t, s) in target.iter_mut().zip(source) {
            *t = q
                .checked_mul(*s)
                .and_then(|p| t.checked_sub(p))
                .ok_or(Error::Overflow)?;
        }
        Ok(())
    };
    let mut r = 0;
    for col in 0..dim {
        loop {
            let pivot = (r..rows.len())
                .filter(|&k| rows[k][col] != 0)
                .min_by_key(|&k| rows[k][col].abs());
            let Some(p) = pivot else { break };
            rows.swap(r, p);
            let mut done = true;
            for k in r + 1..rows.len() {
                if rows[k][col] != 0 {
                    let q = Integer::div_floor(&rows[k][col], &rows[r][col]);
                    let source = rows[r].clone();
                    axpy(&mut rows[k], q, &source)?;
                    done &= rows[k][col] == 0;
                }
            }
            if done {
                break;
            }
        }
        if r == rows.len() || rows[r][col] == 0 {
            continue;
        }
        if rows[r][col] < 0 {
            rows[r].iter_mut().for_each(|v| *v = -*v);
        }
        let source = rows[r].clone();
        for k in 0..r {
            let q = Integer::div_floor(&rows[k][col], &source[col]);
            axpy(&mut rows[k], q, &source)?;
        }
        r += 1;
    }
    rows.truncate(r);
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| i64::try_from(v).map_err(|_| Error::Overflow))
                .collect()
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Repeatedly subtracts the nearest integer multiple of one basis vector
/// from another while that shortens it, then sorts by length. Cheap, and
/// enough to give the enumeration a well-conditioned basis.
pub fn pairwise_reduce(mut basis: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let (ij, jj) = (dot(&basis[i], &basis[j]), dot(&basis[j], &basis[j]));
                // Nearest integer to ij / jj.
                let q = Integer::div_floor(&(2 * ij + jj), &(2 * jj));
                if q != 0 && 2 * (ij * q) > q * q * jj {
                    let q = q as i64;
                    let source = basis[j].clone();
                    for (t, s) in basis[i].iter_mut().zip(&source) {
                        *t -= q * s;
                    }
                    changed = true;
                }
            }
        }
    }
    basis.sort_by_key(|b| dot(b, b));
    basis
}

fn from_generators(generators: &[Vec<i64>], scale: Rational, name: &str) -> Result<Lattice> {
    let basis = pairwise_reduce(integer_basis(generators)?);
    Lattice::from_basis(&basis, &scale, Some(name.to_owned()))
}

/// E8 as the vectors of `Z⁸ ∪ (Z + 1/2)⁸` with even coordinate sum, built
/// from doubled coordinates.
pub fn e8_from_coordinates() -> Result<Lattice> {
    let mut gens = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for sign in [1, -1] {
                let mut v = vec![0i64; 8];
                v[i] = 2;
                v[j] = 2 * sign;
                gens.push(v);
            }
        }
    }
    gens.push(vec![1; 8]);
    from_generators(&gens, rat(1, 4), "E8")
}

/// The Leech lattice: `x ∈ Z²⁴ / √8` with all `x_i ≡ m (mod 2)`,
/// `Σ x_i ≡ 4m (mod 8)`, and for each residue `k` the positions with
/// `x_i ≡ k (mod 4)` forming a Golay codeword. Gram is integral, even,
/// unimodular with minimum norm 4.
pub fn leech() -> Result<Lattice> {
    let mut gens: Vec<Vec<i64>> = golay_generator()
        .into_iter()
        .map(|row| row.into_iter().map(|b| 2 * b as i64).collect())
        .collect();
    for i in 1..24 {
        for sign in [1, -1] {
            let mut v = vec![0i64; 24];
            v[0] = 4;
            v[i] = 4 * sign;
            gens.push(v);
        }
    }
    let mut odd = vec![1i64; 24];
    odd[0] = -3;
    gens.push(odd);
    from_generators(&gens, rat(1, 8), "Leech")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_invariants, short_vectors};

    #[test]
    fn a2_gram() {
        let a2 = standard_lattice("A2").unwrap();
        assert_eq!(a2.gram(), &[vec![int(2), int(1)], vec![int(1), int(2)]]);
        assert_eq!(a2.covolume_sq(), int(3));
    }

    #[test]
    fn root_lattice_determinants() {
        for (name, det) in [("A1", 2), ("A3", 4), ("D4", 4), ("D5", 4), ("E6", 3), ("E7", 2), ("E8", 1)] {
            let l = standard_lattice(name).unwrap();
            assert_eq!(l.covolume_sq(), int(det), "{name}");
            assert!(l.is_even());
        }
    }

    #[test]
    fn names() {
        assert_eq!(standard_lattice("z3").unwrap().rank(), 3);
        assert_eq!(standard_lattice("Zn(5)").unwrap().rank(), 5);
        assert_eq!(standard_lattice("e8").unwrap().name(), Some("E8"));
        for bad in ["E9", "B3", "", "Zn(x)", "Z0", "A0", "Leech2"] {
            assert!(standard_lattice(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn hnf_shape() {
        let basis = integer_basis(&[vec![4, 6], vec![6, 9], vec![2, 0]]).unwrap();
        assert_eq!(basis, vec![vec![2, 0], vec![0, 3]]);
        let basis = integer_basis(&[vec![2, 4, 6], vec![1, 2, 3]]).unwrap();
        assert_eq!(basis, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn reduction_keeps_lattice() {
        let basis = vec![vec![1, 0], vec![7, 1]];
        let reduced = pairwise_reduce(basis);
        assert_eq!(reduced, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn e8_two_ways() {
        let roots = standard_lattice("E8").unwrap();
        let coords = e8_from_coordinates().unwrap();
        assert_eq!(coords.covolume_sq(), int(1));
        assert!(coords.is_even());
        let (a, b) = (lattice_invariants(&roots), lattice_invariants(&coords));
        assert_eq!(a.lambda1_sq, b.lambda1_sq);
        assert_eq!(a.kissing, 240);
        assert_eq!(b.kissing, 240);
        assert_eq!(short_vectors(&coords, &int(2)).len(), 240);
    }

    #[test]
    fn leech_gram() {
        let l = leech().unwrap();
        assert_eq!(l.rank(), 24);
        assert_eq!(l.covolume_sq(), int(1));
        assert!(l.is_even());
    }
}

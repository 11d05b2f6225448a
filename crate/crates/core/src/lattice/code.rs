//! Binary linear codes.

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    codewords: Vec<Vec<u8>>,
}

impl BinaryCode {
    /// The span over GF(2) of the generator rows. Entries must be 0 or 1.
    pub fn from_generator(rows: &[Vec<u8>]) -> Result<Self> {
        let length = rows.first().map_or(0, Vec::len);
        for row in rows {
            if row.len() != length {
                return Err(Error::DimensionMismatch {
                    expected: length,
                    got: row.len(),
                });
            }
            if row.iter().any(|&b| b > 1) {
                return Err(Error::InvalidInput("generator entries must be 0 or 1".into()));
            }
        }
        let k = rows.len();
        if k >= 32 {
            return Err(Error::InvalidInput(format!("{k} generators is too many to enumerate")));
        }
        // Gray-code walk: each step adds a single generator.
        let mut word = vec![0u8; length];
        let mut codewords = vec![word.clone()];
        for step in 1u32..(1 << k) {
            let flip = step.trailing_zeros() as usize;
            for (w, g) in word.iter_mut().zip(&rows[flip]) {
                *w ^= g;
            }
            codewords.push(word.clone());
        }
        codewords.sort();
        codewords.dedup();
        Ok(BinaryCode { length, codewords })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn codewords(&self) -> &[Vec<u8>] {
        &self.codewords
    }

    pub fn len(&self) -> usize {
        self.codewords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn contains(&self, word: &[u8]) -> bool {
        self.codewords.binary_search_by(|w| w.as_slice().cmp(word)).is_ok()
    }
}

pub fn hamming_distance(a: &[u8], b: &[u8]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

pub fn weight(word: &[u8]) -> usize {
    word.iter().filter(|&&b| b != 0).count()
}

/// Least weight of a nonzero codeword; `None` for the zero code.
pub fn min_weight(code: &BinaryCode) -> Option<usize> {
    code.codewords().iter().map(|w| weight(w)).filter(|&w| w > 0).min()
}

/// Edges of the icosahedron on vertices 0 (top), 1..=5 (upper ring),
/// 6..=10 (lower ring), 11 (bottom).
fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let (u, u_next) = (1 + i, 1 + (i + 1) % 5);
        let (l, l_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, u), (u, u_next), (l, l_next), (u, l), (u, l_next), (l, 11)]);
    }
    edges
}

/// The 12×24 generator `[I | J - A]` with `A` the icosahedron's adjacency
/// matrix.
pub fn golay_generator() -> Vec<Vec<u8>> {
    let mut adjacency = [[0u8; 12]; 12];
    for (a, b) in icosahedron_edges() {
        adjacency[a][b] = 1;
        adjacency[b][a] = 1;
    }
    (0..12)
        .map(|i| {
            let mut row = vec![0u8; 24];
            row[i] = 1;
            for j in 0..12 {
                row[12 + j] = 1 - adjacency[i][j];
            }
            row
        })
        .collect()
}

/// The extended binary Golay code: length 24, 4096 words, minimum weight 8.
pub fn golay_code() -> BinaryCode {
    BinaryCode::from_generator(&golay_generator()).expect("fixed generator is well formed")
}

/// Four words of the cyclic length-7 Hamming code, pairwise at distance 4.
pub fn hamming_example() -> [[u8; 7]; 4] {
    [
        [1, 1, 0, 1, 0, 0, 0],
        [0, 1, 1, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 1, 0],
        [0, 0, 0, 1, 1, 0, 1],
    ]
}

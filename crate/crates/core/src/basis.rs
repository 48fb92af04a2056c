use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith;
use crate::vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("an orthoregular system needs at least one vector")]
    Empty,
    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("vector {index} has zero length")]
    ZeroVector { index: usize },
    #[error("vector {index} has length-square {found}, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: BigInt,
        found: BigInt,
    },
    #[error("vectors {i} and {j} are not orthogonal (inner product {dot})")]
    NotOrthogonal { i: usize, j: usize, dot: BigInt },
    #[error("{count} vectors exceed dimension {dim}")]
    TooMany { count: usize, dim: usize },
}

/// Orthoregular system: pairwise orthogonal integer vectors sharing one
/// nonzero length. Construction checks both properties exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoBasis {
    vectors: Vec<IntVector>,
    length_sq: BigInt,
}

impl OrthoBasis {
    pub fn new(vectors: Vec<IntVector>) -> Result<Self, BasisError> {
        let first = vectors.first().ok_or(BasisError::Empty)?;
        let dim = first.dim();
        if vectors.len() > dim {
            return Err(BasisError::TooMany {
                count: vectors.len(),
                dim,
            });
        }
        let length_sq = first.norm_sq();
        for (index, v) in vectors.iter().enumerate() {
            if v.dim() != dim {
                return Err(BasisError::DimensionMismatch {
                    index,
                    expected: dim,
                    found: v.dim(),
                });
            }
            let n = v.norm_sq();
            if n.is_zero() {
                return Err(BasisError::ZeroVector { index });
            }
            if n != length_sq {
                return Err(BasisError::LengthMismatch {
                    index,
                    expected: length_sq,
                    found: n,
                });
            }
        }
        for i in 0..vectors.len() {
            for j in i + 1..vectors.len() {
                let dot = vectors[i].dot(&vectors[j]);
                if !dot.is_zero() {
                    return Err(BasisError::NotOrthogonal { i, j, dot });
                }
            }
        }
        Ok(OrthoBasis { vectors, length_sq })
    }

    pub fn single(v: IntVector) -> Result<Self, BasisError> {
        OrthoBasis::new(vec![v])
    }

    pub fn vectors(&self) -> &[IntVector] {
        &self.vectors
    }

    pub fn into_vectors(self) -> Vec<IntVector> {
        self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].dim()
    }

    pub fn length_sq(&self) -> &BigInt {
        &self.length_sq
    }

    /// Integer length when `length_sq` is a perfect square.
    pub fn length(&self) -> Option<BigInt> {
        arith::isqrt_exact(&self.length_sq)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.dim()
    }

    /// Determinant of the matrix with the basis vectors as columns (full bases only).
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_full() {
            return None;
        }
        let rows: Vec<Vec<BigInt>> = (0..self.dim())
            .map(|r| self.vectors.iter().map(|v| v[r].clone()).collect())
            .collect();
        Some(crate::lattice::determinant(&rows))
    }

    /// Appends a vector, re-checking orthoregularity.
    pub fn push(&self, v: IntVector) -> Result<OrthoBasis, BasisError> {
        let mut vectors = self.vectors.clone();
        vectors.push(v);
        OrthoBasis::new(vectors)
    }

    /// Flips the sign of the last vector.
    pub fn reflect_last(&self) -> OrthoBasis {
        let mut vectors = self.vectors.clone();
        if let Some(last) = vectors.last_mut() {
            *last = last.neg();
        }
        OrthoBasis {
            vectors,
            length_sq: self.length_sq.clone(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> OrthoBasis {
        assert!(!k.is_zero());
        OrthoBasis {
            vectors: self.vectors.iter().map(|v| v.scale(k)).collect(),
            length_sq: &self.length_sq * k * k,
        }
    }

    /// True when `other` starts with exactly this system's vectors.
    pub fn is_prefix_of(&self, other: &OrthoBasis) -> bool {
        other.vectors.len() >= self.vectors.len()
            && self.vectors.iter().zip(&other.vectors).all(|(a, b)| a == b)
    }
}

pub(crate) fn is_odd(k: &BigInt) -> bool {
    (k % 2u32).abs() == BigInt::from(1)
}

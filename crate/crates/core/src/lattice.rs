//! Integer lattice operations: Gram matrices, fraction-free determinants, the
//! kernel lattice of `(v, -)` on `Z^3`, and cofactor completion of an
//! orthoregular system of `n - 1` vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith;
use crate::basis::{BasisError, OrthoBasis};
use crate::vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("kernel basis needs a nonzero vector")]
    ZeroVector,
    #[error("kernel basis needs a primitive vector, content is {0}")]
    NotPrimitive(BigInt),
    #[error("kernel basis is implemented for dimension 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("cofactor completion needs n - 1 vectors in Z^n, got {count} in Z^{dim}")]
    WrongCount { count: usize, dim: usize },
    #[error("odd dimension {dim} with non-square length-square {length_sq}: no integral completion")]
    NonSquareOddLength { dim: usize, length_sq: BigInt },
    #[error(transparent)]
    NotOrthoregular(#[from] BasisError),
}

pub type Matrix = Vec<Vec<BigInt>>;

/// Gram matrix of pairwise inner products.
pub fn gram(vs: &[IntVector]) -> Result<Matrix, LatticeError> {
    if let Some(first) = vs.first() {
        for (index, v) in vs.iter().enumerate() {
            if v.dim() != first.dim() {
                return Err(LatticeError::DimensionMismatch {
                    index,
                    expected: first.dim(),
                    found: v.dim(),
                });
            }
        }
    }
    Ok(vs
        .iter()
        .map(|a| vs.iter().map(|b| a.dot(b)).collect())
        .collect())
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Matrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact by Sylvester's identity
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Two vectors spanning the integer kernel of `(v, -)` on `Z^3`, with their Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub w1: IntVector,
    pub w2: IntVector,
    pub gram: [[BigInt; 2]; 2],
}

impl KernelBasis {
    pub fn gram_determinant(&self) -> BigInt {
        &self.gram[0][0] * &self.gram[1][1] - &self.gram[0][1] * &self.gram[1][0]
    }
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b) >= 0`. When `a` divides `b`
/// the coefficients are `(sign(a), 0)`, so already-reduced columns stay put.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if !a.is_zero() && b.is_multiple_of(a) {
        return (a.abs(), a.signum(), BigInt::zero());
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Kernel basis of `(v, -): Z^3 -> Z` for primitive `v`.
///
/// Unimodular column operations reduce the row `v^T` to `(1, 0, 0)`; the last
/// two columns of the accumulated transform span the kernel. Each is then
/// sign-normalized (first nonzero coordinate positive) and the pair is ordered
/// by first nonzero position, then lexicographically.
pub fn kernel_basis(v: &IntVector) -> Result<KernelBasis, LatticeError> {
    if v.dim() != 3 {
        return Err(LatticeError::UnsupportedDimension(v.dim()));
    }
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let content = v.content();
    if !content.is_one() {
        return Err(LatticeError::NotPrimitive(content));
    }

    let mut row: Vec<BigInt> = v.coords().to_vec();
    let mut cols: Vec<IntVector> = (0..3).map(|i| IntVector::unit(3, i)).collect();
    for j in 1..3 {
        if row[j].is_zero() {
            continue;
        }
        let (g, s, t) = ext_gcd(&row[0], &row[j]);
        let a = &row[0] / &g;
        let b = &row[j] / &g;
        let pivot = cols[0].combine(&s, &cols[j], &t);
        let other = cols[0].combine(&-b, &cols[j], &a);
        cols[0] = pivot;
        cols[j] = other;
        row[0] = g;
        row[j] = BigInt::zero();
    }
    // the pivot is -1 when no column op ran on a negative leading entry
    debug_assert!(row[0].abs().is_one());

    let mut pair = [cols[1].sign_normalized(), cols[2].sign_normalized()];
    pair.sort_by(|x, y| {
        x.first_nonzero()
            .cmp(&y.first_nonzero())
            .then_with(|| x.cmp(y))
    });
    let [w1, w2] = pair;
    let gram = [
        [w1.norm_sq(), w1.dot(&w2)],
        [w2.dot(&w1), w2.norm_sq()],
    ];
    let basis = KernelBasis { w1, w2, gram };
    assert_eq!(
        basis.gram_determinant(),
        v.norm_sq(),
        "kernel Gram determinant must equal |v|^2"
    );
    log::debug!(
        "kernel basis of {v}: w1 = {}, w2 = {}, gram = ({}, {}; {}, {})",
        basis.w1,
        basis.w2,
        basis.gram[0][0],
        basis.gram[0][1],
        basis.gram[1][0],
        basis.gram[1][1]
    );
    Ok(basis)
}

/// Raw cofactor vector of the last column of `(v_1, ..., v_{n-1}, x)`.
/// Its (1-based) entry `i` is `(-1)^(i+n)` times the minor with row `i` deleted.
pub fn cofactor_vector(vs: &[IntVector]) -> IntVector {
    let n = vs.len() + 1;
    let coords = (0..n)
        .map(|i| {
            let minor: Matrix = (0..n)
                .filter(|&r| r != i)
                .map(|r| vs.iter().map(|v| v[r].clone()).collect())
                .collect();
            let d = determinant(&minor);
            if (i + n) % 2 == 1 {
                d
            } else {
                -d
            }
        })
        .collect();
    IntVector::new(coords)
}

/// Completes an orthoregular system of `n - 1` vectors in `Z^n` with one more
/// integer vector of the same length. The cofactor vector has length
/// `l^(n-1)` and is divided by `l^(n-2)`; the result gives `det > 0`.
pub fn cofactor_complete(system: &[IntVector]) -> Result<IntVector, LatticeError> {
    let basis = OrthoBasis::new(system.to_vec())?;
    let dim = basis.dim();
    if basis.len() + 1 != dim {
        return Err(LatticeError::WrongCount {
            count: basis.len(),
            dim,
        });
    }
    let length_sq = basis.length_sq();
    // l^(n-2): an integer power of L for even n, needs integral l otherwise
    let divisor = if dim % 2 == 0 {
        num_traits::pow(length_sq.clone(), (dim - 2) / 2)
    } else {
        let l = arith::isqrt_exact(length_sq).ok_or_else(|| LatticeError::NonSquareOddLength {
            dim,
            length_sq: length_sq.clone(),
        })?;
        num_traits::pow(l, dim - 2)
    };
    let raw = cofactor_vector(system);
    let completed = raw
        .div_exact(&divisor)
        .unwrap_or_else(|| panic!("cofactor vector {raw} not divisible by l^(n-2) = {divisor}"));
    debug_assert_eq!(&completed.norm_sq(), length_sq);
    Ok(completed)
}

/// Cross product in `Z^3`.
pub fn cross(a: &IntVector, b: &IntVector) -> IntVector {
    assert!(a.dim() == 3 && b.dim() == 3);
    IntVector::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&iv(&[1, 2, 2])).unwrap();
        assert_eq!(k.w1, iv(&[2, -1, 0]));
        assert_eq!(k.w2, iv(&[2, 0, -1]));
        assert_eq!(k.gram_determinant(), BigInt::from(9));
        assert_eq!(k.gram[0][0], BigInt::from(5));
        assert_eq!(k.gram[0][1], BigInt::from(4));

        let k = kernel_basis(&iv(&[0, 0, 1])).unwrap();
        assert_eq!(k.w1, iv(&[1, 0, 0]));
        assert_eq!(k.w2, iv(&[0, 1, 0]));

        let k = kernel_basis(&iv(&[2, 3, 6])).unwrap();
        assert_eq!(k.gram_determinant(), BigInt::from(49));
    }

    #[test]
    fn negative_axis_vectors() {
        for v in [[-1, 0, 0], [0, -1, 0], [0, 0, -1], [-3, 0, -4]] {
            let v = iv(&v);
            let k = kernel_basis(&v).unwrap();
            assert!(k.w1.dot(&v).is_zero() && k.w2.dot(&v).is_zero());
        }
    }

    #[test]
    fn kernel_rejects_bad_input() {
        assert_eq!(
            kernel_basis(&iv(&[2, 4, 4])),
            Err(LatticeError::NotPrimitive(BigInt::from(2)))
        );
        assert_eq!(kernel_basis(&iv(&[0, 0, 0])), Err(LatticeError::ZeroVector));
        assert_eq!(
            kernel_basis(&iv(&[1, 0])),
            Err(LatticeError::UnsupportedDimension(2))
        );
    }

    #[test]
    fn gram_examples() {
        assert_eq!(gram(&[iv(&[1, 0]), iv(&[0, 1])]).unwrap(), mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(
            gram(&[iv(&[2, -1, 0]), iv(&[2, 0, -1])]).unwrap(),
            mat(&[&[5, 4], &[4, 5]])
        );
        assert!(gram(&[]).unwrap().is_empty());
        assert!(matches!(
            gram(&[iv(&[1, 0]), iv(&[1])]),
            Err(LatticeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bareiss_matches_small_determinants() {
        assert_eq!(determinant(&mat(&[&[2, 3], &[1, 4]])), BigInt::from(5));
        assert_eq!(determinant(&mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&mat(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]])),
            BigInt::from(-3)
        );
        assert_eq!(determinant(&mat(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn cofactor_examples() {
        let c = cofactor_complete(&[iv(&[1, 2, 2]), iv(&[2, -2, 1])]).unwrap();
        assert_eq!(c, iv(&[2, 1, -2]));

        let c = cofactor_complete(&[iv(&[3, 4])]).unwrap();
        assert_eq!(c, iv(&[-4, 3]));

        // (1,1,1,1) with its i and j images
        let c = cofactor_complete(&[iv(&[1, 1, 1, 1]), iv(&[-1, 1, -1, 1]), iv(&[-1, 1, 1, -1])])
            .unwrap();
        assert_eq!(c.norm_sq(), BigInt::from(4));
        assert!(c == iv(&[-1, -1, 1, 1]) || c == iv(&[1, 1, -1, -1]));
    }

    #[test]
    fn cofactor_rejects_bad_systems() {
        assert!(matches!(
            cofactor_complete(&[iv(&[1, 1, 0])]),
            Err(LatticeError::WrongCount { .. })
        ));
        assert!(matches!(
            cofactor_complete(&[iv(&[1, 1, 0]), iv(&[1, -1, 0])]),
            Err(LatticeError::NonSquareOddLength { .. })
        ));
        assert!(matches!(
            cofactor_complete(&[iv(&[1, 2, 2]), iv(&[2, 2, 1])]),
            Err(LatticeError::NotOrthoregular(_))
        ));
    }

    #[test]
    fn cross_product_agrees_with_cofactors() {
        let a = iv(&[1, 2, 2]);
        let b = iv(&[2, -2, 1]);
        assert_eq!(cross(&a, &b), cofactor_vector(&[a, b]));
    }
}

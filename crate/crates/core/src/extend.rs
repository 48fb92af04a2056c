//! Extension of an integer vector in `Z^3` with integer norm to a full
//! integral orthoregular basis, and the enumeration of such vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith;
use crate::basis::{BasisError, OrthoBasis};
use crate::lattice::{self, KernelBasis, LatticeError};
use crate::quadform::{self, QuadForm, QuadFormError};
use crate::vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("cannot extend the zero vector")]
    ZeroVector,
    #[error("the pipeline works in Z^3, got dimension {0}")]
    UnsupportedDimension(usize),
    #[error(
        "|v|^2 = {0} is not a perfect square; in odd dimension a full orthoregular integer basis \
         has determinant l^n, which forces the length l to be an integer"
    )]
    NonIntegerNorm(BigInt),
    #[error("basis has {found} vectors, a full basis of Z^{dim} needs {dim}")]
    NotFull { found: usize, dim: usize },
    #[error("length-square {0} is not a perfect square; no rational orthogonal matrix")]
    IrrationalLength(BigInt),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    QuadForm(#[from] QuadFormError),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `det = +l^3`
    #[default]
    Proper,
    /// Last vector negated, `det = -l^3`.
    Reflected,
}

/// Intermediate values of one pipeline run, kept for tracing and for the
/// determinant claim checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub basis: OrthoBasis,
    pub content: BigInt,
    pub kernel: KernelBasis,
    pub form: QuadForm,
    pub coefficients: (BigInt, BigInt),
}

/// Extends `v` to `{v, w, x}` using the constructive representation of `l^2`
/// by the kernel's Gram form.
pub fn extend3(v: &IntVector) -> Result<OrthoBasis, ExtendError> {
    extend3_with(v, Orientation::Proper).map(|e| e.basis)
}

pub fn extend3_with(v: &IntVector, orientation: Orientation) -> Result<Extension, ExtendError> {
    let (content, primitive, l) = prepare(v)?;
    let kernel = lattice::kernel_basis(&primitive)?;
    let form = QuadForm::from_gram(&kernel.gram, &l)?;
    let rep = quadform::solve(&form)?.ok_or_else(|| {
        ExtendError::Internal(format!("kernel form of {primitive} does not represent {l}^2"))
    })?;
    finish(v, content, primitive, kernel, form, (rep.x, rep.y), orientation)
}

/// One extension per representation of `l^2` by the kernel Gram form found
/// by the exhaustive oracle over `|y| <= sqrt(a)`.
pub fn extend3_all(v: &IntVector, orientation: Orientation) -> Result<Vec<Extension>, ExtendError> {
    let (content, primitive, l) = prepare(v)?;
    let kernel = lattice::kernel_basis(&primitive)?;
    let form = QuadForm::from_gram(&kernel.gram, &l)?;
    let bound = arith::isqrt_floor(form.a()) + BigInt::one();
    quadform::oracle_solutions(&form, &bound)?
        .into_iter()
        .map(|xy| {
            finish(
                v,
                content.clone(),
                primitive.clone(),
                kernel.clone(),
                form.clone(),
                xy,
                orientation,
            )
        })
        .collect()
}

fn prepare(v: &IntVector) -> Result<(BigInt, IntVector, BigInt), ExtendError> {
    if v.dim() != 3 {
        return Err(ExtendError::UnsupportedDimension(v.dim()));
    }
    if v.is_zero() {
        return Err(ExtendError::ZeroVector);
    }
    let norm_sq = v.norm_sq();
    let full_length = arith::isqrt_exact(&norm_sq).ok_or(ExtendError::NonIntegerNorm(norm_sq))?;
    let content = v.content();
    let primitive = v.div_exact(&content).expect("content divides every coordinate");
    // content divides the length since content^2 | l^2
    let l = full_length / &content;
    log::debug!("extend {v}: content {content}, primitive {primitive}, length {l}");
    Ok((content, primitive, l))
}

fn finish(
    v: &IntVector,
    content: BigInt,
    primitive: IntVector,
    kernel: KernelBasis,
    form: QuadForm,
    (x, y): (BigInt, BigInt),
    orientation: Orientation,
) -> Result<Extension, ExtendError> {
    let w = kernel.w1.combine(&x, &kernel.w2, &y);
    log::debug!("representation (x, y) = ({x}, {y}) gives w = {w}");
    let third = lattice::cofactor_complete(&[primitive.clone(), w.clone()])?;
    let scaled = [primitive, w, third].map(|u| u.scale(&content));
    if scaled[0] != *v {
        return Err(ExtendError::Internal(format!(
            "rescaled first vector {} differs from input {v}",
            scaled[0]
        )));
    }
    let mut basis = OrthoBasis::new(scaled.to_vec())?;
    if orientation == Orientation::Reflected {
        basis = basis.reflect_last();
    }
    Ok(Extension {
        basis,
        content,
        kernel,
        form,
        coefficients: (x, y),
    })
}

/// Square matrix of rationals with the basis vectors divided by their length as columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalOrthogonalMatrix {
    denominator: BigInt,
    columns: Vec<IntVector>,
}

impl RationalOrthogonalMatrix {
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Integer numerators; entry `(r, c)` is `numerators[c][r] / denominator`.
    pub fn numerator_columns(&self) -> &[IntVector] {
        &self.columns
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> BigRational {
        BigRational::new(self.columns[col][row].clone(), self.denominator.clone())
    }

    /// `M^T M == I`, computed in exact rational arithmetic.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s: BigRational = (0..n)
                    .map(|k| self.entry(k, i) * self.entry(k, j))
                    .fold(BigRational::zero(), |acc, t| acc + t);
                if i == j {
                    s.is_one()
                } else {
                    s.is_zero()
                }
            })
        })
    }
}

pub fn to_rational_orthogonal(b: &OrthoBasis) -> Result<RationalOrthogonalMatrix, ExtendError> {
    if !b.is_full() {
        return Err(ExtendError::NotFull {
            found: b.len(),
            dim: b.dim(),
        });
    }
    let l = b
        .length()
        .ok_or_else(|| ExtendError::IrrationalLength(b.length_sq().clone()))?;
    let m = RationalOrthogonalMatrix {
        denominator: l,
        columns: b.vectors().to_vec(),
    };
    if !m.is_orthogonal() {
        return Err(ExtendError::Internal("M^T M != I".into()));
    }
    Ok(m)
}

/// Primitive `(a, b, c)` with `0 <= a <= b <= c`, integer norm, ordered by
/// norm and then lexicographically by `(a, b, c)`.
#[derive(Debug, Clone)]
pub struct IntegerNormVectors {
    limit: Option<u64>,
    norm: u64,
    pending: std::vec::IntoIter<IntVector>,
}

/// Enumerates primitive nonnegative sorted vectors with integer norm and
/// largest coordinate at most `limit` (`None` for an unbounded stream).
pub fn enumerate_integer_norm(limit: Option<u64>) -> IntegerNormVectors {
    IntegerNormVectors {
        limit,
        norm: 0,
        pending: Vec::new().into_iter(),
    }
}

impl IntegerNormVectors {
    fn norm_cap(&self) -> Option<u64> {
        // c <= limit and a <= b <= c imply l <= sqrt(3) * limit
        self.limit
            .map(|lim| integer_sqrt(3 * (lim as u128) * (lim as u128)) as u64)
    }

    fn vectors_of_norm(&self, l: u64) -> Vec<IntVector> {
        let l2 = (l as u128) * (l as u128);
        let mut out = Vec::new();
        let mut a: u128 = 0;
        while 3 * a * a <= l2 {
            let mut b = a;
            while a * a + 2 * b * b <= l2 {
                let rest = l2 - a * a - b * b;
                let c = integer_sqrt(rest);
                if c * c == rest
                    && c >= b
                    && self.limit.is_none_or(|lim| c <= lim as u128)
                    && (a as u64).gcd(&(b as u64)).gcd(&(c as u64)) == 1
                {
                    out.push(IntVector::new(vec![a.into(), b.into(), c.into()]));
                }
                b += 1;
            }
            a += 1;
        }
        out
    }
}

fn integer_sqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

impl Iterator for IntegerNormVectors {
    type Item = IntVector;

    fn next(&mut self) -> Option<IntVector> {
        loop {
            if let Some(v) = self.pending.next() {
                return Some(v);
            }
            if self.norm_cap().is_some_and(|cap| self.norm >= cap) {
                return None;
            }
            self.norm += 1;
            self.pending = self.vectors_of_norm(self.norm).into_iter();
        }
    }
}

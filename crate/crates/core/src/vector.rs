use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![BigInt::zero(); n])
    }

    /// Standard basis vector `e_i` in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = IntVector::zeros(n);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in inner product");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> BigInt {
        self.dot(self)
    }

    /// gcd of the coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == BigInt::from(1)
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coordinate; `None` when some coordinate is not a multiple of `k`.
    pub fn div_exact(&self, k: &BigInt) -> Option<IntVector> {
        if k.is_zero() {
            return None;
        }
        self.0
            .iter()
            .map(|c| {
                let (q, r) = c.div_rem(k);
                r.is_zero().then_some(q)
            })
            .collect::<Option<Vec<_>>>()
            .map(IntVector)
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), other.dim());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `x * self + y * other`
    pub fn combine(&self, x: &BigInt, other: &IntVector, y: &BigInt) -> IntVector {
        assert_eq!(self.dim(), other.dim());
        IntVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a * x + b * y)
                .collect(),
        )
    }

    /// Sign of the first nonzero coordinate made positive.
    pub fn sign_normalized(&self) -> IntVector {
        match self.0.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    /// Concatenation of coordinates.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        IntVector(v)
    }
}

/// Renders as `(a,b,c)`.
impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

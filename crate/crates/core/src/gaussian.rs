//! Arithmetic and prime factorization in the Gaussian integers `Z[i]`.
//!
//! Primes are kept in a canonical first-quadrant form (`re > 0`, `im >= 0`):
//! `1 + i` for the ramified prime, `q` itself for an inert `q ≡ 3 (mod 4)`,
//! and for a split `p ≡ 1 (mod 4)` the pair `π` (with `re > im`) and the
//! first-quadrant associate of its conjugate (with `im > re`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{self, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("zero has no Gaussian factorization")]
    Zero,
    #[error("{0} is not a prime splitting in Z[i] (need p = 2 or p ≡ 1 mod 4)")]
    NotSplit(BigInt),
    #[error("norm has inert prime {0} to an odd power")]
    OddInertExponent(BigInt),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussInt {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussInt::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn mul_unit(&self, u: Unit) -> Self {
        match u {
            Unit::One => self.clone(),
            Unit::I => GaussInt::new(-&self.im, self.re.clone()),
            Unit::MinusOne => -self,
            Unit::MinusI => GaussInt::new(self.im.clone(), -&self.re),
        }
    }

    /// Quotient when `w` divides `self` exactly.
    pub fn div_exact(&self, w: &GaussInt) -> Option<GaussInt> {
        let n = w.norm();
        if n.is_zero() {
            return None;
        }
        let t = self * &w.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then_some(GaussInt { re: qr, im: qi })
    }

    /// Euclidean division with the quotient rounded to the nearest lattice point.
    pub fn div_rem_round(&self, w: &GaussInt) -> (GaussInt, GaussInt) {
        let n = w.norm();
        assert!(!n.is_zero(), "division by zero in Z[i]");
        let t = self * &w.conj();
        let q = GaussInt {
            re: round_div(&t.re, &n),
            im: round_div(&t.im, &n),
        };
        let r = self - &(&q * w);
        (q, r)
    }

    /// The associate lying in the first quadrant (`re > 0`, `im >= 0`), and
    /// the unit `u` with `self = u * associate`.
    pub fn first_quadrant(&self) -> (Unit, GaussInt) {
        assert!(!self.is_zero(), "zero has no associates");
        for u in Unit::ALL {
            let cand = self.mul_unit(u.inverse());
            if cand.re.is_positive() && !cand.im.is_negative() {
                return (u, cand);
            }
        }
        unreachable!("every nonzero Gaussian integer has a first-quadrant associate")
    }
}

fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    // floor((2a + n) / 2n) for n > 0
    let two = BigInt::from(2);
    (a * &two + n).div_floor(&(n * &two))
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussInt {
            type Output = GaussInt;
            fn $m(self, rhs: GaussInt) -> GaussInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unit {
    pub const ALL: [Unit; 4] = [Unit::One, Unit::I, Unit::MinusOne, Unit::MinusI];

    pub fn inverse(self) -> Unit {
        match self {
            Unit::One => Unit::One,
            Unit::I => Unit::MinusI,
            Unit::MinusOne => Unit::MinusOne,
            Unit::MinusI => Unit::I,
        }
    }

    pub fn to_gauss(self) -> GaussInt {
        GaussInt::one().mul_unit(self)
    }

    fn from_gauss(z: &GaussInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| u.to_gauss() == *z)
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unit::One => "1",
            Unit::I => "i",
            Unit::MinusOne => "-1",
            Unit::MinusI => "-i",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussFactorization {
    pub unit: Unit,
    pub factors: Vec<(GaussInt, u32)>,
}

impl GaussFactorization {
    pub fn reconstruct(&self) -> GaussInt {
        self.factors
            .iter()
            .fold(self.unit.to_gauss(), |acc, (p, e)| &acc * &p.pow(*e))
    }

    pub fn exponent_of(&self, prime: &GaussInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == prime)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }
}

pub fn gcd(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem_round(&y);
        x = y;
        y = r;
    }
    x
}

/// Canonical Gaussian prime `π` of norm `p` for `p = 2` or `p ≡ 1 (mod 4)`.
/// For odd `p` the result satisfies `re > im > 0`.
pub fn split_prime(p: &BigInt) -> Result<GaussInt, GaussError> {
    if !arith::is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()).into());
    }
    let two = BigInt::from(2);
    if *p == two {
        return Ok(GaussInt::new(1, 1));
    }
    if (p % 4u32) != BigInt::one() {
        return Err(GaussError::NotSplit(p.clone()));
    }
    let p_minus_1 = p - 1u32;
    let half = &p_minus_1 >> 1usize;
    let quarter = &p_minus_1 >> 2usize;
    // the first quadratic non-residue c gives r = c^((p-1)/4) with r^2 ≡ -1
    let mut c = BigInt::from(2);
    let root = loop {
        if c.modpow(&half, p) == p_minus_1 {
            break c.modpow(&quarter, p);
        }
        c += 1u32;
    };
    let g = gcd(&GaussInt::new(p.clone(), 0), &GaussInt::new(root, 1));
    let (_, g) = g.first_quadrant();
    debug_assert_eq!(&g.norm(), p);
    Ok(if g.re > g.im { g } else { swap(&g) })
}

/// First-quadrant associate of the conjugate: `a + bi -> b + ai`.
fn swap(z: &GaussInt) -> GaussInt {
    GaussInt::new(z.im.clone(), z.re.clone())
}

/// The two canonical primes above a split rational prime, `π` first.
pub fn prime_pair(p: &BigInt) -> Result<(GaussInt, GaussInt), GaussError> {
    let pi = split_prime(p)?;
    let pi_bar = swap(&pi);
    Ok((pi, pi_bar))
}

/// Exponent of the prime `pi` in the nonzero `z`, by repeated exact division.
/// Invariant under replacing `pi` by an associate.
pub fn valuation(pi: &GaussInt, z: &GaussInt) -> Result<u32, GaussError> {
    if z.is_zero() || pi.is_zero() {
        return Err(GaussError::Zero);
    }
    let mut rest = z.clone();
    let mut k = 0;
    while let Some(q) = rest.div_exact(pi) {
        rest = q;
        k += 1;
    }
    Ok(k)
}

/// Unit-normalized prime factorization of a nonzero Gaussian integer.
pub fn gauss_factorize(z: &GaussInt) -> Result<GaussFactorization, GaussError> {
    if z.is_zero() {
        return Err(GaussError::Zero);
    }
    let norm = arith::factorize(&z.norm())?;
    let mut rest = z.clone();
    let mut factors = Vec::new();
    let divide = |rest: &mut GaussInt, by: &GaussInt, times: u32| {
        for _ in 0..times {
            *rest = rest
                .div_exact(by)
                .unwrap_or_else(|| panic!("{by} does not divide {rest}"));
        }
    };

    for (p, e) in &norm.factors {
        let residue = p % 4u32;
        if residue == BigInt::from(2) {
            let ramified = GaussInt::new(1, 1);
            divide(&mut rest, &ramified, *e);
            factors.push((ramified, *e));
        } else if residue == BigInt::from(3) {
            if e % 2 == 1 {
                return Err(GaussError::OddInertExponent(p.clone()));
            }
            let inert = GaussInt::new(p.clone(), 0);
            divide(&mut rest, &inert, e / 2);
            factors.push((inert, e / 2));
        } else {
            let (pi, pi_bar) = prime_pair(p)?;
            let mut k = 0;
            while k < *e {
                match rest.div_exact(&pi) {
                    Some(q) => {
                        rest = q;
                        k += 1;
                    }
                    None => break,
                }
            }
            divide(&mut rest, &pi_bar, e - k);
            if k > 0 {
                factors.push((pi, k));
            }
            if e - k > 0 {
                factors.push((pi_bar, e - k));
            }
        }
    }
    let unit = Unit::from_gauss(&rest)
        .unwrap_or_else(|| panic!("cofactor {rest} left after removing all primes is not a unit"));
    Ok(GaussFactorization { unit, factors })
}

//! Representations of `l^2` by integral binary forms `a x^2 + 2b xy + c y^2`
//! with `ac - b^2 = l^2`.
//!
//! [`solve`] is constructive: it factors `a` over `Z` and `l + bi` over `Z[i]`,
//! assembles a Gaussian integer `u + iy` of norm `a` whose product with
//! `l + bi` has real part divisible by `a`, and reads off
//! `x = (ul - by) / a`. [`oracle_solve`] is an independent exhaustive search
//! over the finite range `|y| <= sqrt(a)` that any solution must lie in.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{self, ArithError};
use crate::gaussian::{self, GaussError, GaussInt};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadFormError {
    #[error("ac - b^2 = {found} but l^2 = {expected}")]
    DiscriminantMismatch { expected: BigInt, found: BigInt },
    #[error("l must be nonnegative, got {0}")]
    NegativeTarget(BigInt),
    #[error("leading coefficient must be positive, got {0}")]
    NonPositiveLeading(BigInt),
    #[error("exponent choice needs 2s + t >= m, got m = {m}, s = {s}, t = {t}")]
    ExponentPrecondition { m: u32, s: u32, t: u32 },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Gauss(#[from] GaussError),
}

/// The form `a x^2 + 2b xy + c y^2` together with its target `l^2 = ac - b^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    l: BigInt,
}

impl QuadForm {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        l: impl Into<BigInt>,
    ) -> Result<Self, QuadFormError> {
        let (a, b, c, l) = (a.into(), b.into(), c.into(), l.into());
        if l.is_negative() {
            return Err(QuadFormError::NegativeTarget(l));
        }
        let found = &a * &c - &b * &b;
        let expected = &l * &l;
        if found != expected {
            return Err(QuadFormError::DiscriminantMismatch { expected, found });
        }
        Ok(QuadForm { a, b, c, l })
    }

    /// Form of a 2x2 Gram matrix `(a, b; b, c)` with `l = sqrt(det)`.
    pub fn from_gram(gram: &[[BigInt; 2]; 2], l: &BigInt) -> Result<Self, QuadFormError> {
        QuadForm::new(gram[0][0].clone(), gram[0][1].clone(), gram[1][1].clone(), l.clone())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn l(&self) -> &BigInt {
        &self.l
    }

    pub fn target(&self) -> BigInt {
        &self.l * &self.l
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + BigInt::from(2) * &self.b * x * y + &self.c * y * y
    }
}

/// A solution `(x, y)` with the auxiliary `u = (ax + by) / l`, so `u^2 + y^2 = a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub x: BigInt,
    pub y: BigInt,
    /// Meaningless (set to 0) when `l = 0`.
    pub u: BigInt,
}

pub fn is_representable(f: &QuadForm) -> bool {
    if f.a.is_negative() {
        return false;
    }
    f.a.is_zero() || arith::three_mod_four_valuations_even(&f.a)
}

/// Exponents `(a_j, b_j)` with `2a_j + b_j = m` and `s + min(t, b_j) >= a_j + b_j`.
pub fn choose_exponents(m: u32, s: u32, t: u32) -> Result<(u32, u32), QuadFormError> {
    if 2 * s + t < m {
        return Err(QuadFormError::ExponentPrecondition { m, s, t });
    }
    Ok(if 2 * s <= m {
        (s, m - 2 * s)
    } else {
        (m / 2, m % 2)
    })
}

/// Constructive representation of `l^2`; `None` when the form does not represent it.
pub fn solve(f: &QuadForm) -> Result<Option<Representation>, QuadFormError> {
    if !f.a.is_positive() {
        return Err(QuadFormError::NonPositiveLeading(f.a.clone()));
    }
    if !is_representable(f) {
        return Ok(None);
    }
    if f.l.is_zero() {
        // ac = b^2 and the target is 0
        return Ok(Some(Representation {
            x: BigInt::zero(),
            y: BigInt::zero(),
            u: BigInt::zero(),
        }));
    }

    // only the primes of `a` matter, so `l + ib` is never factored in full
    let a_factors = arith::factorize(&f.a)?;
    let l_plus_ib = GaussInt::new(f.l.clone(), f.b.clone());
    log::debug!(
        "solve {}x^2 + 2*{}xy + {}y^2 = {}^2: a = {}",
        f.a,
        f.b,
        f.c,
        f.l,
        a_factors
            .factors
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect::<Vec<_>>()
            .join(" * ")
    );

    let mut z = GaussInt::one();
    for (p, e) in &a_factors.factors {
        let residue = p % 4u32;
        if residue == BigInt::from(2) {
            z = &z * &GaussInt::new(1, 1).pow(*e);
        } else if residue == BigInt::from(3) {
            z = &z * &GaussInt::new(p.clone(), 0).pow(e / 2);
        } else {
            let (pi, pi_bar) = gaussian::prime_pair(p)?;
            let e_pi = gaussian::valuation(&pi, &l_plus_ib)?;
            let e_bar = gaussian::valuation(&pi_bar, &l_plus_ib)?;
            let s = e_pi.min(e_bar);
            let t = e_pi.abs_diff(e_bar);
            // the prime carrying the excess exponent t; its conjugate enters u + iy
            let excess = if e_pi >= e_bar { &pi } else { &pi_bar };
            let (aj, bj) = choose_exponents(*e, s, t)?;
            log::debug!(
                "p = {p} = ({pi})({pi_bar}): l+ib has exponents {e_pi}, {e_bar}; \
                 m = {e}, s = {s}, t = {t} -> a = {aj}, b = {bj}"
            );
            z = &z * &GaussInt::new(p.clone(), 0).pow(aj);
            z = &z * &excess.conj().pow(bj);
        }
    }
    if z.norm() != f.a {
        return Err(QuadFormError::Internal(format!(
            "constructed {z} has norm {} instead of {}",
            z.norm(),
            f.a
        )));
    }

    let candidates = {
        let conj = z.conj();
        let mut c: Vec<GaussInt> = gaussian::Unit::ALL.iter().map(|&u| z.mul_unit(u)).collect();
        c.extend(gaussian::Unit::ALL.iter().map(|&u| conj.mul_unit(u)));
        c
    };
    for (k, cand) in candidates.iter().enumerate() {
        let (u, y) = (&cand.re, &cand.im);
        let numer = u * &f.l - &f.b * y;
        let (x, rem) = numer.div_rem(&f.a);
        if !rem.is_zero() {
            continue;
        }
        if k > 0 {
            log::warn!("constructed u+iy = {z} needed associate {cand}");
        }
        if f.eval(&x, y) != f.target() {
            return Err(QuadFormError::Internal(format!(
                "(x, y) = ({x}, {y}) does not represent {}",
                f.target()
            )));
        }
        return Ok(Some(Representation {
            x,
            y: y.clone(),
            u: u.clone(),
        }));
    }
    Err(QuadFormError::Internal(format!(
        "a = {} divides ul - by for no associate of {z}",
        f.a
    )))
}

/// Every solution `(x, y)` with `|y| <= min(bound, isqrt(a))`, sorted
/// lexicographically. Since `a * f(x, y) = (ax + by)^2 + l^2 y^2`, all
/// solutions have `|y| <= sqrt(a)`, and for fixed `y` the discriminant is
/// `l^2 (a - y^2)`.
pub fn oracle_solutions(f: &QuadForm, bound: &BigInt) -> Result<Vec<(BigInt, BigInt)>, QuadFormError> {
    if !f.a.is_positive() {
        return Err(QuadFormError::NonPositiveLeading(f.a.clone()));
    }
    let limit = arith::isqrt_floor(&f.a).min(bound.abs());
    let mut out = Vec::new();
    let mut y = -limit.clone();
    while y <= limit {
        if let Some(root) = arith::isqrt_exact(&(&f.a - &y * &y)) {
            let lu = &f.l * &root;
            let base = -(&f.b * &y);
            for numer in [&base - &lu, &base + &lu] {
                let (x, rem) = numer.div_rem(&f.a);
                if rem.is_zero() {
                    debug_assert_eq!(f.eval(&x, &y), f.target());
                    out.push((x, y.clone()));
                }
            }
        }
        y += 1;
    }
    out.sort_by(lex);
    out.dedup();
    Ok(out)
}

fn lex(p: &(BigInt, BigInt), q: &(BigInt, BigInt)) -> Ordering {
    p.0.cmp(&q.0).then_with(|| p.1.cmp(&q.1))
}

/// Lexicographically smallest solution within `|y| <= min(bound, isqrt(a))`.
pub fn oracle_solve(f: &QuadForm, bound: &BigInt) -> Result<Option<(BigInt, BigInt)>, QuadFormError> {
    Ok(oracle_solutions(f, bound)?.into_iter().next())
}

/// Oracle over the full proven range `|y| <= isqrt(a)`.
pub fn oracle_solve_full(f: &QuadForm) -> Result<Option<(BigInt, BigInt)>, QuadFormError> {
    let bound = arith::isqrt_floor(&f.a.abs()) + BigInt::one();
    oracle_solve(f, &bound)
}

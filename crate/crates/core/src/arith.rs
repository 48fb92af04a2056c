//! Rational-integer utilities: exact square roots, prime factorization and
//! p-adic valuations over arbitrary-precision integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Trial division runs up to this bound before handing cofactors to Pollard rho.
const TRIAL_DIVISION_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("cannot factorize zero")]
    FactorZero,
    #[error("valuation of zero is infinite")]
    ValuationOfZero,
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
}

/// Signed prime factorization `sign * prod(p^e)` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: Sign,
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Exponent of `p` in the factorization (0 when absent).
    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn reconstruct(&self) -> BigInt {
        let magnitude = self
            .factors
            .iter()
            .fold(BigInt::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize));
        match self.sign {
            Sign::Minus => -magnitude,
            _ => magnitude,
        }
    }
}

/// Returns `r` with `r * r == m` when `m` is a perfect square.
pub fn isqrt_exact(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let r = m.sqrt();
    if &r * &r == *m {
        Some(r)
    } else {
        None
    }
}

pub fn is_square(m: &BigInt) -> bool {
    isqrt_exact(m).is_some()
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt_floor(m: &BigInt) -> BigInt {
    assert!(!m.is_negative(), "isqrt of negative integer");
    m.sqrt()
}

pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

/// Largest `e` with `p^e | m`.
pub fn valuation(p: &BigInt, m: &BigInt) -> Result<u32, ArithError> {
    if m.is_zero() {
        return Err(ArithError::ValuationOfZero);
    }
    if p.abs() <= BigInt::one() {
        return Err(ArithError::NotPrime(p.clone()));
    }
    let mut e = 0;
    let mut rest = m.abs();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        rest = q;
        e += 1;
    }
}

/// Factorizes a nonzero integer. Output is deterministic.
pub fn factorize(m: &BigInt) -> Result<Factorization, ArithError> {
    if m.is_zero() {
        return Err(ArithError::FactorZero);
    }
    let sign = if m.is_negative() { Sign::Minus } else { Sign::Plus };
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = m.magnitude().clone();

    trial_divide(&mut rest, &mut primes);
    if !rest.is_one() {
        split_large(rest, &mut primes);
    }

    primes.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        let p = BigInt::from(p);
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

/// Strips factors below the trial-division limit, in native arithmetic once
/// the remaining cofactor fits in 128 bits.
fn trial_divide(rest: &mut BigUint, primes: &mut Vec<BigUint>) {
    let mut d: u64 = 2;
    while d < TRIAL_DIVISION_LIMIT {
        if let Some(mut n) = rest.to_u128() {
            while d < TRIAL_DIVISION_LIMIT && u128::from(d) * u128::from(d) <= n {
                while n % u128::from(d) == 0 {
                    n /= u128::from(d);
                    primes.push(BigUint::from(d));
                }
                d += if d == 2 { 1 } else { 2 };
            }
            *rest = BigUint::from(n);
            return;
        }
        if (&*rest % d).is_zero() {
            *rest /= d;
            primes.push(BigUint::from(d));
        } else {
            d += if d == 2 { 1 } else { 2 };
        }
    }
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime_biguint(&n) {
        out.push(n);
        return;
    }
    if let Some(r) = perfect_square_root(&n) {
        split_large(r.clone(), out);
        split_large(r, out);
        return;
    }
    let d = pollard_brent(&n);
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

fn perfect_square_root(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Pollard rho with Brent's cycle detection; returns a nontrivial divisor of
/// the odd composite `n`. Polynomial constants are tried in a fixed order.
fn pollard_brent(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let batch = 128u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if g == *n {
            // batch overshot: replay one step at a time from the saved point
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
    }
    unreachable!("rho polynomial search is unbounded")
}

const MR_BASES: [u32; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with fixed bases. The first 13 bases make the test exact for
/// every `n < 3.3 * 10^24`; above that the remaining bases are added.
pub fn is_prime(n: &BigInt) -> bool {
    !n.is_negative() && is_prime_biguint(n.magnitude())
}

fn is_prime_biguint(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in &MR_BASES {
            if small == p as u64 {
                return true;
            }
            if small % p as u64 == 0 {
                return false;
            }
        }
    } else {
        for &p in &MR_BASES {
            if (n % p).is_zero() {
                return false;
            }
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let bases = if n.bits() <= 81 { &MR_BASES[..13] } else { &MR_BASES[..] };
    'witness: for &a in bases {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// True when every prime `p ≡ 3 (mod 4)` divides `m` to an even power.
pub fn three_mod_four_valuations_even(m: &BigInt) -> bool {
    if m.is_zero() {
        return true;
    }
    let f = factorize(m).expect("nonzero");
    f.factors
        .iter()
        .all(|(p, e)| e % 2 == 0 || (p % 4u32) != BigInt::from(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn isqrt_small_cases() {
        assert_eq!(isqrt_exact(&big(0)), Some(big(0)));
        assert_eq!(isqrt_exact(&big(9)), Some(big(3)));
        assert_eq!(isqrt_exact(&big(10)), None);
        assert_eq!(isqrt_exact(&big(-4)), None);
    }

    #[test]
    fn factorize_examples() {
        let one = factorize(&big(1)).unwrap();
        assert_eq!(one.sign, Sign::Plus);
        assert!(one.factors.is_empty());

        let f = factorize(&big(360)).unwrap();
        assert_eq!(f.factors, vec![(big(2), 3), (big(3), 2), (big(5), 1)]);
        assert_eq!(f.reconstruct(), big(360));

        let f = factorize(&big(-49)).unwrap();
        assert_eq!(f.sign, Sign::Minus);
        assert_eq!(f.factors, vec![(big(7), 2)]);

        assert_eq!(factorize(&big(0)), Err(ArithError::FactorZero));
    }

    #[test]
    fn factorize_beyond_trial_division() {
        // two primes above 2^20 and a prime square above it
        let p: BigInt = "1048583".parse().unwrap();
        let q: BigInt = "2147483647".parse().unwrap();
        let m = &p * &q * &q;
        let f = factorize(&m).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 2)]);
    }

    #[test]
    fn factorize_128_bit_semiprime_of_moderate_factors() {
        let p: BigInt = "4294967311".parse().unwrap();
        let q: BigInt = "18446744073709551557".parse().unwrap();
        let f = factorize(&(&p * &q)).unwrap();
        assert_eq!(f.factors, vec![(p, 1), (q, 1)]);
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&big(3), &big(18)), Ok(2));
        assert_eq!(valuation(&big(7), &big(10)), Ok(0));
        assert_eq!(valuation(&big(2), &big(96)), Ok(5));
        assert_eq!(valuation(&big(2), &big(0)), Err(ArithError::ValuationOfZero));
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (i, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_prime(&big(i as i64)), expected, "{i}");
        }
        // strong pseudoprime to every prime base up to 23
        let n: BigInt = "3825123056546413051".parse().unwrap();
        assert!(!is_prime(&n));
    }

    #[test]
    fn three_mod_four_parity() {
        assert!(three_mod_four_valuations_even(&big(5)));
        assert!(!three_mod_four_valuations_even(&big(3)));
        assert!(three_mod_four_valuations_even(&big(9 * 5 * 2)));
        assert!(!three_mod_four_valuations_even(&big(7 * 49)));
    }
}

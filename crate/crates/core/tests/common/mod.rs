#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use ortho_core::IntVector;
use rand::Rng;

/// Random primitive vector of Z^3 with integer norm, from the quaternion
/// parametrization `(m²+n²-p²-q², 2(mq+np), 2(nq-mp))` with norm `m²+n²+p²+q²`.
pub fn random_integer_norm_vector<R: Rng>(rng: &mut R, param: i64) -> IntVector {
    loop {
        let (m, n, p, q) = (
            rng.gen_range(-param..=param),
            rng.gen_range(-param..=param),
            rng.gen_range(-param..=param),
            rng.gen_range(-param..=param),
        );
        let coords = [
            m * m + n * n - p * p - q * q,
            2 * (m * q + n * p),
            2 * (n * q - m * p),
        ];
        let g = coords.iter().fold(0i64, |g, c| g.gcd(c));
        if g == 0 {
            continue;
        }
        return IntVector::from_i64s(&coords.map(|c| c / g));
    }
}

/// Random nonzero integer combination of two vectors.
pub fn random_combination<R: Rng>(rng: &mut R, w1: &IntVector, w2: &IntVector, range: i64) -> IntVector {
    loop {
        let x = BigInt::from(rng.gen_range(-range..=range));
        let y = BigInt::from(rng.gen_range(-range..=range));
        let w = w1.combine(&x, w2, &y);
        if !w.is_zero() {
            return w;
        }
    }
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

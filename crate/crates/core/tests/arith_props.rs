use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use ortho_core::arith::{factorize, is_prime, isqrt_exact, valuation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn factorization_reconstructs(m in any::<i64>().prop_filter("nonzero", |m| *m != 0)) {
        let m = BigInt::from(m);
        let f = factorize(&m).unwrap();
        prop_assert_eq!(f.reconstruct(), m);
        for w in f.factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for (p, e) in &f.factors {
            prop_assert!(is_prime(p));
            prop_assert!(*e > 0);
        }
    }

    #[test]
    fn valuation_is_additive(m in 1i64..1_000_000, k in 0u32..12, p_idx in 0usize..6) {
        let p = BigInt::from([2, 3, 5, 7, 11, 13][p_idx]);
        let m = BigInt::from(m);
        prop_assume!(!(&m % &p).is_zero());
        let scaled = &m * num_traits::pow(p.clone(), k as usize);
        prop_assert_eq!(valuation(&p, &scaled).unwrap(), valuation(&p, &m).unwrap() + k);
    }
}

#[test]
fn squares_and_non_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let r = BigInt::from(rng.gen_range(0u64..1 << 40));
        let sq = &r * &r;
        assert_eq!(isqrt_exact(&sq), Some(r.clone()));
        // r^2 < r^2 + k < (r+1)^2 for 1 <= k <= 2r
        if r.is_positive() {
            let k = BigInt::from(rng.gen_range(1u64..=2 * u64::try_from(&r).unwrap()));
            assert_eq!(isqrt_exact(&(sq + k)), None);
        }
    }
}

#[test]
fn large_products_factor_quickly() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let start = std::time::Instant::now();
    for _ in 0..50 {
        // product of three random 30-bit numbers: ~90 bits
        let parts: Vec<BigInt> = (0..3).map(|_| BigInt::from(rng.gen_range(2u64..1 << 30))).collect();
        let m: BigInt = parts.iter().product();
        let f = factorize(&m).unwrap();
        assert_eq!(f.reconstruct(), m);
    }
    assert!(start.elapsed().as_secs() < 20);
}

use num_bigint::BigInt;
use num_traits::Zero;
use ortho_core::arith::is_prime;
use ortho_core::gaussian::{gauss_factorize, gcd, split_prime, GaussInt, Unit};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn is_associate(a: &GaussInt, b: &GaussInt) -> bool {
    Unit::ALL.iter().any(|u| &a.mul_unit(*u) == b)
}

#[test]
fn factorizations_reconstruct() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let z = GaussInt::new(rng.gen_range(-1_000_000i64..=1_000_000), rng.gen_range(-1_000_000i64..=1_000_000));
        if z.is_zero() {
            continue;
        }
        let f = gauss_factorize(&z).unwrap();
        assert_eq!(f.reconstruct(), z);
        for (p, _) in &f.factors {
            // every listed prime has prime norm or is an inert rational prime
            let n = p.norm();
            let inert = p.im.is_zero() && is_prime(&p.re);
            assert!(is_prime(&n) || inert, "{p}");
        }
    }
}

#[test]
fn split_primes_are_not_self_conjugate() {
    let mut count = 0;
    for p in (5u64..20_000).step_by(4) {
        let p = BigInt::from(p);
        if !is_prime(&p) {
            continue;
        }
        let pi = split_prime(&p).unwrap();
        assert_eq!(pi.norm(), p);
        assert!(!is_associate(&pi, &pi.conj()));
        count += 1;
    }
    assert!(count > 1000);
    assert!(split_prime(&BigInt::from(7)).is_err());
}

proptest! {
    #[test]
    fn norm_is_multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000,
                              c in -10_000i64..10_000, d in -10_000i64..10_000) {
        let z = GaussInt::new(a, b);
        let w = GaussInt::new(c, d);
        prop_assert_eq!((&z * &w).norm(), z.norm() * w.norm());
        prop_assert_eq!((&z * &w).conj(), &z.conj() * &w.conj());
    }

    #[test]
    fn gcd_divides_both(a in -5_000i64..5_000, b in -5_000i64..5_000,
                        c in -5_000i64..5_000, d in -5_000i64..5_000) {
        let z = GaussInt::new(a, b);
        let w = GaussInt::new(c, d);
        prop_assume!(!z.is_zero() || !w.is_zero());
        let g = gcd(&z, &w);
        prop_assert!(z.div_exact(&g).is_some());
        prop_assert!(w.div_exact(&g).is_some());
    }

    #[test]
    fn factorization_of_products(a in 1i64..3_000, b in -3_000i64..3_000,
                                 c in 1i64..3_000, d in -3_000i64..3_000) {
        let z = GaussInt::new(a, b);
        let w = GaussInt::new(c, d);
        let fz = gauss_factorize(&z).unwrap();
        let fzw = gauss_factorize(&(&z * &w)).unwrap();
        for (p, e) in &fz.factors {
            prop_assert!(fzw.exponent_of(p) >= *e);
        }
    }
}

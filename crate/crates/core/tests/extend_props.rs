mod common;

use common::{big, random_integer_norm_vector};
use num_bigint::BigInt;
use num_traits::Zero;
use ortho_core::extend::{enumerate_integer_norm, extend3_all, extend3_with, to_rational_orthogonal, ExtendError};
use ortho_core::{extend3, IntVector, Orientation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_basis(v: &IntVector) {
    let b = extend3(v).unwrap();
    let l = v.norm_sq().sqrt();
    assert_eq!(&b.vectors()[0], v);
    assert_eq!(b.length_sq(), &v.norm_sq());
    assert!(b.is_full());
    assert_eq!(b.determinant().unwrap(), &l * &l * &l);
    assert!(to_rational_orthogonal(&b).unwrap().is_orthogonal());
}

#[test]
fn enumerated_vectors_extend() {
    let vs: Vec<IntVector> = enumerate_integer_norm(Some(100)).collect();
    assert!(vs.len() > 200, "{}", vs.len());
    for v in &vs {
        check_basis(v);
    }
}

#[test]
fn enumeration_is_sorted_and_complete() {
    let vs: Vec<IntVector> = enumerate_integer_norm(Some(30)).collect();
    let key = |v: &IntVector| (v.norm_sq(), v.clone());
    assert!(vs.windows(2).all(|w| key(&w[0]) < key(&w[1])));
    // brute force over the same box
    let mut count = 0;
    for a in 0i64..=30 {
        for b in a..=30 {
            for c in b..=30 {
                let v = IntVector::from_i64s(&[a, b, c]);
                if v.is_primitive() && ortho_core::arith::is_square(&v.norm_sq()) {
                    assert!(vs.contains(&v), "{v}");
                    count += 1;
                }
            }
        }
    }
    assert_eq!(count, vs.len());
}

#[test]
fn random_signed_vectors_extend() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1_000 {
        check_basis(&random_integer_norm_vector(&mut rng, 30));
    }
}

#[test]
fn non_primitive_vectors_scale() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let v = random_integer_norm_vector(&mut rng, 10);
        let base = extend3(&v).unwrap();
        for m in 1..=5 {
            let scaled = extend3(&v.scale(&big(m))).unwrap();
            assert_eq!(scaled, base.scale(&big(m)));
        }
    }
}

#[test]
fn non_integer_norms_are_rejected() {
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            for c in -6i64..=6 {
                let v = IntVector::from_i64s(&[a, b, c]);
                if v.is_zero() {
                    continue;
                }
                let square = ortho_core::arith::is_square(&v.norm_sq());
                match extend3(&v) {
                    Ok(_) => assert!(square),
                    Err(ExtendError::NonIntegerNorm(n)) => {
                        assert!(!square);
                        assert_eq!(n, v.norm_sq());
                    }
                    Err(e) => panic!("{v}: {e}"),
                }
            }
        }
    }
}

#[test]
fn orientations_differ_by_sign() {
    let v = IntVector::from_i64s(&[2, 3, 6]);
    let p = extend3_with(&v, Orientation::Proper).unwrap();
    let r = extend3_with(&v, Orientation::Reflected).unwrap();
    let d = p.basis.determinant().unwrap();
    assert_eq!(r.basis.determinant().unwrap(), -d.clone());
    assert_eq!(d, big(343));
    assert_eq!(p.kernel.gram_determinant(), big(49));
}

#[test]
fn all_solutions_are_distinct_valid_bases() {
    for v in enumerate_integer_norm(Some(12)) {
        let all = extend3_all(&v, Orientation::Proper).unwrap();
        assert!(!all.is_empty());
        for e in &all {
            assert!(e.basis.determinant().unwrap() > BigInt::zero());
            assert_eq!(&e.basis.vectors()[0], &v);
        }
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert_ne!(a.basis, b.basis);
            }
        }
    }
}

proptest! {
    #[test]
    fn extension_of_permuted_vector(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_integer_norm_vector(&mut rng, 20);
        let c = v.coords();
        let p = IntVector::new(vec![c[2].clone(), c[0].clone(), c[1].clone()]);
        let b = extend3(&p).unwrap();
        prop_assert_eq!(b.length_sq(), &v.norm_sq());
        prop_assert!(b.vectors().iter().skip(1).all(|w| w.dot(&p).is_zero()));
    }
}

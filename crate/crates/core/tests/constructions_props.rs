use num_bigint::BigInt;
use ortho_core::constructions::{
    compose_direct_sum, hurwitz_basis, hurwitz_blocks, lift, odd_square_tuple, pair_basis, parse_tables,
    DirectSumPart, MultiplicationTable, HURWITZ_TABLES,
};
use ortho_core::{extend3, IntVector, OrthoBasis};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vector<R: Rng>(rng: &mut R, n: usize, range: i64) -> IntVector {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
        let v = IntVector::from_i64s(&c);
        if !v.is_zero() {
            return v;
        }
    }
}

#[test]
fn hurwitz_bases_for_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [2, 4, 8] {
        for _ in 0..1_000 {
            let v = random_vector(&mut rng, n, 1_000);
            let b = hurwitz_basis(&v).unwrap();
            assert!(b.is_full());
            assert_eq!(&b.vectors()[0], &v);
            // every entry is a signed copy of an entry of v
            let mut abs: Vec<BigInt> = v.coords().iter().map(|c| c.magnitude().clone().into()).collect();
            abs.sort();
            for w in b.vectors() {
                let mut a: Vec<BigInt> = w.coords().iter().map(|c| c.magnitude().clone().into()).collect();
                a.sort();
                assert_eq!(a, abs);
            }
        }
    }
}

#[test]
fn tables_round_trip_through_text() {
    let tables = parse_tables(HURWITZ_TABLES).unwrap();
    let text: String = tables.iter().map(|t| t.to_string()).collect();
    assert_eq!(parse_tables(&text).unwrap(), tables);
    for n in [2, 4, 8] {
        assert!(tables.contains(&MultiplicationTable::builtin(n).unwrap()));
    }
}

#[test]
fn odd_square_tuples_up_to_ten_thousand() {
    for n in (1u64..=10_000).step_by(8) {
        let t = odd_square_tuple(n).unwrap();
        assert_eq!(t.len() as u64, n);
        assert!(t.iter().all(|x| x % 2 == 1));
        let sum: u64 = t.iter().map(|x| x * x).sum();
        let r = (sum as f64).sqrt().round() as u64;
        assert_eq!(r * r, sum);
        assert_eq!(r % 2, 1);
        assert!(9 * n >= sum);
    }
    assert!(odd_square_tuple(3).is_err());
}

#[test]
fn odd_square_sums_only_when_one_mod_eight() {
    // entries in {±1, ±3}: with k threes the square sum is n + 8k
    for n in (1u64..=33).step_by(2) {
        let found = (0..=n).any(|k| {
            let s = n + 8 * k;
            let r = (s as f64).sqrt().round() as u64;
            r * r == s
        });
        assert_eq!(found, n % 8 == 1, "n = {n}");
    }
}

#[test]
fn lift_and_compose_examples() {
    let b = extend3(&IntVector::from_i64s(&[1, 2, 2])).unwrap();
    let l = lift(&b).unwrap();
    assert_eq!(l.dim(), 4);
    assert_eq!(l.len(), 4);
    assert_eq!(l.length_sq(), &BigInt::from(9));

    let two = hurwitz_basis(&IntVector::from_i64s(&[3, 4])).unwrap();
    let c = compose_direct_sum(&[DirectSumPart::Basis(two.clone()), DirectSumPart::Basis(two.clone())]).unwrap();
    assert_eq!(c.dim(), 4);
    assert_eq!(c.length_sq(), &BigInt::from(50));
    let z = compose_direct_sum(&[DirectSumPart::Basis(two), DirectSumPart::Zero(3)]).unwrap();
    assert_eq!(z.dim(), 5);
    assert!(compose_direct_sum(&[DirectSumPart::Zero(2)]).is_err());

    let p = pair_basis(5).unwrap();
    assert_eq!(p.len(), 4);
    assert!(pair_basis(4).is_err());
}

proptest! {
    #[test]
    fn hurwitz_blocks_are_orthoregular(d_idx in 0usize..3, m in 1usize..4, seed in any::<u64>()) {
        let d = [2, 4, 8][d_idx];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, d * m, 20);
        let b = hurwitz_blocks(&v, d).unwrap();
        prop_assert_eq!(b.len(), d);
        prop_assert_eq!(&b.vectors()[0], &v);
    }

    #[test]
    fn lift_preserves_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_vector(&mut rng, 4, 30);
        let b = hurwitz_basis(&v).unwrap();
        // a Hurwitz basis has integer length only when |v|^2 is a square
        match lift(&b) {
            Ok(l) => {
                prop_assert_eq!(l.dim(), 5);
                prop_assert_eq!(l.length_sq(), b.length_sq());
                prop_assert!(OrthoBasis::new(l.vectors().to_vec()).is_ok());
            }
            Err(_) => prop_assert!(b.length().is_none()),
        }
    }
}

//! Seeded randomized checks across the library, reproducible from `--seed`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use ortho_core::arith::three_mod_four_valuations_even;
use ortho_core::constructions::hurwitz_basis;
use ortho_core::lattice::kernel_basis;
use ortho_core::quadform::{self, QuadForm};
use ortho_core::{extend3, IntVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{CliError, Status};
use crate::record::{text, Emitter, Record};
use crate::verify::{column_determinant, orthoregular};

type Case = fn(&mut ChaCha8Rng) -> bool;

fn integer_norm_vector(rng: &mut ChaCha8Rng) -> IntVector {
    loop {
        let [m, n, p, q]: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-20..=20));
        let c = [m * m + n * n - p * p - q * q, 2 * (m * q + n * p), 2 * (n * q - m * p)];
        if c.iter().any(|x| *x != 0) {
            return IntVector::from_i64s(&c);
        }
    }
}

fn extend_case(rng: &mut ChaCha8Rng) -> bool {
    let v = integer_norm_vector(rng);
    let Ok(b) = extend3(&v) else { return false };
    let l = v.norm_sq().sqrt();
    orthoregular(b.vectors()).iter().all(|(_, ok)| *ok)
        && b.vectors()[0] == v
        && column_determinant(b.vectors()) == &l * &l * &l
}

fn form_case(rng: &mut ChaCha8Rng) -> bool {
    let l: i64 = rng.gen_range(1..80);
    let b: i64 = rng.gen_range(-80..=80);
    let n = l * l + b * b;
    let divisors: Vec<i64> = (1..=n).filter(|d| n.is_multiple_of(d)).collect();
    let a = divisors[rng.gen_range(0..divisors.len())];
    let Ok(f) = QuadForm::new(a, b, n / a, l) else { return false };
    match (quadform::solve(&f), quadform::oracle_solve_full(&f)) {
        (Ok(Some(r)), Ok(Some(_))) => f.eval(&r.x, &r.y) == f.target(),
        (Ok(None), Ok(None)) => true,
        _ => false,
    }
}

fn hurwitz_case(rng: &mut ChaCha8Rng) -> bool {
    let n = [2, 4, 8][rng.gen_range(0..3)];
    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-1000..=1000)).collect();
    let v = IntVector::from_i64s(&c);
    if v.is_zero() {
        return true;
    }
    hurwitz_basis(&v).is_ok_and(|b| b.len() == n && orthoregular(b.vectors()).iter().all(|(_, ok)| *ok))
}

fn inert_case(rng: &mut ChaCha8Rng) -> bool {
    let v = integer_norm_vector(rng);
    let v = v.div_exact(&v.content()).expect("content divides");
    let Ok(k) = kernel_basis(&v) else { return false };
    let (x, y) = (BigInt::from(rng.gen_range(-50..=50)), BigInt::from(rng.gen_range(-50..=50)));
    let w = k.w1.combine(&x, &k.w2, &y);
    w.is_zero() || (w.dot(&v).is_zero() && three_mod_four_valuations_even(&w.norm_sq()))
}

pub fn run(out: &mut Emitter, seed: u64, cases: u64) -> Result<Status, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut record = Record::new("selftest")
        .input("seed", text(seed.to_string()))
        .input("cases", text(cases.to_string()));
    let suites: [(&'static str, Case); 4] = [
        ("extend3_bases", extend_case),
        ("form_solver_matches_oracle", form_case),
        ("hurwitz_bases", hurwitz_case),
        ("inert_valuations_even", inert_case),
    ];
    for (name, case) in suites {
        let failures = (0..cases).filter(|_| !case(&mut rng)).count();
        if failures > 0 {
            log::error!("{name}: {failures} of {cases} cases failed (seed {seed})");
        }
        record = record.check(name, failures == 0);
    }
    record = record.result("checked", text((cases * suites.len() as u64).to_string()));
    let failed = record.failed_checks();
    out.emit(&record)?;
    if failed.is_empty() {
        Ok(Status::Done)
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

//! Subcommand implementations. Each builds records, re-verifies them, and
//! maps library errors onto the exit-code classes of [`CliError`].

use std::io;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use ortho_core::constructions::{
    compose_direct_sum, hurwitz_basis, lift, odd_square_tuple, pair_basis, ConstructionError, DirectSumPart,
};
use ortho_core::explorer::{all_odd_obstruction, extend_search, ExplorerError, SearchBudget};
use ortho_core::extend::{enumerate_integer_norm, extend3_all, extend3_with, to_rational_orthogonal, ExtendError, Extension};
use ortho_core::quadform::{self, QuadForm, QuadFormError};
use ortho_core::{BasisError, IntVector, Orientation, OrthoBasis};
use thiserror::Error;

use crate::record::{flag, int, text, vector, vectors, Emitter, Item, Record};
use crate::verify::{column_determinant, orthoregular};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Inconclusive(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Inconclusive(_) => 4,
            CliError::Verification(_) | CliError::Internal(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<ExtendError> for CliError {
    fn from(e: ExtendError) -> Self {
        match e {
            ExtendError::NonIntegerNorm(_) | ExtendError::IrrationalLength(_) => CliError::Infeasible(e.to_string()),
            ExtendError::ZeroVector | ExtendError::UnsupportedDimension(_) => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::NonIntegerLength(_) | ConstructionError::NotOneModEight(_) => {
                CliError::Infeasible(e.to_string())
            }
            ConstructionError::Table(_) => CliError::Internal(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<BasisError> for CliError {
    fn from(e: BasisError) -> Self {
        CliError::Usage(format!("input is not an orthoregular system: {e}"))
    }
}

/// Whether the command's answer is definitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Done,
    Inconclusive,
}

fn emit(out: &mut Emitter, record: Record) -> Result<(), CliError> {
    out.emit(&record)?;
    let failed = record.failed_checks();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Proper => "so3",
        Orientation::Reflected => "o3",
    }
}

fn extension_record(command: &'static str, v: &IntVector, o: Orientation, e: &Extension) -> Result<Record, CliError> {
    let vs = e.basis.vectors();
    let l = e.basis.length().expect("extension of an integer-norm vector");
    let matrix = to_rational_orthogonal(&e.basis)?;
    let rows: Vec<Vec<String>> = (0..3)
        .map(|r| (0..3).map(|c| matrix.entry(r, c).to_string()).collect())
        .collect();
    let primitive_l = &l / &e.content;
    let det = column_determinant(vs);
    let l3 = &l * &l * &l;
    let expected_det = match o {
        Orientation::Proper => l3,
        Orientation::Reflected => -l3,
    };
    let (x, y) = &e.coefficients;
    let kernel_point = e.kernel.w1.combine(x, &e.kernel.w2, y).scale(&e.content);
    Ok(Record::new(command)
        .input("vector", vector(v))
        .input("orientation", text(orientation_name(o)))
        .result("basis", vectors(vs))
        .result("length", int(&l))
        .result("content", int(&e.content))
        .result("kernel", vectors(&[e.kernel.w1.clone(), e.kernel.w2.clone()]))
        .result("form", text(format!("{} {} {} {}", e.form.a(), e.form.b(), e.form.c(), e.form.l())))
        .result("coefficients", text(format!("{x} {y}")))
        .result("orthogonal_matrix", Item::Rows(rows))
        .check("first_vector", &vs[0] == v)
        .checks(orthoregular(vs))
        .check("length", vs[0].norm_sq() == &l * &l)
        .check("determinant", det == expected_det)
        .check("kernel_gram_determinant", e.kernel.gram_determinant() == &primitive_l * &primitive_l)
        .check("form_equation", e.form.eval(x, y) == e.form.target())
        .check("second_vector", vs[1] == kernel_point)
        .check("matrix_orthogonal", matrix.is_orthogonal()))
}

pub fn extend(out: &mut Emitter, v: &IntVector, o: Orientation, all: bool) -> Result<Status, CliError> {
    if all {
        for e in extend3_all(v, o)? {
            emit(out, extension_record("extend", v, o, &e)?)?;
        }
    } else {
        let e = extend3_with(v, o)?;
        emit(out, extension_record("extend", v, o, &e)?)?;
    }
    Ok(Status::Done)
}

pub fn enumerate(
    out: &mut Emitter,
    limit: Option<u64>,
    count: Option<u64>,
    with_extension: bool,
) -> Result<Status, CliError> {
    if limit.is_none() && count.is_none() {
        return Err(CliError::Usage("enumerate needs --limit or --count".into()));
    }
    if limit == Some(0) || count == Some(0) {
        return Err(CliError::Usage("--limit and --count must be at least 1".into()));
    }
    let stream = enumerate_integer_norm(limit);
    let stream: Box<dyn Iterator<Item = IntVector>> = match count {
        Some(k) => Box::new(stream.take(k as usize)),
        None => Box::new(stream),
    };
    for (index, v) in stream.enumerate() {
        let record = if with_extension {
            let e = extend3_with(&v, Orientation::Proper)?;
            extension_record("enumerate", &v, Orientation::Proper, &e)?
        } else {
            let mut r = Record::new("enumerate")
                .result("index", text(index.to_string()))
                .result("vector", vector(&v))
                .result("length", int(&v.norm_sq().sqrt()))
                .check("integer_norm", ortho_core::arith::is_square(&v.norm_sq()))
                .check("primitive", v.is_primitive());
            r.bare = Some(v.to_string());
            r
        };
        let record = match limit {
            Some(n) => record.input("limit", text(n.to_string())),
            None => record,
        };
        let record = match count {
            Some(k) => record.input("count", text(k.to_string())),
            None => record,
        };
        emit(out, record)?;
    }
    Ok(Status::Done)
}

pub fn solve_form(out: &mut Emitter, a: BigInt, b: BigInt, c: BigInt, l: BigInt) -> Result<Status, CliError> {
    let form = QuadForm::new(a.clone(), b.clone(), c.clone(), l.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    let rep = quadform::solve(&form).map_err(|e| match e {
        QuadFormError::NonPositiveLeading(_) => CliError::Usage(e.to_string()),
        other => CliError::Internal(other.to_string()),
    })?;
    let Some(rep) = rep else {
        return Err(CliError::Infeasible(format!(
            "{a}x^2 + 2*{b}xy + {c}y^2 does not represent {l}^2: some prime 3 mod 4 divides {a} to an odd power"
        )));
    };
    let value = form.eval(&rep.x, &rep.y);
    let mut record = Record::new("solve-form")
        .input("a", int(&a))
        .input("b", int(&b))
        .input("c", int(&c))
        .input("l", int(&l))
        .result("x", int(&rep.x))
        .result("y", int(&rep.y))
        .result("u", int(&rep.u))
        .result("value", int(&value))
        .check("discriminant", &a * &c - &b * &b == &l * &l)
        .check("form_equation", value == &l * &l);
    if !l.is_zero() {
        record = record.check("gaussian_identity", &rep.u * &rep.u + &rep.y * &rep.y == a);
    }
    emit(out, record)?;
    Ok(Status::Done)
}

fn basis_record(command: &'static str, basis: &OrthoBasis) -> Record {
    let vs = basis.vectors();
    Record::new(command)
        .result("basis", vectors(vs))
        .result("length_sq", int(basis.length_sq()))
        .checks(orthoregular(vs))
}

pub fn hurwitz(out: &mut Emitter, n: usize, v: &IntVector) -> Result<Status, CliError> {
    if v.dim() != n {
        return Err(CliError::Usage(format!("vector {v} has dimension {}, expected {n}", v.dim())));
    }
    let basis = hurwitz_basis(v)?;
    let vs = basis.vectors();
    let record = basis_record("hurwitz", &basis)
        .input("dimension", text(n.to_string()))
        .input("vector", vector(v))
        .check("first_vector", &vs[0] == v)
        .check("full", vs.len() == n)
        .check("signed_entries", same_magnitudes(vs));
    emit(out, record)?;
    Ok(Status::Done)
}

fn same_magnitudes(vs: &[IntVector]) -> bool {
    let key = |v: &IntVector| {
        let mut m: Vec<BigInt> = v.coords().iter().map(|c| c.abs()).collect();
        m.sort();
        m
    };
    vs.windows(2).all(|w| key(&w[0]) == key(&w[1]))
}

pub fn lift_cmd(out: &mut Emitter, system: Vec<IntVector>) -> Result<Status, CliError> {
    let s = OrthoBasis::new(system.clone())?;
    let lifted = lift(&s)?;
    let l = s.length().expect("lift succeeded");
    let vs = lifted.vectors();
    let mut head = IntVector::zeros(s.dim() + 1).into_coords();
    head[0] = l;
    let padded = vs[1..]
        .iter()
        .zip(&system)
        .all(|(w, v)| w[0].is_zero() && w.coords()[1..] == *v.coords());
    let record = basis_record("lift", &lifted)
        .input("system", vectors(&system))
        .check("head_vector", vs[0] == IntVector::new(head))
        .check("padded_input", padded);
    emit(out, record)?;
    Ok(Status::Done)
}

pub fn compose(out: &mut Emitter, v: &IntVector, block: usize) -> Result<Status, CliError> {
    if block == 0 || !v.dim().is_multiple_of(block) {
        return Err(CliError::Usage(format!(
            "block size {block} does not divide dimension {}",
            v.dim()
        )));
    }
    let parts = v
        .coords()
        .chunks(block)
        .map(|chunk| {
            let piece = IntVector::new(chunk.to_vec());
            if piece.is_zero() {
                return Ok(DirectSumPart::Zero(block));
            }
            let b = match block {
                1 => OrthoBasis::single(piece)?,
                2 | 4 | 8 => hurwitz_basis(&piece)?,
                3 => extend3_with(&piece, Orientation::Proper)?.basis,
                _ => {
                    return Err(CliError::Usage(format!(
                        "no block extender for size {block}; use 1, 2, 3, 4 or 8"
                    )))
                }
            };
            Ok(DirectSumPart::Basis(b))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let basis = compose_direct_sum(&parts)?;
    let record = basis_record("compose", &basis)
        .input("vector", vector(v))
        .input("block", text(block.to_string()))
        .check("first_vector", &basis.vectors()[0] == v)
        .check("length_sq", basis.length_sq() == &v.norm_sq());
    emit(out, record)?;
    Ok(Status::Done)
}

pub struct ExploreOptions {
    pub bound: u64,
    pub max_candidates: Option<u64>,
    pub timeout_secs: Option<u64>,
}

pub fn explore(out: &mut Emitter, system: Vec<IntVector>, opts: &ExploreOptions) -> Result<Status, CliError> {
    let s = OrthoBasis::new(system.clone())?;
    let budget = SearchBudget::new(
        opts.bound,
        opts.max_candidates.unwrap_or(u64::MAX),
        Duration::from_secs(opts.timeout_secs.unwrap_or(3600)),
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = extend_search(&s, &budget).map_err(|e| match e {
        ExplorerError::TooLarge(_) => CliError::Inconclusive(format!("search not attempted: {e}")),
        other => CliError::Usage(other.to_string()),
    })?;
    let witness = report.witness.vectors();
    let mut record = Record::new("explore")
        .input("system", vectors(&system))
        .input("bound", text(opts.bound.to_string()))
        .result("achieved", text(report.achieved.to_string()))
        .result("total", text(witness.len().to_string()))
        .result("exhausted", flag(report.exhausted))
        .result("exact", flag(report.is_exact()))
        .result("candidates", text(report.candidates.to_string()))
        .result("upper_bound", text(report.upper_bound.to_string()))
        .result("witness", vectors(witness))
        .checks(orthoregular(witness))
        .check("extends_input", witness.len() >= system.len() && witness[..system.len()] == system[..]);
    if system.len() == 1 {
        if let Ok(cert) = all_odd_obstruction(&system[0]) {
            let holds = cert.verify();
            record = record.result("parity_obstruction", flag(holds));
            if holds {
                record = record.check("parity_consistent", report.achieved == 0);
            }
        }
    }
    let exact = report.is_exact();
    emit(out, record)?;
    Ok(if exact { Status::Done } else { Status::Inconclusive })
}

pub fn odd_square(out: &mut Emitter, n: u64) -> Result<Status, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be positive".into()));
    }
    let tuple = odd_square_tuple(n)?;
    let coords: Vec<BigInt> = tuple.iter().map(|&x| BigInt::from(x)).collect();
    let v = IntVector::new(coords);
    let sum = v.norm_sq();
    let root = sum.sqrt();
    let threes = tuple.iter().filter(|&&x| x == 3).count();
    let cert = all_odd_obstruction(&v).map_err(|e| CliError::Internal(e.to_string()))?;
    let record = Record::new("odd-square")
        .input("n", text(n.to_string()))
        .result("tuple", vectors(std::slice::from_ref(&v)))
        .result("threes", text(threes.to_string()))
        .result("square_sum", int(&sum))
        .result("root", int(&root))
        .check("length", tuple.len() as u64 == n)
        .check("all_odd", tuple.iter().all(|x| x % 2 == 1))
        .check("perfect_square", &root * &root == sum)
        .check("odd_root", (&root % 2u32).is_one())
        .check("nine_n_bound", BigInt::from(9 * n) >= sum)
        .check("parity_certificate", cert.verify());
    emit(out, record)?;
    Ok(Status::Done)
}

pub fn pair_basis_cmd(out: &mut Emitter, n: usize) -> Result<Status, CliError> {
    let basis = pair_basis(n)?;
    let record = basis_record("pair-basis", &basis)
        .input("n", text(n.to_string()))
        .check("count", basis.len() + 1 == n)
        .check("length_sq_two", basis.length_sq().to_u32() == Some(2));
    emit(out, record)?;
    Ok(Status::Done)
}

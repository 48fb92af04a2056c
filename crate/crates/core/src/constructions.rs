//! Explicit orthoregular constructions: complex/quaternion/octonion
//! multiplication tables in dimensions 2, 4 and 8, lifting to one more
//! dimension, blockwise direct sums, consecutive-pair bases in odd dimension,
//! and odd tuples whose square sum is a square.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::basis::{BasisError, OrthoBasis};
use crate::vector::IntVector;

/// Tables shipped with the crate.
pub const HURWITZ_TABLES: &str = include_str!("../data/hurwitz.txt");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("multiplication tables exist for dimensions 2, 4 and 8, not {0}")]
    UnsupportedDimension(usize),
    #[error("cannot extend the zero vector")]
    ZeroVector,
    #[error("length-square {0} is not a perfect square")]
    NonIntegerLength(BigInt),
    #[error("part {index} has {found} vectors, expected {expected}")]
    VectorCountMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("direct sum needs at least one nonzero block")]
    AllZeroBlocks,
    #[error("{0} is not congruent to 1 mod 8")]
    NotOneModEight(u64),
    #[error("pair basis needs odd n >= 3, got {0}")]
    PairBasisDimension(usize),
    #[error("block size {block} does not divide dimension {dim}")]
    BlockSize { block: usize, dim: usize },
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error(transparent)]
    Table(#[from] TableParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableParseError {
    #[error("line {line}: expected `<dim>: <entries>`")]
    MissingColon { line: usize },
    #[error("line {line}: bad dimension {text:?}")]
    BadDimension { line: usize, text: String },
    #[error("line {line}: bad entry {text:?}")]
    BadEntry { line: usize, text: String },
    #[error("line {line}: {found} entries for dimension {dim}")]
    EntryCount { line: usize, dim: usize, found: usize },
    #[error("line {line}: entries are not a permutation of a0..a{}", dim - 1)]
    NotPermutation { line: usize, dim: usize },
    #[error("dimension {dim} has {found} generators, expected {}", dim - 1)]
    GeneratorCount { dim: usize, found: usize },
    #[error("dimension {dim} is listed twice")]
    Duplicate { dim: usize },
}

/// One coordinate of a generator image: `sign * a_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedIndex {
    pub negative: bool,
    pub index: usize,
}

/// The `n - 1` imaginary units of a composition algebra acting on `Z^n` as
/// signed coordinate permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    dimension: usize,
    generators: Vec<Vec<SignedIndex>>,
}

impl MultiplicationTable {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Vec<SignedIndex>] {
        &self.generators
    }

    pub fn apply(&self, generator: usize, v: &IntVector) -> IntVector {
        assert_eq!(v.dim(), self.dimension);
        IntVector::new(
            self.generators[generator]
                .iter()
                .map(|e| {
                    if e.negative {
                        -&v[e.index]
                    } else {
                        v[e.index].clone()
                    }
                })
                .collect(),
        )
    }

    /// Built-in table for `n` in {2, 4, 8}.
    pub fn builtin(n: usize) -> Result<MultiplicationTable, ConstructionError> {
        let tables = parse_tables(HURWITZ_TABLES)?;
        tables
            .into_iter()
            .find(|t| t.dimension == n)
            .ok_or(ConstructionError::UnsupportedDimension(n))
    }
}

impl fmt::Display for MultiplicationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            write!(f, "{}:", self.dimension)?;
            for e in g {
                write!(f, " {}a{}", if e.negative { "-" } else { "" }, e.index)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parses table text: `#` comments, blank lines, and `n: ±a_i ...` rows.
/// Each row must be a signed permutation and each dimension needs `n - 1` rows.
pub fn parse_tables(text: &str) -> Result<Vec<MultiplicationTable>, TableParseError> {
    let mut tables: Vec<MultiplicationTable> = Vec::new();
    let mut closed: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (dim_text, rest) = line
            .split_once(':')
            .ok_or(TableParseError::MissingColon { line: line_no })?;
        let dim: usize = dim_text
            .trim()
            .parse()
            .ok()
            .filter(|&d| (2..=64).contains(&d))
            .ok_or_else(|| TableParseError::BadDimension {
                line: line_no,
                text: dim_text.trim().to_string(),
            })?;
        let row = rest
            .split_whitespace()
            .map(|tok| parse_entry(tok).ok_or_else(|| TableParseError::BadEntry {
                line: line_no,
                text: tok.to_string(),
            }))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != dim {
            return Err(TableParseError::EntryCount {
                line: line_no,
                dim,
                found: row.len(),
            });
        }
        let mut seen = vec![false; dim];
        for e in &row {
            if e.index >= dim || std::mem::replace(&mut seen[e.index], true) {
                return Err(TableParseError::NotPermutation { line: line_no, dim });
            }
        }
        match tables.last_mut() {
            Some(t) if t.dimension == dim => t.generators.push(row),
            _ => {
                if let Some(prev) = tables.last() {
                    closed.push(prev.dimension);
                }
                if closed.contains(&dim) {
                    return Err(TableParseError::Duplicate { dim });
                }
                tables.push(MultiplicationTable {
                    dimension: dim,
                    generators: vec![row],
                });
            }
        }
    }
    for t in &tables {
        if t.generators.len() != t.dimension - 1 {
            return Err(TableParseError::GeneratorCount {
                dim: t.dimension,
                found: t.generators.len(),
            });
        }
    }
    Ok(tables)
}

fn parse_entry(tok: &str) -> Option<SignedIndex> {
    let (negative, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let digits = body.strip_prefix('a')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.len() > 3 {
        return None;
    }
    Some(SignedIndex {
        negative,
        index: digits.parse().ok()?,
    })
}

/// `{v, g_1 v, ..., g_{n-1} v}` for the multiplication table of dimension `n`.
pub fn hurwitz_basis(v: &IntVector) -> Result<OrthoBasis, ConstructionError> {
    let n = v.dim();
    if !matches!(n, 2 | 4 | 8) {
        return Err(ConstructionError::UnsupportedDimension(n));
    }
    if v.is_zero() {
        return Err(ConstructionError::ZeroVector);
    }
    let table = MultiplicationTable::builtin(n)?;
    let mut vectors = vec![v.clone()];
    vectors.extend((0..n - 1).map(|g| table.apply(g, v)));
    Ok(OrthoBasis::new(vectors)?)
}

/// Prepends `(l, 0, ..., 0)` and pads each vector with a leading zero.
pub fn lift(s: &OrthoBasis) -> Result<OrthoBasis, ConstructionError> {
    let l = s
        .length()
        .ok_or_else(|| ConstructionError::NonIntegerLength(s.length_sq().clone()))?;
    let n = s.dim();
    let mut head = IntVector::zeros(n + 1).into_coords();
    head[0] = l;
    let mut vectors = vec![IntVector::new(head)];
    let zero = IntVector::zeros(1);
    vectors.extend(s.vectors().iter().map(|v| zero.concat(v)));
    Ok(OrthoBasis::new(vectors)?)
}

/// One block of a direct sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DirectSumPart {
    Basis(OrthoBasis),
    /// A zero block of the given dimension, contributing zeros to every vector.
    Zero(usize),
}

impl DirectSumPart {
    fn dim(&self) -> usize {
        match self {
            DirectSumPart::Basis(b) => b.dim(),
            DirectSumPart::Zero(d) => *d,
        }
    }
}

/// Concatenates blocks coordinatewise: vector `j` of the result is the
/// concatenation of vector `j` of every part. The common length-square is
/// the sum of the parts' length-squares, so the parts may have different
/// lengths.
pub fn compose_direct_sum(parts: &[DirectSumPart]) -> Result<OrthoBasis, ConstructionError> {
    let count = parts
        .iter()
        .find_map(|p| match p {
            DirectSumPart::Basis(b) => Some(b.len()),
            DirectSumPart::Zero(_) => None,
        })
        .ok_or(ConstructionError::AllZeroBlocks)?;
    for (index, p) in parts.iter().enumerate() {
        if let DirectSumPart::Basis(b) = p {
            if b.len() != count {
                return Err(ConstructionError::VectorCountMismatch {
                    index,
                    expected: count,
                    found: b.len(),
                });
            }
        }
    }
    let vectors = (0..count)
        .map(|j| {
            let coords = parts.iter().flat_map(|p| match p {
                DirectSumPart::Basis(b) => b.vectors()[j].coords().to_vec(),
                DirectSumPart::Zero(d) => vec![BigInt::zero(); *d],
            });
            IntVector::new(coords.collect())
        })
        .collect();
    let out = OrthoBasis::new(vectors)?;
    debug_assert_eq!(out.dim(), parts.iter().map(DirectSumPart::dim).sum::<usize>());
    Ok(out)
}

/// Splits `v` into consecutive blocks of size `block`, extends every nonzero
/// block with `extend_block`, and composes the results.
pub fn blockwise<F>(v: &IntVector, block: usize, extend_block: F) -> Result<OrthoBasis, ConstructionError>
where
    F: Fn(&IntVector) -> Result<OrthoBasis, ConstructionError>,
{
    if block == 0 || !v.dim().is_multiple_of(block) {
        return Err(ConstructionError::BlockSize { block, dim: v.dim() });
    }
    let parts = v
        .coords()
        .chunks(block)
        .map(|chunk| {
            let piece = IntVector::new(chunk.to_vec());
            if piece.is_zero() {
                Ok(DirectSumPart::Zero(block))
            } else {
                extend_block(&piece).map(DirectSumPart::Basis)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    compose_direct_sum(&parts)
}

/// `d` orthoregular vectors in `Z^(d m)` starting with `v`, for `d` in {2, 4, 8}.
pub fn hurwitz_blocks(v: &IntVector, d: usize) -> Result<OrthoBasis, ConstructionError> {
    if !matches!(d, 2 | 4 | 8) {
        return Err(ConstructionError::UnsupportedDimension(d));
    }
    blockwise(v, d, hurwitz_basis)
}

/// `n` odd integers, `k` threes followed by ones, whose squares sum to
/// `(2m+1)^2` for the least `m >= 0` with `n <= (2m+1)^2`, where
/// `k = ((2m+1)^2 - n) / 8`.
pub fn odd_square_tuple(n: u64) -> Result<Vec<u64>, ConstructionError> {
    if n % 8 != 1 {
        return Err(ConstructionError::NotOneModEight(n));
    }
    let mut m: u64 = 0;
    while (2 * m + 1) * (2 * m + 1) < n {
        m += 1;
    }
    let square = (2 * m + 1) * (2 * m + 1);
    let threes = (square - n) / 8;
    assert!(threes <= n, "need 9n >= (2m+1)^2");
    let tuple: Vec<u64> = (0..n).map(|i| if i < threes { 3 } else { 1 }).collect();
    debug_assert_eq!(tuple.iter().map(|x| x * x).sum::<u64>(), square);
    Ok(tuple)
}

/// The `n - 1` vectors `e_{2k-1} ± e_{2k}` of length-square 2 in odd dimension `n`.
pub fn pair_basis(n: usize) -> Result<OrthoBasis, ConstructionError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(ConstructionError::PairBasisDimension(n));
    }
    let mut vectors = Vec::with_capacity(n - 1);
    for k in 0..(n - 1) / 2 {
        let (i, j) = (2 * k, 2 * k + 1);
        let plus = IntVector::unit(n, i).add(&IntVector::unit(n, j));
        let minus = IntVector::unit(n, i).add(&IntVector::unit(n, j).neg());
        vectors.push(plus);
        vectors.push(minus);
    }
    Ok(OrthoBasis::new(vectors)?)
}

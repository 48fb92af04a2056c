//! Bounded exhaustive search for orthoregular extensions, and the parity and
//! integrality certificates that rule extensions out.
//!
//! The search enumerates every integer vector of the system's length that is
//! orthogonal to the system, with coordinates in `[-bound, bound]` and the
//! first nonzero coordinate positive, in lexicographic order. It then looks
//! for the largest pairwise-orthogonal subset by depth-first branch and bound.
//! Any vector of length-square `L` has `|coord| <= sqrt(L)`, so a bound of at
//! least `isqrt(L)` covers the whole space.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith;
use crate::basis::{BasisError, OrthoBasis};
use crate::vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplorerError {
    #[error("budget fields must be positive")]
    InvalidBudget,
    #[error("length-square {0} is too large for exhaustive search")]
    TooLarge(BigInt),
    #[error("parity certificate needs odd dimension, got {0}")]
    EvenDimension(usize),
    #[error("parity certificate needs every coordinate odd; coordinate {index} is {value}")]
    EvenCoordinate { index: usize, value: BigInt },
    #[error(transparent)]
    Basis(#[from] BasisError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    coord_bound: u64,
    max_candidates: u64,
    timeout: Duration,
}

impl SearchBudget {
    pub fn new(coord_bound: u64, max_candidates: u64, timeout: Duration) -> Result<Self, ExplorerError> {
        if coord_bound == 0 || max_candidates == 0 || timeout.is_zero() {
            return Err(ExplorerError::InvalidBudget);
        }
        Ok(SearchBudget {
            coord_bound,
            max_candidates,
            timeout,
        })
    }

    /// No candidate cap and an hour of wall clock.
    pub fn with_bound(coord_bound: u64) -> Result<Self, ExplorerError> {
        SearchBudget::new(coord_bound, u64::MAX, Duration::from_secs(3600))
    }

    pub fn coord_bound(&self) -> u64 {
        self.coord_bound
    }

    pub fn max_candidates(&self) -> u64 {
        self.max_candidates
    }

    pub fn timeout(&self) -> Duration {
        self.timeout
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub input: OrthoBasis,
    /// Vectors added on top of the input.
    pub achieved: usize,
    pub witness: OrthoBasis,
    /// Every candidate within the coordinate bound was generated and the
    /// search ran to completion; `achieved` is then exactly `E(S) - |S|`.
    /// Otherwise `achieved` is only a lower bound.
    pub exhausted: bool,
    /// Candidate vectors considered at the first level.
    pub candidates: usize,
    /// Largest number of vectors that could be added at all (dimension and
    /// odd-dimension integrality limits).
    pub upper_bound: usize,
}

impl ExtensionReport {
    /// The value is known exactly: either the search was exhaustive or the
    /// witness reaches the a priori upper bound.
    pub fn is_exact(&self) -> bool {
        self.exhausted || self.achieved == self.upper_bound
    }
}

/// Whether an odd-dimensional full orthoregular basis of this length can
/// exist: the determinant `l^n` of such a basis is an integer, which forces
/// `l` to be an integer. Even dimensions carry no such constraint.
pub fn length_admits_full_basis(n: usize, length_sq: &BigInt) -> bool {
    n.is_multiple_of(2) || arith::is_square(length_sq)
}

struct Search {
    deadline: Instant,
    nodes: u64,
    timed_out: bool,
}

impl Search {
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        self.timed_out
    }
}

/// Largest orthoregular extension of `s` within the budget.
pub fn extend_search(s: &OrthoBasis, budget: &SearchBudget) -> Result<ExtensionReport, ExplorerError> {
    let n = s.dim();
    let length_sq = s
        .length_sq()
        .to_i64()
        .filter(|&l| l <= i64::MAX / 4)
        .ok_or_else(|| ExplorerError::TooLarge(s.length_sq().clone()))?;
    let base: Vec<Vec<i64>> = s
        .vectors()
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .map(|c| c.to_i64().ok_or_else(|| ExplorerError::TooLarge(c.clone())))
                .collect()
        })
        .collect::<Result<_, _>>()?;

    let max_coord = arith::isqrt_floor(s.length_sq()).to_u64().unwrap_or(u64::MAX);
    let bound = budget.coord_bound.min(max_coord) as i64;
    let covers_space = budget.coord_bound >= max_coord;

    let total_cap = if length_admits_full_basis(n, s.length_sq()) {
        n
    } else {
        n - 1
    };
    let upper_bound = total_cap.saturating_sub(s.len());

    let mut search = Search {
        deadline: Instant::now() + budget.timeout,
        nodes: 0,
        timed_out: false,
    };

    let mut candidates: Vec<Vec<i64>> = Vec::new();
    let mut truncated = false;
    let mut current = vec![0i64; n];
    generate(
        &mut current,
        0,
        length_sq,
        bound,
        false,
        &base,
        budget.max_candidates,
        &mut candidates,
        &mut truncated,
        &mut search,
    );
    log::debug!(
        "extend_search: {} candidates of length-square {length_sq} (bound {bound}, truncated {truncated})",
        candidates.len()
    );

    let mut best: Vec<usize> = Vec::new();
    if upper_bound > 0 {
        let all: Vec<usize> = (0..candidates.len()).collect();
        let mut chosen = Vec::new();
        clique(&candidates, &all, &mut chosen, &mut best, upper_bound, &mut search);
    }

    let mut vectors: Vec<IntVector> = s.vectors().to_vec();
    vectors.extend(best.iter().map(|&i| IntVector::from_i64s(&candidates[i])));
    let witness = OrthoBasis::new(vectors)?;
    Ok(ExtensionReport {
        input: s.clone(),
        achieved: best.len(),
        witness,
        exhausted: covers_space && !truncated && !search.timed_out,
        candidates: candidates.len(),
        upper_bound,
    })
}

#[allow(clippy::too_many_arguments)]
fn generate(
    current: &mut Vec<i64>,
    pos: usize,
    remaining: i64,
    bound: i64,
    seen_nonzero: bool,
    base: &[Vec<i64>],
    cap: u64,
    out: &mut Vec<Vec<i64>>,
    truncated: &mut bool,
    search: &mut Search,
) {
    if *truncated || search.tick() {
        return;
    }
    let n = current.len();
    if pos == n {
        if remaining == 0
            && seen_nonzero
            && base
                .iter()
                .all(|b| b.iter().zip(current.iter()).map(|(x, y)| x * y).sum::<i64>() == 0)
        {
            if out.len() as u64 >= cap {
                *truncated = true;
                return;
            }
            out.push(current.clone());
        }
        return;
    }
    let slots_after = (n - pos - 1) as i64;
    let low = if seen_nonzero { -bound } else { 0 };
    for x in low..=bound {
        let sq = x * x;
        if sq > remaining {
            if x > 0 {
                break;
            }
            continue;
        }
        let rest = remaining - sq;
        if rest > slots_after * bound * bound {
            continue;
        }
        current[pos] = x;
        generate(
            current,
            pos + 1,
            rest,
            bound,
            seen_nonzero || x != 0,
            base,
            cap,
            out,
            truncated,
            search,
        );
        if *truncated || search.timed_out {
            break;
        }
    }
    current[pos] = 0;
}

fn orthogonal(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() == 0
}

/// Maximum set of pairwise orthogonal candidates, first found in index order.
fn clique(
    candidates: &[Vec<i64>],
    pool: &[usize],
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    cap: usize,
    search: &mut Search,
) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    if best.len() >= cap || search.tick() {
        return;
    }
    for (k, &i) in pool.iter().enumerate() {
        if chosen.len() + (pool.len() - k) <= best.len() {
            return;
        }
        let next: Vec<usize> = pool[k + 1..]
            .iter()
            .copied()
            .filter(|&j| orthogonal(&candidates[i], &candidates[j]))
            .collect();
        if chosen.len() + 1 + next.len() <= best.len() {
            continue;
        }
        chosen.push(i);
        clique(candidates, &next, chosen, best, cap, search);
        chosen.pop();
        if best.len() >= cap || search.timed_out {
            return;
        }
    }
}

/// Parity argument that an all-odd vector in odd dimension has no orthogonal
/// integer vector of the same length.
///
/// For such `v'`, `|v'|^2 = sum a_i^2 ≡ sum a_i ≡ (v, v') = 0 (mod 2)`
/// because every coordinate of `v` is odd, while `|v|^2 ≡ n ≡ 1 (mod 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCertificate {
    pub vector: IntVector,
    pub dimension: usize,
    /// `|v|^2 mod 2`, equal to `n mod 2 = 1`.
    pub length_sq_parity: u8,
    /// Parity forced on `|v'|^2` for any `v'` orthogonal to `v`.
    pub orthogonal_length_sq_parity: u8,
}

impl ParityCertificate {
    /// Recomputes both parities from the vector.
    pub fn verify(&self) -> bool {
        let n = self.vector.dim();
        let all_odd = self.vector.coords().iter().all(crate::basis::is_odd);
        let own = if crate::basis::is_odd(&self.vector.norm_sq()) { 1 } else { 0 };
        all_odd
            && n % 2 == 1
            && n == self.dimension
            && own == self.length_sq_parity
            && own == (n % 2) as u8
            && self.orthogonal_length_sq_parity == 0
            && self.length_sq_parity != self.orthogonal_length_sq_parity
    }
}

pub fn all_odd_obstruction(v: &IntVector) -> Result<ParityCertificate, ExplorerError> {
    let n = v.dim();
    if n.is_multiple_of(2) {
        return Err(ExplorerError::EvenDimension(n));
    }
    if let Some((index, value)) = v
        .coords()
        .iter()
        .enumerate()
        .find(|(_, c)| !crate::basis::is_odd(c))
    {
        return Err(ExplorerError::EvenCoordinate {
            index,
            value: value.clone(),
        });
    }
    let cert = ParityCertificate {
        vector: v.clone(),
        dimension: n,
        length_sq_parity: if crate::basis::is_odd(&v.norm_sq()) { 1 } else { 0 },
        orthogonal_length_sq_parity: 0,
    };
    debug_assert!(cert.verify());
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(c: &[i64]) -> IntVector {
        IntVector::from_i64s(c)
    }

    fn search(vs: &[&[i64]], bound: u64) -> ExtensionReport {
        let s = OrthoBasis::new(vs.iter().map(|c| iv(c)).collect()).unwrap();
        extend_search(&s, &SearchBudget::with_bound(bound).unwrap()).unwrap()
    }

    #[test]
    fn pair_vector_in_three_dimensions() {
        let r = search(&[&[1, 1, 0]], 2);
        assert_eq!(r.achieved, 1);
        assert!(r.exhausted);
        assert_eq!(r.upper_bound, 1);
    }

    #[test]
    fn all_ones_in_six_dimensions() {
        let r = search(&[&[1, 1, 1, 1, 1, 1]], 3);
        assert_eq!(r.achieved, 3);
        assert!(r.exhausted);
        assert_eq!(r.witness.len(), 4);
    }

    #[test]
    fn axis_vector() {
        let r = search(&[&[0, 0, 1]], 1);
        assert_eq!(r.achieved, 2);
        assert!(r.exhausted);
        assert_eq!(r.witness.vectors()[1], iv(&[0, 1, 0]));
    }

    #[test]
    fn small_bound_is_not_exhaustive() {
        let r = search(&[&[1, 2, 2]], 1);
        assert!(!r.exhausted);
        assert_eq!(r.achieved, 0);
        let r = search(&[&[1, 2, 2]], 2);
        assert!(!r.exhausted);
        assert_eq!(r.achieved, 2);
        assert!(r.is_exact());
        let r = search(&[&[1, 2, 2]], 3);
        assert!(r.exhausted);
        assert_eq!(r.achieved, 2);
    }

    #[test]
    fn candidate_cap_marks_report_inexhaustive() {
        let s = OrthoBasis::single(iv(&[1, 1, 1, 1, 1, 1])).unwrap();
        let budget = SearchBudget::new(3, 5, Duration::from_secs(10)).unwrap();
        let r = extend_search(&s, &budget).unwrap();
        assert!(!r.exhausted);
        assert_eq!(r.candidates, 5);
    }

    #[test]
    fn budget_validation() {
        assert_eq!(
            SearchBudget::new(0, 1, Duration::from_secs(1)),
            Err(ExplorerError::InvalidBudget)
        );
        assert_eq!(
            SearchBudget::new(1, 1, Duration::ZERO),
            Err(ExplorerError::InvalidBudget)
        );
    }

    #[test]
    fn parity_certificates() {
        let c = all_odd_obstruction(&iv(&[1, 1, 1])).unwrap();
        assert!(c.verify());
        assert_eq!(c.length_sq_parity, 1);
        let c = all_odd_obstruction(&iv(&[3, 1, 1, 1, 1])).unwrap();
        assert!(c.verify());
        assert!(matches!(
            all_odd_obstruction(&iv(&[1, 2, 2])),
            Err(ExplorerError::EvenCoordinate { index: 1, .. })
        ));
        assert_eq!(
            all_odd_obstruction(&iv(&[1, 1])),
            Err(ExplorerError::EvenDimension(2))
        );
        let r = search(&[&[1, 1, 1]], 2);
        assert_eq!(r.achieved, 0);
        assert!(r.exhausted);
    }

    #[test]
    fn integrality_predicate() {
        assert!(!length_admits_full_basis(3, &BigInt::from(2)));
        assert!(length_admits_full_basis(3, &BigInt::from(9)));
        assert!(length_admits_full_basis(5, &BigInt::from(49)));
        assert!(length_admits_full_basis(4, &BigInt::from(2)));
    }
}

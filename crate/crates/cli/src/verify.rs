//! Independent re-checks of emitted results, computed from the raw vectors
//! rather than trusted from library invariants.

use num_bigint::BigInt;
use num_traits::Zero;
use ortho_core::lattice::determinant;
use ortho_core::IntVector;

/// Nonzero, pairwise orthogonal and of one common length.
pub fn orthoregular(vs: &[IntVector]) -> Vec<(&'static str, bool)> {
    let nonzero = vs.iter().all(|v| !v.is_zero());
    let orthogonal = vs
        .iter()
        .enumerate()
        .all(|(i, a)| vs[i + 1..].iter().all(|b| a.dot(b).is_zero()));
    let common = vs.windows(2).all(|w| w[0].norm_sq() == w[1].norm_sq());
    vec![
        ("nonzero", nonzero),
        ("pairwise_orthogonal", orthogonal),
        ("common_length", common),
    ]
}

/// Determinant of the matrix with the given vectors as columns.
pub fn column_determinant(vs: &[IntVector]) -> BigInt {
    let n = vs.len();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|r| vs.iter().map(|v| v[r].clone()).collect())
        .collect();
    determinant(&rows)
}

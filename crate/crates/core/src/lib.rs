//! Exact construction of integral orthoregular systems: pairwise orthogonal
//! integer vectors of one common length.
//!
//! The centerpiece is [`extend::extend3`], which completes any vector of
//! `Z^3` whose Euclidean norm is an integer to a full orthoregular basis,
//! equivalently a rational point of `O(3)`. Around it sit Gaussian-integer
//! factorization, a constructive solver for `a x^2 + 2b xy + c y^2 = l^2`,
//! kernel lattices, cofactor completion, the multiplication-table bases in
//! dimensions 2, 4 and 8, and a bounded search for extension numbers.

pub mod arith;
pub mod basis;
pub mod constructions;
pub mod explorer;
pub mod extend;
pub mod gaussian;
pub mod lattice;
pub mod quadform;
pub mod text;
pub mod vector;

pub use basis::{BasisError, OrthoBasis};
pub use extend::{extend3, Orientation};
pub use vector::IntVector;

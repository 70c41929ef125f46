//! Exact invariants of generalized projective product spaces.
//!
//! Three families of spaces are covered: products of spheres with projective
//! spaces twisted by an involution, and the analogous quotients with a toric
//! manifold or a small cover as fibre. All computations are exact.

pub mod cellular;
pub mod charfn;
pub mod fields;
pub mod graded;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod polytope;
pub mod projprod;
pub mod scalar;
pub mod space;
pub mod span;

pub use scalar::{EuclideanScalar, Gf2, Scalar};

/// Machine integers for small coefficient data.
pub type Int = i64;
/// Arbitrary precision integers.
pub type BigInt = num_bigint::BigInt;
/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Integer matrices.
pub type IntMatrix = linalg::Matrix<BigInt>;
/// Matrices over GF(2).
pub type Gf2Matrix = linalg::Matrix<Gf2>;

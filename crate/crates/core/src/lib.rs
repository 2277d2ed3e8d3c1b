//! Exact arithmetic for vanishing power sums of roots of unity.
//!
//! Given positive integers `n`, `ℓ` and `m`, this crate decides whether
//! there are `m`-th roots of unity `x_1, …, x_n` with
//! `x_1^ℓ + ⋯ + x_n^ℓ = 0`, builds explicit witnesses (optionally with all
//! `x_i` distinct), verifies them exactly in `ℤ[ζ_m]` and computes heights.
//!
//! The decision procedure lives in [`solver`]; witnesses are built in
//! [`witness`] and checked by [`cyclotomic`]. [`oracle`] is an exhaustive
//! search that shares nothing with the constructive path except the exact
//! zero test, and is used to cross-validate everything else.
//!
//! Polynomial and ring arithmetic is generic over the coefficient type (see
//! [`Coefficient`]); the aliases below fix it to arbitrary precision.

pub mod arith;
pub mod cyclotomic;
pub mod height;
pub mod oracle;
pub mod scalar;
pub mod semigroup;
pub mod solver;
pub mod witness;

pub use cyclotomic::{
    cyclotomic_polynomial, verify_certificate, CycloError, CyclotomicElement, ExponentMultiset,
    IntPolynomial, Rejection,
};
pub use height::{compute_height, height_one, sivek_criterion, HeightResult, HeightValue};
pub use oracle::{exists_witness, SearchOutcome, SearchSpec};
pub use scalar::Coefficient;
pub use semigroup::{Gaps, SemigroupSpec};
pub use solver::{decide, describe, reduce, WQuery, WReduction, WSet};
pub use witness::{construct, WitnessCertificate};

/// Arbitrary-precision integer used for all authoritative arithmetic.
pub type Int = num_bigint::BigInt;

/// Integer polynomial with arbitrary-precision coefficients.
pub type Poly = IntPolynomial<Int>;

/// Element of `ℤ[x]/(x^m − 1)` with arbitrary-precision coefficients.
pub type Cyclo = CyclotomicElement<Int>;

/// Fixed-width variants. Every operation on these reports overflow instead
/// of wrapping.
pub type Poly64 = IntPolynomial<i64>;
pub type Cyclo64 = CyclotomicElement<i64>;
pub type Poly128 = IntPolynomial<i128>;
pub type Cyclo128 = CyclotomicElement<i128>;

/// Default node cap for exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

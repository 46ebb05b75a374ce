//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate polynomials over them, and dynamic algebraic extension towers.

mod poly;
mod tower;

pub use poly::{
    poly_gcd, poly_extended_gcd, rational_roots, resultant, squarefree_decomposition, UniPoly,
};
pub use tower::{
    alg_squarefree_decomposition, tower_invert, AlgPoly, InvertOutcome, ResidueRing, SplitFactor,
    TowerContext, TowerElement, TowerValue,
};

use num::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational scalar. `num`'s representation already
/// maintains the canonical form (reduced, positive denominator, 0 = 0/1).
pub type Rat = BigRational;
pub type Int = num::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactNumError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("division by zero (zero on every branch of the context)")]
    DivisionByZero,
    #[error("extension towers are capped at depth 2")]
    DepthExceeded,
}

/// Shorthand for an integer rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the fraction n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

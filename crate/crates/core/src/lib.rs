//! Exact classification of rational maps of the projective line by the genus
//! of the Galois closure of the field extension they induce.
//!
//! The pipeline is exact end to end: arbitrary-precision rational scalars,
//! dense univariate polynomials over them, and dynamic algebraic extensions
//! (squarefree moduli split on zero divisors) instead of irreducible
//! factorization. On top of that substrate sit rational maps with their
//! fibers and branch data, sphere orbifolds with exact Euler characteristics,
//! and the genus-zero catalog / genus-one (Lattès) structure analysis.

pub mod classify;
pub mod cli;
pub mod exactnum;
pub mod orbifold;
pub mod ratmap;

//! Rational maps of the projective line: canonical coprime forms, Möbius
//! transformations, places (rational points, infinity, Galois-stable
//! algebraic classes), fibers with local degrees, critical values and
//! branch-data passports.

mod map;
mod mobius;
mod place;

pub use map::{Passport, PassportEntry, RatMapError, RationalMap};
pub use mobius::{Mobius, ProjPoint};
pub use place::{gcd_free_refine, places_from_poly, places_from_squarefree, Place};

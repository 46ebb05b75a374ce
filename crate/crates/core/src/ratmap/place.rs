//! Places of the projective line over the rationals.
//!
//! A place is either the point at infinity, a rational point, or an
//! algebraic class: the full set of conjugate roots of a squarefree monic
//! polynomial without rational roots. Classes are exactly the granularity at
//! which ramification data of a map defined over the rationals is constant.

use crate::exactnum::{poly_gcd, rational_roots, squarefree_decomposition, Rat, UniPoly};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Place {
    Infinity,
    Finite(Rat),
    /// All conjugate roots of a monic squarefree polynomial of degree >= 2
    /// with no rational roots.
    Class(UniPoly),
}

impl Place {
    pub fn class(p: UniPoly) -> Place {
        let p = p.monic();
        debug_assert!(p.degree() >= 2, "algebraic class must have degree >= 2");
        debug_assert!(
            poly_gcd(&p, &p.derivative()).is_constant(),
            "algebraic class polynomial must be squarefree"
        );
        debug_assert!(
            rational_roots(&p).unwrap().is_empty(),
            "rational roots must be promoted to finite places"
        );
        Place::Class(p)
    }

    /// Number of underlying points of the sphere.
    pub fn size(&self) -> usize {
        match self {
            Place::Infinity | Place::Finite(_) => 1,
            Place::Class(p) => p.degree(),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        use Place::*;
        match (self, other) {
            (Infinity, Infinity) => Ordering::Equal,
            (Infinity, _) => Ordering::Less,
            (_, Infinity) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Class(_)) => Ordering::Less,
            (Class(_), Finite(_)) => Ordering::Greater,
            (Class(a), Class(b)) => a.cmp_canonical(b),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Finite(r) => write!(f, "{}", r),
            Place::Class(p) => write!(f, "class({})", p),
        }
    }
}

/// Splits a squarefree polynomial into places: rational roots become finite
/// places, the remaining factor (if any) one algebraic class.
pub fn places_from_squarefree(p: &UniPoly) -> Vec<Place> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    for (r, m) in rational_roots(p).expect("nonzero polynomial") {
        debug_assert_eq!(m, 1, "input must be squarefree");
        let lin = UniPoly::new(vec![-&r, Rat::from_integer(1.into())]);
        rest = rest.div_exact(&lin);
        out.push(Place::Finite(r));
    }
    if !rest.is_constant() {
        out.push(Place::class(rest));
    }
    out
}

/// Full multiplicity structure of an arbitrary nonzero polynomial as places.
pub fn places_from_poly(p: &UniPoly) -> Vec<(Place, usize)> {
    let mut out = Vec::new();
    for (g, k) in squarefree_decomposition(p).expect("nonzero polynomial") {
        for place in places_from_squarefree(&g) {
            out.push((place, k));
        }
    }
    out
}

/// Refines a list of places into pairwise "atomic" places: finite places and
/// infinity deduplicated, class polynomials split against each other until
/// pairwise coprime. The result is sorted canonically.
pub fn gcd_free_refine(places: Vec<Place>) -> Vec<Place> {
    let mut finites: Vec<Place> = Vec::new();
    let mut classes: Vec<UniPoly> = Vec::new();
    for p in places {
        match p {
            Place::Class(c) => classes.push(c),
            other => {
                if !finites.contains(&other) {
                    finites.push(other);
                }
            }
        }
    }
    // split class polynomials into a gcd-free basis
    let mut basis: Vec<UniPoly> = Vec::new();
    let mut work = classes;
    while let Some(c) = work.pop() {
        if c.is_constant() {
            continue;
        }
        let mut c = c.monic();
        let mut absorbed = false;
        let mut i = 0;
        while i < basis.len() {
            let g = poly_gcd(&c, &basis[i]);
            if g.is_constant() {
                i += 1;
                continue;
            }
            if g == basis[i] && g == c {
                absorbed = true;
                break;
            }
            // split both against the common part and start over
            let b = basis.remove(i);
            let b_rest = b.div_exact(&g);
            let c_rest = c.div_exact(&g);
            work.push(g);
            if !b_rest.is_constant() {
                work.push(b_rest);
            }
            c = c_rest;
            if c.is_constant() {
                absorbed = true;
                break;
            }
        }
        if !absorbed && !c.is_constant() {
            basis.push(c);
        }
    }
    let mut out = finites;
    for b in basis {
        out.push(Place::class(b));
    }
    out.sort();
    out.dedup();
    out
}

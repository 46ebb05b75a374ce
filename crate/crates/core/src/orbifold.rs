//! Orbifold structures on the sphere and exact covering-map certificates.
//!
//! An orbifold assigns a ramification index ν ≥ 2 to finitely many places
//! (ν = 1 elsewhere); algebraic classes carry one index for the whole
//! conjugacy class. The module computes the exact Euler characteristic, the
//! divisibility partial order, the minimal ramification orbifolds of a map,
//! pullbacks along a map, and verifies the covering condition
//! ν₂(A(z)) = ν₁(z)·deg_z A on an explicit finite verification set.

use crate::exactnum::{poly_gcd, Rat};
use crate::ratmap::{gcd_free_refine, Place, RationalMap};
use num::integer::lcm;
use num::One;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbifoldError {
    #[error("orbifold support is invalid: {0}")]
    InvalidOrbifold(String),
    #[error("the minimal target orbifold of the map does not divide the given one")]
    NotDominating,
}

/// The multiset of ramification indices > 1, sorted ascending, one entry per
/// underlying point (classes contribute their size).
pub type Signature = Vec<u32>;

/// A sphere orbifold with Galois-stable ramification: finitely many places
/// with index ν ≥ 2, pairwise disjoint (class polynomials pairwise coprime).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbifold {
    support: Vec<(Place, u32)>,
}

impl Orbifold {
    pub fn empty() -> Orbifold {
        Orbifold { support: Vec::new() }
    }

    pub fn new(mut support: Vec<(Place, u32)>) -> Result<Orbifold, OrbifoldError> {
        for (p, nu) in &support {
            if *nu < 2 {
                return Err(OrbifoldError::InvalidOrbifold(format!(
                    "index {} at {} is below 2",
                    nu, p
                )));
            }
        }
        support.sort_by(|a, b| a.0.cmp(&b.0));
        for w in support.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(OrbifoldError::InvalidOrbifold(format!(
                    "place {} listed twice",
                    w[0].0
                )));
            }
        }
        for i in 0..support.len() {
            for j in i + 1..support.len() {
                if let (Place::Class(a), Place::Class(b)) = (&support[i].0, &support[j].0) {
                    if !poly_gcd(a, b).is_constant() {
                        return Err(OrbifoldError::InvalidOrbifold(format!(
                            "overlapping classes {} and {}",
                            support[i].0, support[j].0
                        )));
                    }
                }
            }
        }
        Ok(Orbifold { support })
    }

    pub fn support(&self) -> &[(Place, u32)] {
        &self.support
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Ramification index at a place that is *atomic* with respect to this
    /// orbifold: equal to a support place, contained in a support class, or
    /// disjoint from the support.
    pub fn nu(&self, p: &Place) -> u32 {
        for (sp, nu) in &self.support {
            if sp == p {
                return *nu;
            }
            if let (Place::Class(c), Place::Class(m)) = (sp, p) {
                if !poly_gcd(c, m).is_constant() {
                    debug_assert!(
                        poly_gcd(c, m).degree() == m.degree(),
                        "nu queried at a place overlapping a support class"
                    );
                    return *nu;
                }
            }
        }
        1
    }

    /// χ(O) = 2 + Σ (1/ν − 1), one term per underlying point.
    pub fn euler_char(&self) -> Rat {
        let mut chi = Rat::from_integer(2.into());
        for (p, nu) in &self.support {
            let size = Rat::from_integer((p.size() as i64).into());
            let term = Rat::new(1.into(), (*nu as i64).into()) - Rat::one();
            chi += size * term;
        }
        chi
    }

    pub fn signature(&self) -> Signature {
        let mut sig = Vec::new();
        for (p, nu) in &self.support {
            sig.extend(std::iter::repeat(*nu).take(p.size()));
        }
        sig.sort_unstable();
        sig
    }
}

impl fmt::Display for Orbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "(trivial)");
        }
        let mut first = true;
        for (p, nu) in &self.support {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "nu({}) = {}", p, nu)?;
        }
        Ok(())
    }
}

/// Refines the supports of both orbifolds into common atoms (every atom is
/// contained in or disjoint from every support place of either orbifold).
fn common_atoms(o1: &Orbifold, o2: &Orbifold) -> Vec<Place> {
    let places = o1
        .support
        .iter()
        .chain(o2.support.iter())
        .map(|(p, _)| p.clone())
        .collect();
    gcd_free_refine(places)
}

/// The divisibility partial order: ν₁(z) | ν₂(z) everywhere.
pub fn leq(o1: &Orbifold, o2: &Orbifold) -> bool {
    common_atoms(o1, o2)
        .iter()
        .all(|p| o2.nu(p) % o1.nu(p) == 0)
}

/// The minimal pair (O₁ᴬ, O₂ᴬ) making A a covering map between orbifolds:
/// the target index at a critical value is the lcm of the local degrees over
/// it, the source index at z is ν₂ᴬ(A(z)) / deg_z A where that exceeds 1.
pub fn ramification_orbifolds(a: &RationalMap) -> (Orbifold, Orbifold) {
    assert!(a.degree() >= 1, "ramification orbifolds need a nonconstant map");
    let mut s1 = Vec::new();
    let mut s2 = Vec::new();
    for (v, parts) in a.branch_data() {
        let nu2 = parts.iter().fold(1u32, |acc, (_, k)| lcm(acc, *k as u32));
        debug_assert!(nu2 >= 2, "critical value with trivial fiber lcm");
        for (p, k) in &parts {
            let nu1 = nu2 / *k as u32;
            debug_assert_eq!(nu2 % *k as u32, 0, "local degree must divide the fiber lcm");
            if nu1 > 1 {
                s1.push((p.clone(), nu1));
            }
        }
        s2.push((v, nu2));
    }
    (
        Orbifold::new(s1).expect("fiber places are pairwise disjoint"),
        Orbifold::new(s2).expect("critical values are pairwise disjoint"),
    )
}

/// A point where the covering condition fails, with the three numbers of the
/// defining equation ν₂(A(z)) = ν₁(z)·deg_z A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringFailure {
    pub place: Place,
    pub nu_source: u32,
    pub local_degree: usize,
    pub nu_target: u32,
}

impl fmt::Display for CoveringFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at {}: nu2 = {} but nu1 * local degree = {} * {}",
            self.place, self.nu_target, self.nu_source, self.local_degree
        )
    }
}

/// Splits a fiber place against the support of a source orbifold and tags
/// each portion with its ν₁ (possibly 1). The input must not straddle a
/// support place other than through its class polynomial.
fn source_portions(o1: &Orbifold, p: &Place) -> Vec<(Place, u32)> {
    match p {
        Place::Infinity | Place::Finite(_) => vec![(p.clone(), o1.nu(p))],
        Place::Class(m) => {
            let mut rest = m.clone();
            let mut out = Vec::new();
            for (sp, nu) in &o1.support {
                if let Place::Class(c) = sp {
                    if rest.is_constant() {
                        break;
                    }
                    let g = poly_gcd(&rest, c);
                    if !g.is_constant() {
                        rest = rest.div_exact(&g);
                        out.push((Place::class(g), *nu));
                    }
                }
            }
            if !rest.is_constant() {
                out.push((Place::class(rest.monic()), 1));
            }
            out
        }
    }
}

/// Verifies ν₂(A(z)) = ν₁(z)·deg_z A at every place. The verification set is
/// the union of all fibers over: the support of o2, the critical values of
/// A, and the A-images of the support of o1; everywhere else both sides are
/// 1 automatically.
pub fn is_covering(a: &RationalMap, o1: &Orbifold, o2: &Orbifold) -> Result<(), CoveringFailure> {
    let mut values: Vec<Place> = o2.support.iter().map(|(p, _)| p.clone()).collect();
    values.extend(a.critical_values());
    for (p, _) in &o1.support {
        values.extend(a.image_places(p));
    }
    let mut atoms = gcd_free_refine(values.clone());
    // report failures at target-support places before incidental ones
    let overlaps = |a: &Place, b: &Place| -> bool {
        a == b
            || matches!((a, b), (Place::Class(x), Place::Class(y))
                if !poly_gcd(x, y).is_constant())
    };
    atoms.sort_by_key(|a| values.iter().position(|v| overlaps(v, a)).unwrap_or(usize::MAX));
    for v in &atoms {
        let nu2 = o2.nu(v);
        for (p, k) in a.fiber(v) {
            for (portion, nu1) in source_portions(o1, &p) {
                if nu1 as usize * k != nu2 as usize {
                    return Err(CoveringFailure {
                        place: portion,
                        nu_source: nu1,
                        local_degree: k,
                        nu_target: nu2,
                    });
                }
            }
        }
    }
    Ok(())
}

/// The unique o1 making A: o1 → o2 a covering map, defined by
/// ν₁(z) = ν₂(A(z)) / deg_z A.
pub fn pullback_orbifold(a: &RationalMap, o2: &Orbifold) -> Result<Orbifold, OrbifoldError> {
    let (_, min2) = ramification_orbifolds(a);
    if !leq(&min2, o2) {
        return Err(OrbifoldError::NotDominating);
    }
    let mut s1: Vec<(Place, u32)> = Vec::new();
    // refine the target support against the critical values so fibers are
    // taken over atoms with a single well-defined index
    let mut values: Vec<Place> = o2.support.iter().map(|(p, _)| p.clone()).collect();
    values.extend(a.critical_values());
    for v in gcd_free_refine(values) {
        let nu2 = o2.nu(&v);
        if nu2 == 1 {
            continue;
        }
        for (p, k) in a.fiber(&v) {
            if nu2 as usize % k != 0 {
                return Err(OrbifoldError::NotDominating);
            }
            let nu1 = nu2 / k as u32;
            if nu1 > 1 {
                s1.push((p, nu1));
            }
        }
    }
    Orbifold::new(s1)
}

/// Riemann–Hurwitz certificate for a covering map: χ(o1) = deg A · χ(o2).
pub fn rh_check(a: &RationalMap, o1: &Orbifold, o2: &Orbifold) -> bool {
    let d = Rat::from_integer((a.degree() as i64).into());
    o1.euler_char() == d * o2.euler_char()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_i};
    use crate::exactnum::UniPoly;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    fn map(num: &[i64], den: &[i64]) -> RationalMap {
        RationalMap::make_map(&p(num), &p(den)).unwrap()
    }

    fn orb(entries: &[(Place, u32)]) -> Orbifold {
        Orbifold::new(entries.to_vec()).unwrap()
    }

    fn fin(n: i64) -> Place {
        Place::Finite(rat_i(n))
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(Orbifold::empty().euler_char(), rat_i(2));
        let o = orb(&[(fin(0), 2), (fin(1), 3), (Place::Infinity, 6)]);
        assert_eq!(o.euler_char(), rat_i(0));
        let o = orb(&[(fin(0), 2), (fin(1), 3), (Place::Infinity, 3)]);
        assert_eq!(o.euler_char(), rat(1, 6));
        let o = orb(&[(fin(0), 2), (fin(1), 3), (Place::Infinity, 7)]);
        assert_eq!(o.euler_char(), rat(-1, 42));
    }

    #[test]
    fn zero_chi_signatures() {
        for sig in [vec![2, 3, 6], vec![2, 4, 4], vec![3, 3, 3], vec![2, 2, 2, 2]] {
            let support: Vec<(Place, u32)> = sig
                .iter()
                .enumerate()
                .map(|(i, nu)| (fin(i as i64), *nu))
                .collect();
            assert_eq!(orb(&support).euler_char(), rat_i(0));
        }
    }

    #[test]
    fn leq_examples() {
        let o1 = orb(&[(fin(0), 2)]);
        let o2 = orb(&[(fin(0), 4), (fin(1), 2)]);
        assert!(leq(&o1, &o2));
        assert!(!leq(&orb(&[(fin(0), 3)]), &orb(&[(fin(0), 2)])));
        assert!(leq(&Orbifold::empty(), &o2));
        assert!(!leq(&o2, &o1));
    }

    #[test]
    fn leq_refines_classes() {
        // nu = 2 on the class of z^4 - 10z^2 + 1 (all of +-sqrt2 +- sqrt3)
        // dominates nu = 2 on the subclass z^2 - 2 ... but not conversely
        let big = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        let whole = orb(&[(Place::class(big), 2)]);
        let part = orb(&[(Place::class(p(&[-2, 0, 1])), 2)]);
        assert!(leq(&part, &whole));
        assert!(!leq(&whole, &part));
    }

    #[test]
    fn ramification_of_square() {
        let sq = map(&[0, 0, 1], &[1]);
        let (o1, o2) = ramification_orbifolds(&sq);
        assert!(o1.is_empty());
        assert_eq!(o2, orb(&[(Place::Infinity, 2), (fin(0), 2)]));
    }

    #[test]
    fn ramification_of_chebyshev4() {
        // T4 = 8z^4 - 8z^2 + 1
        let t4 = map(&[1, 0, -8, 0, 8], &[1]);
        let (o1, o2) = ramification_orbifolds(&t4);
        assert_eq!(o2.signature(), vec![2, 2, 4]);
        assert_eq!(
            o2,
            orb(&[(Place::Infinity, 4), (fin(-1), 2), (fin(1), 2)])
        );
        assert_eq!(o1, orb(&[(fin(-1), 2), (fin(1), 2)]));
        assert!(is_covering(&t4, &o1, &o2).is_ok());
        assert!(rh_check(&t4, &o1, &o2));
        assert_eq!(o1.euler_char(), rat_i(1));
    }

    #[test]
    fn covering_check_square() {
        let sq = map(&[0, 0, 1], &[1]);
        let o2 = orb(&[(fin(0), 2), (Place::Infinity, 2)]);
        assert!(is_covering(&sq, &Orbifold::empty(), &o2).is_ok());
        let bad = orb(&[(fin(0), 3)]);
        let fail = is_covering(&sq, &Orbifold::empty(), &bad).unwrap_err();
        assert_eq!(fail.place, fin(0));
        assert_eq!((fail.nu_source, fail.local_degree, fail.nu_target), (1, 2, 3));
    }

    #[test]
    fn covering_check_chebyshev3_shifted_orbifolds() {
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let o1 = orb(&[(fin(1), 2), (fin(-1), 6), (Place::Finite(rat(1, 2)), 3)]);
        let o2 = orb(&[(fin(1), 2), (fin(-1), 6), (Place::Infinity, 3)]);
        assert!(is_covering(&t3, &o1, &o2).is_ok());
        assert!(rh_check(&t3, &o1, &o2));
        assert_eq!(pullback_orbifold(&t3, &o2).unwrap(), o1);
    }

    #[test]
    fn pullback_examples() {
        let sq = map(&[0, 0, 1], &[1]);
        let o2 = orb(&[(fin(0), 4), (Place::Infinity, 4)]);
        assert_eq!(
            pullback_orbifold(&sq, &o2).unwrap(),
            orb(&[(fin(0), 2), (Place::Infinity, 2)])
        );
        assert_eq!(
            pullback_orbifold(&sq, &orb(&[(fin(0), 3)])),
            Err(OrbifoldError::NotDominating)
        );
    }

    #[test]
    fn minimality_of_ramification_orbifolds() {
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let (min1, min2) = ramification_orbifolds(&t3);
        assert!(is_covering(&t3, &min1, &min2).is_ok());
        assert!(rh_check(&t3, &min1, &min2));
        // any other covering pair dominates the minimal one
        let o1 = orb(&[(fin(1), 2), (fin(-1), 6), (Place::Finite(rat(1, 2)), 3)]);
        let o2 = orb(&[(fin(1), 2), (fin(-1), 6), (Place::Infinity, 3)]);
        assert!(leq(&min1, &o1));
        assert!(leq(&min2, &o2));
    }

    #[test]
    fn galois_covering_degree12() {
        // -(1/64) z^3 (z^3-8)^3 / (z^3+1)^3: unramified source orbifold with
        // chi(target) = 2/12
        let num = (&p(&[0, 1]).pow(3) * &p(&[-8, 0, 0, 1]).pow(3)).scale(&rat_i(-1));
        let den = p(&[1, 0, 0, 1]).pow(3).scale(&rat_i(64));
        let a = RationalMap::make_map(&num, &den).unwrap();
        let (o1, o2) = ramification_orbifolds(&a);
        assert!(o1.is_empty());
        assert_eq!(o2.signature(), vec![2, 3, 3]);
        assert_eq!(o2.nu(&fin(0)), 3);
        assert_eq!(o2.nu(&fin(1)), 2);
        assert_eq!(o2.nu(&Place::Infinity), 3);
        assert_eq!(o2.euler_char(), rat(1, 6));
        assert!(rh_check(&a, &o1, &o2));
    }

    #[test]
    fn invalid_orbifolds_rejected() {
        assert!(Orbifold::new(vec![(fin(0), 1)]).is_err());
        assert!(Orbifold::new(vec![(fin(0), 2), (fin(0), 3)]).is_err());
        let big = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        assert!(Orbifold::new(vec![
            (Place::class(big), 2),
            (Place::class(p(&[-2, 0, 1])), 3)
        ])
        .is_err());
    }
}

//! Genus classification of the Galois closure of a rational map, catalog
//! matching up to Mobius equivalence, decomposition verification, and the
//! flat (Euler-characteristic-zero) covering analysis with Lattes detection.

mod catalog;
mod mu;

pub use catalog::{
    catalog, catalog_match, chebyshev, cyclic, dihedral_half, icosa_a, icosa_b, icosa_c,
    icosa_d, icosa_e, icosa_f, icosa_g, icosa_h, octa_a, octa_b, octa_c, octa_d, octa_e,
    octa_f, octa_g, parametric_entry, tetra_a, tetra_b, tetra_c, CatalogEntry, CatalogMatch,
    Family,
};
pub use mu::mu_equivalent;

use crate::exactnum::{rat_i, Rat};
use crate::orbifold::{
    is_covering, pullback_orbifold, ramification_orbifolds, leq, Orbifold, Signature,
};
use crate::ratmap::{gcd_free_refine, Place, RationalMap};
use num::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("no catalog family matches a spherical-closure map")]
    NoMatch,
    #[error("the maps expose too few rational anchor points for the equivalence search")]
    Unsupported,
}

/// Genus of the normalization (Galois closure) of the map, determined by the
/// sign of the Euler characteristic of its minimal target orbifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusClass {
    Zero,
    One,
    Higher,
}

impl fmt::Display for GenusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenusClass::Zero => "zero",
            GenusClass::One => "one",
            GenusClass::Higher => "higher",
        })
    }
}

pub fn genus_class(a: &RationalMap) -> GenusClass {
    if a.degree() <= 1 {
        return GenusClass::Zero;
    }
    let (_, o2) = ramification_orbifolds(a);
    let chi = o2.euler_char();
    if chi > Rat::zero() {
        GenusClass::Zero
    } else if chi.is_zero() {
        GenusClass::One
    } else {
        GenusClass::Higher
    }
}

/// Number of points in the preimage of {0, 1, infinity}, class sizes
/// counted. Equals degree + 2 exactly when the map is Belyi.
pub fn belyi_preimage_count(a: &RationalMap) -> usize {
    [
        Place::Finite(rat_i(0)),
        Place::Finite(rat_i(1)),
        Place::Infinity,
    ]
    .iter()
    .map(|v| a.fiber(v).iter().map(|(p, _)| p.size()).sum::<usize>())
    .sum()
}

/// True iff every critical value lies in {0, 1, infinity}; cross-checked
/// against the preimage-count certificate (count == degree + 2).
pub fn is_belyi(a: &RationalMap) -> bool {
    let special = [
        Place::Finite(rat_i(0)),
        Place::Finite(rat_i(1)),
        Place::Infinity,
    ];
    let by_values = a.critical_values().iter().all(|v| special.contains(v));
    debug_assert_eq!(
        by_values,
        belyi_preimage_count(a) == a.degree() + 2,
        "critical-value and preimage-count certificates disagree"
    );
    by_values
}

/// Exact equality of `f` with the left-to-right (outermost-first)
/// composition of `parts`.
pub fn verify_decomposition(f: &RationalMap, parts: &[RationalMap]) -> bool {
    assert!(!parts.is_empty(), "decomposition needs at least one part");
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = RationalMap::compose(&acc, p);
    }
    &acc == f
}

/// Whether a spherical signature pair (universal-covering target, left
/// factor target) is admissible: equality, or one of the listed
/// degenerations ({n,n} -> {d,d} with d | n; {2,2,n} -> {2,2,d} with d | n;
/// {2,3,3} -> {3,3}; {2,3,4} -> {2,2,3} or {2,2}).
pub fn left_factor_constraint(nu_theta: &Signature, nu_a: &Signature) -> bool {
    if nu_theta == nu_a {
        return true;
    }
    match nu_theta.as_slice() {
        [n, m] if n == m => matches!(nu_a.as_slice(), [d, e] if d == e && n % d == 0),
        [2, 2, n] => matches!(nu_a.as_slice(), [2, 2, d] if n % d == 0),
        [2, 3, 3] => nu_a.as_slice() == [3, 3],
        [2, 3, 4] => nu_a.as_slice() == [2, 2, 3] || nu_a.as_slice() == [2, 2],
        _ => false,
    }
}

/// Forward-orbit closure of the critical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Postcritical {
    Finite(Vec<Place>),
    Unbounded,
}

/// Iterates the map on its critical values until the orbit closes up or its
/// total point count exceeds `cap`.
pub fn postcritical_set(a: &RationalMap, cap: usize) -> Postcritical {
    assert!(a.degree() >= 2, "postcritical set needs degree >= 2");
    let mut places = gcd_free_refine(a.critical_values());
    loop {
        let mut next = places.clone();
        for p in &places {
            next.extend(a.image_places(p));
        }
        let next = gcd_free_refine(next);
        if next.iter().map(|p| p.size()).sum::<usize>() > cap {
            return Postcritical::Unbounded;
        }
        if next == places {
            return Postcritical::Finite(places);
        }
        places = next;
    }
}

/// Which row of the flat-covering case table a witness instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// chi of the minimal target orbifold is 0 and the witness is the forced
    /// minimal pair.
    ZeroChiForced,
    /// Row 1-17 of the spherical-closure case table.
    Case(u8),
    /// A valid witness outside the tabulated rows (not expected to occur).
    Unlisted,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::ZeroChiForced => f.write_str("zero-chi-forced"),
            CaseTag::Case(n) => write!(f, "case {}", n),
            CaseTag::Unlisted => f.write_str("unlisted"),
        }
    }
}

/// A certified flat covering pair for a map: both orbifolds have Euler
/// characteristic 0 and the covering condition is verified.
#[derive(Debug, Clone)]
pub struct CoveringWitness {
    pub o1: Orbifold,
    pub o2: Orbifold,
    pub case: CaseTag,
}

/// All ways to distribute the entries of a flat signature over the given
/// places: each place consumes `size` equal entries, each divisible by its
/// required minimum. Returns (per-place value, leftover entries) pairs in
/// deterministic order.
fn signature_assignments(
    vals: &[(Place, u32)],
    sig: &[u32],
) -> Vec<(Vec<u32>, Vec<u32>)> {
    fn rec(
        i: usize,
        vals: &[(Place, u32)],
        remaining: &mut Vec<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<(Vec<u32>, Vec<u32>)>,
    ) {
        if i == vals.len() {
            out.push((cur.clone(), remaining.clone()));
            return;
        }
        let (place, min) = &vals[i];
        let s = place.size();
        let mut tried: Vec<u32> = Vec::new();
        let options: Vec<u32> = remaining.clone();
        for nu in options {
            if tried.contains(&nu) || nu % min != 0 {
                continue;
            }
            tried.push(nu);
            if remaining.iter().filter(|x| **x == nu).count() < s {
                continue;
            }
            for _ in 0..s {
                let pos = remaining.iter().position(|x| *x == nu).unwrap();
                remaining.remove(pos);
            }
            cur.push(nu);
            rec(i + 1, vals, remaining, cur, out);
            cur.pop();
            for _ in 0..s {
                remaining.push(nu);
            }
            remaining.sort_unstable();
        }
    }
    let mut remaining: Vec<u32> = sig.to_vec();
    remaining.sort_unstable();
    let mut out = Vec::new();
    rec(0, vals, &mut remaining, &mut Vec::new(), &mut out);
    out
}

const FLAT_SIGNATURES: [&[u32]; 4] = [&[2, 2, 2, 2], &[2, 4, 4], &[3, 3, 3], &[2, 3, 6]];

fn case_tag(degree: usize, sig_a: &Signature, s1: &Signature, s2: &Signature) -> CaseTag {
    // (row, minimal-target signature, witness source/target signatures,
    // degree when needed to separate rows)
    #[rustfmt::skip]
    const TABLE: [(u8, &[u32], &[u32], &[u32], Option<usize>); 17] = [
        (1,  &[2, 2],    &[2, 2, 2, 2], &[2, 2, 2, 2], None),
        (2,  &[2, 2],    &[2, 4, 4],    &[2, 4, 4],    None),
        (3,  &[2, 2],    &[2, 2, 2, 2], &[2, 4, 4],    None),
        (4,  &[2, 2],    &[3, 3, 3],    &[2, 3, 6],    None),
        (5,  &[3, 3],    &[3, 3, 3],    &[3, 3, 3],    None),
        (6,  &[3, 3],    &[2, 2, 2, 2], &[2, 3, 6],    None),
        (7,  &[4, 4],    &[2, 2, 2, 2], &[2, 4, 4],    None),
        (8,  &[2, 2, 2], &[2, 2, 2, 2], &[2, 2, 2, 2], None),
        (9,  &[2, 2, 2], &[2, 2, 2, 2], &[2, 4, 4],    None),
        (10, &[2, 2, 3], &[3, 3, 3],    &[2, 3, 6],    None),
        (11, &[2, 2, 3], &[2, 3, 6],    &[2, 3, 6],    None),
        (12, &[2, 2, 4], &[2, 2, 2, 2], &[2, 4, 4],    Some(8)),
        (13, &[2, 2, 4], &[2, 2, 2, 2], &[2, 4, 4],    Some(4)),
        (14, &[2, 2, 4], &[2, 4, 4],    &[2, 4, 4],    None),
        (15, &[2, 3, 3], &[2, 3, 6],    &[2, 3, 6],    None),
        (16, &[2, 3, 3], &[2, 2, 2, 2], &[2, 3, 6],    Some(6)),
        (17, &[2, 3, 3], &[2, 2, 2, 2], &[2, 3, 6],    Some(12)),
    ];
    for (row, ta, t1, t2, deg) in TABLE {
        if sig_a.as_slice() == ta
            && s1.as_slice() == t1
            && s2.as_slice() == t2
            && deg.map_or(true, |d| d == degree)
        {
            return CaseTag::Case(row);
        }
    }
    CaseTag::Unlisted
}

/// Constructs a flat covering witness (a pair of Euler-characteristic-zero
/// orbifolds making the map a covering) when one exists. With a flat minimal
/// target the pair is forced; with a spherical one the witness is built by
/// distributing one of the four flat signatures over the critical values,
/// placing leftover entries at the smallest fresh non-negative integers.
pub fn zero_chi_analysis(a: &RationalMap) -> Option<CoveringWitness> {
    assert!(a.degree() >= 2, "flat covering analysis needs degree >= 2");
    let (o1a, o2a) = ramification_orbifolds(a);
    let chi = o2a.euler_char();
    if chi.is_zero() {
        debug_assert!(is_covering(a, &o1a, &o2a).is_ok());
        return Some(CoveringWitness {
            o1: o1a,
            o2: o2a,
            case: CaseTag::ZeroChiForced,
        });
    }
    if chi < Rat::zero() {
        return None;
    }
    let sig_a = o2a.signature();
    let crit: Vec<(Place, u32)> = o2a.support().to_vec();
    for target in FLAT_SIGNATURES {
        for (assign, leftover) in signature_assignments(&crit, target) {
            let mut support: Vec<(Place, u32)> = crit
                .iter()
                .zip(assign.iter())
                .map(|((p, _), nu)| (p.clone(), *nu))
                .collect();
            let mut leftover = leftover;
            leftover.sort_unstable_by(|x, y| y.cmp(x));
            let mut next = 0i64;
            for nu in leftover {
                while support.iter().any(|(p, _)| *p == Place::Finite(rat_i(next))) {
                    next += 1;
                }
                support.push((Place::Finite(rat_i(next)), nu));
                next += 1;
            }
            let Ok(o2) = Orbifold::new(support) else { continue };
            let Ok(o1) = pullback_orbifold(a, &o2) else { continue };
            if !o1.euler_char().is_zero() {
                continue;
            }
            if is_covering(a, &o1, &o2).is_err() {
                continue;
            }
            let tag = case_tag(a.degree(), &sig_a, &o1.signature(), &o2.signature());
            return Some(CoveringWitness { o1, o2, case: tag });
        }
    }
    None
}

/// Detects a flat self-covering O -> O, the defining property of a Lattes
/// map; returns the witness orbifold. For a flat minimal target the only
/// candidate is the forced minimal pair. For a spherical one the support of
/// any self-covering orbifold must contain every critical value and be
/// forward-closed (nu(A(x)) = nu(x) * deg_x forces nu(A(x)) >= 2), so it
/// contains the whole postcritical set; the postcritical atoms themselves
/// are the only candidate support, tried with the four flat signatures.
pub fn is_lattes(a: &RationalMap) -> Option<Orbifold> {
    assert!(a.degree() >= 2, "Lattes detection needs degree >= 2");
    let (o1a, o2a) = ramification_orbifolds(a);
    let chi = o2a.euler_char();
    if chi.is_zero() {
        return if leq(&o1a, &o2a) && leq(&o2a, &o1a) {
            Some(o2a)
        } else {
            None
        };
    }
    if chi < Rat::zero() {
        return None;
    }
    // a flat orbifold carries at most 4 support points, so any postcritical
    // set larger than that rules the map out; the tight cap also stops the
    // orbit iteration before coefficient heights explode on wandering maps
    let mut support_places = match postcritical_set(a, 4) {
        Postcritical::Finite(p) => p,
        Postcritical::Unbounded => return None,
    };
    let total: usize = support_places.iter().map(|p| p.size()).sum();
    if !(3..=4).contains(&total) {
        return None;
    }
    support_places.sort();
    let vals: Vec<(Place, u32)> = support_places.iter().map(|p| (p.clone(), 1)).collect();
    for target in FLAT_SIGNATURES {
        if target.len() != total {
            continue;
        }
        for (assign, leftover) in signature_assignments(&vals, target) {
            if !leftover.is_empty() {
                continue;
            }
            let support: Vec<(Place, u32)> = support_places
                .iter()
                .zip(assign.iter())
                .map(|(p, nu)| (p.clone(), *nu))
                .collect();
            let Ok(o) = Orbifold::new(support) else { continue };
            if is_covering(a, &o, &o).is_ok() {
                return Some(o);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::UniPoly;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    fn pm(num: &[i64], den: &[i64]) -> RationalMap {
        RationalMap::make_map(&p(num), &p(den)).unwrap()
    }

    fn doubling_map() -> RationalMap {
        pm(&[1, 0, 2, 0, 1], &[0, -4, 0, 4])
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_class(&pm(&[0, 0, 0, 0, 0, 1], &[1])), GenusClass::Zero);
        // degree-5 polynomial z^4(z-1) has a hyperbolic minimal target
        assert_eq!(genus_class(&pm(&[0, 0, 0, 0, -1, 1], &[1])), GenusClass::Higher);
        assert_eq!(genus_class(&pm(&[2, 1], &[1])), GenusClass::Zero);
    }

    #[test]
    fn doubling_map_closure_is_flat_but_spherical_target() {
        // the minimal target of the elliptic doubling map has signature
        // {2,2,2} at 0, 1, -1, so chi > 0; the flat structure appears as a
        // self-covering with signature {2,2,2,2}
        let a = doubling_map();
        let (_, o2) = ramification_orbifolds(&a);
        assert_eq!(o2.signature(), vec![2, 2, 2]);
        let o = is_lattes(&a).expect("doubling map is a Lattes map");
        assert_eq!(o.signature(), vec![2, 2, 2, 2]);
        assert!(is_covering(&a, &o, &o).is_ok());
    }

    #[test]
    fn belyi_examples() {
        assert!(is_belyi(&pm(&[0, 0, 1], &[1])));
        assert!(!is_belyi(&pm(&[-2, 0, 1], &[1])));
        let a = crate::classify::tetra_a();
        assert!(is_belyi(&a));
        assert_eq!(belyi_preimage_count(&a), 14);
    }

    #[test]
    fn decomposition_examples() {
        let whole = crate::classify::tetra_a();
        let parts = vec![
            pm(&[0, 0, 0, -1], &[64]),
            pm(&[-4, 0, 1], &[-1, 1]),
            pm(&[2, 0, 1], &[1, 1]),
        ];
        assert!(verify_decomposition(&whole, &parts));
        assert!(verify_decomposition(
            &pm(&[0, 0, 1], &[1]),
            &[pm(&[0, 0, 1], &[1]), pm(&[0, 1], &[1])]
        ));
        assert!(!verify_decomposition(
            &pm(&[0, 0, 1], &[1]),
            &[pm(&[0, 0, 1], &[1]), pm(&[1, 1], &[1])]
        ));
    }

    #[test]
    fn left_factor_table() {
        assert!(left_factor_constraint(&vec![2, 3, 3], &vec![3, 3]));
        assert!(left_factor_constraint(&vec![2, 3, 4], &vec![2, 2, 3]));
        assert!(left_factor_constraint(&vec![2, 3, 4], &vec![2, 2]));
        assert!(!left_factor_constraint(&vec![2, 3, 3], &vec![2, 2]));
        assert!(left_factor_constraint(&vec![6, 6], &vec![3, 3]));
        assert!(!left_factor_constraint(&vec![6, 6], &vec![4, 4]));
        assert!(left_factor_constraint(&vec![2, 2, 6], &vec![2, 2, 3]));
        assert!(!left_factor_constraint(&vec![2, 3, 5], &vec![2, 3, 4]));
        assert!(left_factor_constraint(&vec![2, 3, 5], &vec![2, 3, 5]));
    }

    #[test]
    fn postcritical_examples() {
        use Place::*;
        assert_eq!(
            postcritical_set(&pm(&[0, 0, 1], &[1]), 10),
            Postcritical::Finite(vec![Infinity, Finite(rat_i(0))])
        );
        assert_eq!(
            postcritical_set(&pm(&[-2, 0, 1], &[1]), 10),
            Postcritical::Finite(vec![Infinity, Finite(rat_i(-2)), Finite(rat_i(2))])
        );
        assert_eq!(postcritical_set(&pm(&[-3, 0, 1], &[1]), 10), Postcritical::Unbounded);
    }

    #[test]
    fn flat_analysis_of_square() {
        let w = zero_chi_analysis(&pm(&[0, 0, 1], &[1])).unwrap();
        assert_eq!(w.case, CaseTag::Case(1));
        assert_eq!(w.o1.signature(), vec![2, 2, 2, 2]);
        assert_eq!(w.o2.signature(), vec![2, 2, 2, 2]);
    }

    #[test]
    fn flat_analysis_absent_for_hyperbolic() {
        assert!(zero_chi_analysis(&pm(&[0, 0, 0, 0, -1, 1], &[1])).is_none());
    }

    #[test]
    fn flat_analysis_forced_for_flat_target() {
        // the doubling map composed with itself (multiplication by 4 on the
        // curve) has a flat minimal target
        let a = doubling_map();
        let a2 = RationalMap::compose(&a, &a);
        let (_, o2) = ramification_orbifolds(&a2);
        assert!(o2.euler_char().is_zero());
        let w = zero_chi_analysis(&a2).unwrap();
        assert_eq!(w.case, CaseTag::ZeroChiForced);
        assert!(w.o1.euler_char().is_zero());
    }

    #[test]
    fn lattes_boundary() {
        assert!(is_lattes(&doubling_map()).is_some());
        for n in 2..=6u32 {
            let z_n = cyclic(n).unwrap();
            assert!(is_lattes(&z_n).is_none(), "z^{} is not a Lattes map", n);
            let t_n = chebyshev(n).unwrap();
            assert!(is_lattes(&t_n).is_none(), "T_{} is not a Lattes map", n);
        }
    }

    #[test]
    fn catalog_match_examples() {
        let t2_like = pm(&[-1, 0, 2], &[1]);
        let matches = catalog_match(&t2_like).unwrap();
        let names: Vec<String> = matches.iter().map(|m| m.entry.name()).collect();
        assert_eq!(names, vec!["Cyclic(2)", "Chebyshev(2)"]);
        for m in &matches {
            let recomposed = m.entry.map.mobius_conjugate(&m.mu_left, &m.mu_right);
            assert_eq!(recomposed, t2_like);
        }

        let cubic = pm(&[0, 0, -1, 1], &[1]); // z^2(z-1)
        let matches = catalog_match(&cubic).unwrap();
        let names: Vec<String> = matches.iter().map(|m| m.entry.name()).collect();
        assert_eq!(names, vec!["Chebyshev(3)"]);
    }

    #[test]
    fn catalog_match_octahedral() {
        let a = octa_a();
        let matches = catalog_match(&a).unwrap();
        let names: Vec<String> = matches.iter().map(|m| m.entry.name()).collect();
        assert_eq!(names, vec!["Octa_a"]);
    }
}

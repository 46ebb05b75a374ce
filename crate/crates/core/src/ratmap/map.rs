//! Rational maps in canonical coprime form, their fibers and branch data.
//!
//! Critical values are located from the squarefree structure of the
//! Wronskian numerator W = P'Q - PQ': rational critical points are evaluated
//! directly, conjugate families are pushed forward through resultants
//! (computed by evaluation/interpolation, which is immune to degree drops
//! because the class modulus is monic). The fiber over an algebraic value
//! class is read off the flattened fiber polynomial Q^s m(P/Q) over the
//! rationals; a resultant certificate checks that the fiber shape is
//! constant across the class and splits the value class when it is not.

use super::mobius::{Mobius, ProjPoint};
use super::place::{gcd_free_refine, places_from_poly, places_from_squarefree, Place};
use crate::exactnum::{
    poly_gcd, rational_roots, resultant, squarefree_decomposition, Int, Rat, UniPoly,
};
use num::{Integer, One, Signed, Zero};
use std::cmp::Reverse;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatMapError {
    #[error("0/0 is not a rational map")]
    ZeroOverZero,
}

/// A rational self-map of the projective line: coprime numerator and
/// denominator, coefficients cleared to coprime integers overall, leading
/// coefficient of the denominator positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    num: UniPoly,
    den: UniPoly,
}

impl RationalMap {
    pub fn make_map(num: &UniPoly, den: &UniPoly) -> Result<RationalMap, RatMapError> {
        if num.is_zero() && den.is_zero() {
            return Err(RatMapError::ZeroOverZero);
        }
        if den.is_zero() {
            // constant infinity is not a self-map we ever build internally,
            // but normalize it as 1/0 for totality
            return Ok(RationalMap {
                num: UniPoly::one(),
                den: UniPoly::zero(),
            });
        }
        let g = poly_gcd(num, den);
        let (mut num, mut den) = if g.is_constant() {
            (num.clone(), den.clone())
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        // joint scaling: clear to coprime integers overall
        let (ni, ns) = num.primitive_int();
        let (di, ds) = den.primitive_int();
        // num = ns * ni, den = ds * di; divide both by gcd(ns, ds) in the
        // rational sense: scale = gcd of the two positive rationals
        if num.is_zero() {
            den = den.monic(); // 0 over anything is 0/1
            num = UniPoly::zero();
            return Ok(RationalMap {
                num,
                den: den.scale(&(Rat::one() / den.lc())),
            });
        }
        let gn = ns.numer() * ds.denom();
        let gd = ds.numer() * ns.denom();
        let g = Rat::new(gn.gcd(&gd), ns.denom() * ds.denom());
        num = UniPoly::from_int_coeffs(&ni).scale(&(ns / g.clone()));
        den = UniPoly::from_int_coeffs(&di).scale(&(ds / g));
        if den.lc().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalMap { num, den })
    }

    pub fn from_poly(p: &UniPoly) -> RationalMap {
        RationalMap::make_map(p, &UniPoly::one()).unwrap()
    }

    pub fn constant(r: &Rat) -> RationalMap {
        RationalMap::from_poly(&UniPoly::constant(r.clone()))
    }

    pub fn var() -> RationalMap {
        RationalMap::from_poly(&UniPoly::var())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    // -- field operations (used by the expression evaluator) ---------------

    pub fn add(&self, rhs: &RationalMap) -> RationalMap {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalMap::make_map(&num, &den).unwrap()
    }

    pub fn sub(&self, rhs: &RationalMap) -> RationalMap {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RationalMap {
        RationalMap::make_map(&-&self.num, &self.den).unwrap()
    }

    pub fn mul(&self, rhs: &RationalMap) -> RationalMap {
        RationalMap::make_map(&(&self.num * &rhs.num), &(&self.den * &rhs.den)).unwrap()
    }

    /// Division; None when dividing by the zero map.
    pub fn div(&self, rhs: &RationalMap) -> Option<RationalMap> {
        if rhs.num.is_zero() {
            return None;
        }
        Some(RationalMap::make_map(&(&self.num * &rhs.den), &(&self.den * &rhs.num)).unwrap())
    }

    /// Integer power; negative exponents invert (None for 0^-k).
    pub fn powi(&self, e: i64) -> Option<RationalMap> {
        let p = e.unsigned_abs() as usize;
        let base = RationalMap::make_map(&self.num.pow(p), &self.den.pow(p)).unwrap();
        if e >= 0 {
            Some(base)
        } else {
            RationalMap::constant(&Rat::one()).div(&base)
        }
    }

    pub fn sub_const(&self, c: &Rat) -> RationalMap {
        let num = &self.num - &self.den.scale(c);
        RationalMap::make_map(&num, &self.den).unwrap()
    }

    /// Exact composition outer(inner(z)); degrees multiply.
    pub fn compose(outer: &RationalMap, inner: &RationalMap) -> RationalMap {
        let m = outer.degree();
        let hom = |p: &UniPoly| -> UniPoly {
            // z^m * p(inner) homogenized with the inner denominator
            let mut acc = UniPoly::zero();
            let mut qi_pow = inner.den.pow(m); // den^(m-j) built down
            // compute p_j * num^j * den^(m-j) incrementally
            let mut num_pow = UniPoly::one();
            for j in 0..=m {
                let c = p.coeff(j);
                if !c.is_zero() {
                    acc = &acc + &(&num_pow * &qi_pow).scale(&c);
                }
                if j < m {
                    num_pow = &num_pow * &inner.num;
                    qi_pow = qi_pow.div_exact(&inner.den);
                }
            }
            acc
        };
        RationalMap::make_map(&hom(&outer.num), &hom(&outer.den)).unwrap()
    }

    /// left . self . right for Mobius transformations left and right.
    pub fn mobius_conjugate(&self, left: &Mobius, right: &Mobius) -> RationalMap {
        let inner = RationalMap::compose(self, &right.as_map());
        RationalMap::compose(&left.as_map(), &inner)
    }

    // -- evaluation ---------------------------------------------------------

    /// Value at a finite rational point; None means infinity.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let q = self.den.eval(x);
        if q.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / q)
    }

    /// Value at infinity; None means infinity.
    pub fn eval_inf(&self) -> Option<Rat> {
        use std::cmp::Ordering::*;
        match self.num.degree().cmp(&self.den.degree()) {
            Greater => None,
            Less => Some(Rat::zero()),
            Equal => Some(self.num.lc() / self.den.lc()),
        }
    }

    pub fn apply_proj(&self, p: &ProjPoint) -> ProjPoint {
        if p.is_infinity() {
            return match self.eval_inf() {
                None => ProjPoint::infinity(),
                Some(v) => ProjPoint::from_rat(&v),
            };
        }
        let x = p.to_rat().unwrap();
        match self.eval(&x) {
            None => ProjPoint::infinity(),
            Some(v) => ProjPoint::from_rat(&v),
        }
    }

    /// Numerator of the derivative: W = P'Q - PQ'.
    pub fn wronskian(&self) -> UniPoly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// The coordinate flip A(1/z) in canonical form.
    fn flip(&self) -> RationalMap {
        let d = self.degree();
        let rev = |p: &UniPoly| -> UniPoly {
            let mut cs = vec![Rat::zero(); d + 1];
            for j in 0..=p.degree() {
                cs[d - j] = p.coeff(j);
            }
            UniPoly::new(cs)
        };
        RationalMap::make_map(&rev(&self.num), &rev(&self.den)).unwrap()
    }

    // -- local structure ----------------------------------------------------

    /// Local degree of the map at a place (constant across an algebraic
    /// class for maps defined over the rationals).
    pub fn local_degree(&self, p: &Place) -> usize {
        match p {
            Place::Finite(x) => {
                if self.den.eval(x).is_zero() {
                    root_multiplicity(&self.den, x)
                } else {
                    let v = self.num.eval(x) / self.den.eval(x);
                    let f = &self.num - &self.den.scale(&v);
                    root_multiplicity(&f, x)
                }
            }
            Place::Infinity => self.flip().local_degree(&Place::Finite(Rat::zero())),
            Place::Class(m) => {
                let mut ks = Vec::new();
                for v in self.image_places(p) {
                    for (q, k) in self.fiber(&v) {
                        let overlap = match &q {
                            Place::Class(c) => !poly_gcd(c, m).is_constant(),
                            _ => false,
                        };
                        if overlap {
                            ks.push(k);
                        }
                    }
                }
                assert!(!ks.is_empty(), "class place has no image fiber");
                assert!(
                    ks.iter().all(|k| *k == ks[0]),
                    "local degree not constant on the class"
                );
                ks[0]
            }
        }
    }

    /// The image A(p) as a set of places (a single place for rational points
    /// and infinity; possibly several classes for an algebraic class).
    pub fn image_places(&self, p: &Place) -> Vec<Place> {
        match p {
            Place::Finite(x) => vec![match self.eval(x) {
                Some(v) => Place::Finite(v),
                None => Place::Infinity,
            }],
            Place::Infinity => vec![match self.eval_inf() {
                Some(v) => Place::Finite(v),
                None => Place::Infinity,
            }],
            Place::Class(m) => self.class_images(m),
        }
    }

    /// Image value places of a source class: the squarefree resolvent
    /// Res_z(m, P - vQ) in the value variable, plus infinity for the part of
    /// the class lying over poles.
    fn class_images(&self, m: &UniPoly) -> Vec<Place> {
        let mut out = Vec::new();
        let mut m = m.monic();
        let g = poly_gcd(&m, &self.den);
        if !g.is_constant() {
            out.push(Place::Infinity);
            m = m.div_exact(&g);
        }
        if m.is_constant() {
            return out;
        }
        let dm = m.degree();
        let pts: Vec<(Rat, Rat)> = (0..=dm as i64)
            .map(|v0| {
                let v0 = crate::exactnum::rat_i(v0);
                let f = &self.num - &self.den.scale(&v0);
                (v0, resultant(&m, &f))
            })
            .collect();
        let n = newton_interpolate(&pts);
        let nsf = squarefree_part(&n);
        out.extend(places_from_squarefree(&nsf));
        out
    }

    /// Fiber with local degrees; over an algebraic value class the preimage
    /// classes are flattened over all conjugate values, so local-degree
    /// sums are deg(A) * size(v).
    pub fn fiber(&self, v: &Place) -> Vec<(Place, usize)> {
        let mut parts = match self.fiber_uniform(v) {
            Ok(parts) => parts,
            Err(split) => {
                let m = match v {
                    Place::Class(m) => m,
                    _ => unreachable!("only class fibers can split"),
                };
                let rest = m.div_exact(&split).monic();
                let mut parts = self.fiber(&Place::class(split));
                parts.extend(self.fiber(&Place::class(rest)));
                parts
            }
        };
        parts.sort();
        parts
    }

    /// Fiber computation that reports a value-class split instead of
    /// merging, so callers can keep orbifold supports uniform. The error
    /// carries a proper monic factor of the class polynomial.
    fn fiber_uniform(&self, v: &Place) -> Result<Vec<(Place, usize)>, UniPoly> {
        let d = self.degree();
        match v {
            Place::Infinity => {
                let mut parts = if self.den.is_constant() {
                    Vec::new()
                } else {
                    places_from_poly(&self.den)
                };
                if self.num.degree() > self.den.degree() {
                    parts.push((Place::Infinity, self.num.degree() - self.den.degree()));
                }
                Ok(parts)
            }
            Place::Finite(r) => {
                let f = &self.num - &self.den.scale(r);
                let mut parts = if f.is_constant() {
                    Vec::new()
                } else {
                    places_from_poly(&f)
                };
                if d > f.degree() || f.is_constant() {
                    let drop = d - if f.is_zero() { 0 } else { f.degree() };
                    if drop > 0 {
                        parts.push((Place::Infinity, drop));
                    }
                }
                Ok(parts)
            }
            Place::Class(m) => {
                let s = m.degree();
                // Flattened fiber polynomial over the whole class:
                // N(z) = Q^s m(P/Q) = sum_i m_i P^i Q^{s-i}, of degree d*s
                // exactly (the class value is never rational, so the top
                // coefficient q_d^s m(p_d/q_d) cannot vanish, and no fiber
                // point sits at infinity). Its root multiplicities are the
                // local degrees, pooled over all conjugate values.
                let mut qpow = vec![UniPoly::one()];
                for _ in 0..s {
                    qpow.push(qpow.last().unwrap() * &self.den);
                }
                let mut n = UniPoly::constant(m.coeff(s));
                for i in (0..s).rev() {
                    n = &(&n * &self.num) + &qpow[s - i].scale(&m.coeff(i));
                }
                debug_assert_eq!(n.degree(), d * s);
                let mut parts = Vec::new();
                for (g, k) in squarefree_decomposition(&n).expect("nonzero fiber polynomial") {
                    let g = g.monic();
                    // Uniformity across the class: D(t) = Res_z(g, P - tQ) is
                    // the monic polynomial whose roots are the values under
                    // the local-degree-k points, with multiplicity the number
                    // of such points over each value. Uniform shape means
                    // D = m^(deg g / s); otherwise peeling copies of m off D
                    // exposes a proper factor of m over which the k-part of
                    // the fiber differs.
                    let pts: Vec<(Rat, Rat)> = (0..=g.degree() as i64)
                        .map(|t0| {
                            let t0 = crate::exactnum::rat_i(t0);
                            let f = &self.num - &self.den.scale(&t0);
                            (t0, resultant(&g, &f))
                        })
                        .collect();
                    let mut dk = newton_interpolate(&pts).monic();
                    while !dk.is_constant() {
                        let e = poly_gcd(&dk, m);
                        if e.degree() < s {
                            debug_assert!(!e.is_constant());
                            return Err(e);
                        }
                        dk = dk.div_exact(m);
                    }
                    for place in places_from_squarefree(&g) {
                        parts.push((place, k));
                    }
                }
                Ok(parts)
            }
        }
    }

    /// The image place of the point at infinity.
    fn value_at_infinity(&self) -> Place {
        match self.eval_inf() {
            None => Place::Infinity,
            Some(v) => Place::Finite(v),
        }
    }

    /// Branch data: every critical value with the full fiber over it,
    /// canonically ordered. Value classes are refined until the fiber shape
    /// is constant on each class.
    pub fn branch_data(&self) -> Vec<(Place, Vec<(Place, usize)>)> {
        if self.degree() <= 1 {
            return Vec::new();
        }
        let w = self.wronskian();
        let mut values: Vec<Place> = Vec::new();
        if !w.is_zero() {
            for (g, _) in squarefree_decomposition(&w).unwrap() {
                let mut rest = g.monic();
                for (r, _) in rational_roots(&g).unwrap() {
                    let lin = UniPoly::new(vec![-&r, Rat::one()]);
                    rest = rest.div_exact(&lin);
                    values.push(match self.eval(&r) {
                        Some(v) => Place::Finite(v),
                        None => Place::Infinity,
                    });
                }
                if !rest.is_constant() {
                    values.extend(self.class_images(&rest));
                }
            }
        }
        if self.local_degree(&Place::Infinity) >= 2 {
            values.push(self.value_at_infinity());
        }
        let mut atoms = gcd_free_refine(values);
        'restart: loop {
            let mut out = Vec::new();
            let mut split_info: Option<(Place, UniPoly)> = None;
            for v in &atoms {
                match self.fiber_uniform(v) {
                    Ok(parts) => out.push((v.clone(), parts)),
                    Err(split) => {
                        split_info = Some((v.clone(), split));
                        break;
                    }
                }
            }
            if let Some((v, split)) = split_info {
                let m = match &v {
                    Place::Class(m) => m.clone(),
                    _ => unreachable!(),
                };
                let rest = m.div_exact(&split).monic();
                atoms.retain(|a| *a != v);
                atoms.push(Place::class(split));
                atoms.push(Place::class(rest));
                atoms.sort();
                continue 'restart;
            }
            out.retain(|(_, parts)| parts.iter().any(|(_, k)| *k >= 2));
            out.sort_by_key(|(v, parts)| entry_sort_key(self.degree(), v, parts));
            return out;
        }
    }

    pub fn critical_values(&self) -> Vec<Place> {
        self.branch_data().into_iter().map(|(v, _)| v).collect()
    }

    pub fn passport(&self) -> Passport {
        let d = self.degree();
        let entries = self
            .branch_data()
            .into_iter()
            .map(|(v, parts)| PassportEntry {
                partition: partition_of(d, &v, &parts),
                value: v,
            })
            .collect();
        Passport { degree: d, entries }
    }
}

/// Local-degree partition of deg(A) over one critical value.
pub(crate) fn partition_of(d: usize, v: &Place, parts: &[(Place, usize)]) -> Vec<usize> {
    let s = v.size();
    let mut partition = Vec::new();
    for (p, k) in parts {
        let copies = p.size() / s;
        debug_assert_eq!(p.size() % s, 0, "fiber class size must split over the value class");
        partition.extend(std::iter::repeat(*k).take(copies));
    }
    partition.sort_unstable_by_key(|k| Reverse(*k));
    debug_assert_eq!(partition.iter().sum::<usize>(), d);
    partition
}

fn entry_sort_key(
    d: usize,
    v: &Place,
    parts: &[(Place, usize)],
) -> (Reverse<usize>, Reverse<Vec<usize>>, Place) {
    let partition = partition_of(d, v, parts);
    let nu = partition.iter().fold(1usize, |a, b| num::integer::lcm(a, *b));
    (Reverse(nu), Reverse(partition), v.clone())
}

fn root_multiplicity(f: &UniPoly, x: &Rat) -> usize {
    let lin = UniPoly::new(vec![-x, Rat::one()]);
    let mut g = f.clone();
    let mut m = 0;
    loop {
        let (q, r) = g.divrem(&lin);
        if !r.is_zero() {
            return m;
        }
        m += 1;
        g = q;
        if g.is_zero() {
            return m;
        }
    }
}

fn squarefree_part(p: &UniPoly) -> UniPoly {
    if p.is_constant() {
        return p.monic();
    }
    let g = poly_gcd(p, &p.derivative());
    p.div_exact(&g).monic()
}

/// Exact Newton-form interpolation through the given (x, y) points.
fn newton_interpolate(pts: &[(Rat, Rat)]) -> UniPoly {
    let n = pts.len();
    let mut coef: Vec<Rat> = pts.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let dx = &pts[i].0 - &pts[i - j].0;
            coef[i] = (&coef[i] - &coef[i - 1]) / dx;
        }
    }
    let mut poly = UniPoly::zero();
    for i in (0..n).rev() {
        let lin = UniPoly::new(vec![-&pts[i].0, Rat::one()]);
        poly = &(&poly * &lin) + &UniPoly::constant(coef[i].clone());
    }
    poly
}

/// Branch data over one critical value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassportEntry {
    pub value: Place,
    /// Local degrees over the value, sorted descending; sums to the degree.
    pub partition: Vec<usize>,
}

/// Full branch data of a map: one partition of the degree per critical
/// value, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Passport {
    pub degree: usize,
    pub entries: Vec<PassportEntry>,
}

impl Passport {
    /// The multiset of partitions (a Mobius-invariant), sorted.
    pub fn partition_multiset(&self) -> Vec<Vec<usize>> {
        let mut ps: Vec<Vec<usize>> = self.entries.iter().map(|e| e.partition.clone()).collect();
        ps.sort();
        ps
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.lc().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Display for Passport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let parts: Vec<String> = e.partition.iter().map(|k| k.to_string()).collect();
            write!(f, "{{{}}}@{}", parts.join(","), e.value)?;
        }
        Ok(())
    }
}

// keep an explicitly typed zero around for Int-based callers
#[allow(dead_code)]
fn _int_zero() -> Int {
    Int::zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_i};

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    fn map(num: &[i64], den: &[i64]) -> RationalMap {
        RationalMap::make_map(&p(num), &p(den)).unwrap()
    }

    #[test]
    fn make_map_reduces_common_factor() {
        // (z^2-1)/(z-1) = z+1
        let m = map(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(m, map(&[1, 1], &[1]));
        assert_eq!(m.degree(), 1);
    }

    #[test]
    fn make_map_canonical_scaling() {
        // (z/2) / (1/3) -> 3z/2 with integer coprime coefficients
        let m = RationalMap::make_map(
            &UniPoly::new(vec![rat_i(0), rat(1, 2)]),
            &UniPoly::constant(rat(1, 3)),
        )
        .unwrap();
        assert_eq!(m.num(), &p(&[0, 3]));
        assert_eq!(m.den(), &p(&[2]));
        // idempotence
        let again = RationalMap::make_map(m.num(), m.den()).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn make_map_zero_over_zero() {
        assert_eq!(
            RationalMap::make_map(&UniPoly::zero(), &UniPoly::zero()),
            Err(RatMapError::ZeroOverZero)
        );
    }

    #[test]
    fn one_over_z() {
        let m = map(&[1], &[0, 1]);
        assert_eq!(m.degree(), 1);
        assert_eq!(m.eval(&rat_i(2)), Some(rat(1, 2)));
        assert_eq!(m.eval(&rat_i(0)), None);
        assert_eq!(m.eval_inf(), Some(rat_i(0)));
    }

    #[test]
    fn compose_polynomials() {
        // z^2 after z+1 = z^2+2z+1
        let f = map(&[0, 0, 1], &[1]);
        let g = map(&[1, 1], &[1]);
        assert_eq!(RationalMap::compose(&f, &g), map(&[1, 2, 1], &[1]));
    }

    #[test]
    fn compose_degree_multiplies() {
        let f = map(&[1, 0, 1], &[0, 1]); // (z^2+1)/z
        let g = map(&[-1, 0, 2], &[1, 1]); // (2z^2-1)/(z+1)
        let c = RationalMap::compose(&f, &g);
        assert_eq!(c.degree(), 4);
    }

    #[test]
    fn local_degrees_of_square() {
        let sq = map(&[0, 0, 1], &[1]);
        assert_eq!(sq.local_degree(&Place::Finite(rat_i(0))), 2);
        assert_eq!(sq.local_degree(&Place::Finite(rat_i(3))), 1);
        assert_eq!(sq.local_degree(&Place::Infinity), 2);
    }

    #[test]
    fn fiber_of_chebyshev3_over_one() {
        // T3 = 4z^3 - 3z; fiber over 1 = {1 (simple), -1/2 (double)}
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let f = t3.fiber(&Place::Finite(rat_i(1)));
        assert_eq!(
            f,
            vec![(Place::Finite(rat(-1, 2)), 2), (Place::Finite(rat_i(1)), 1)]
                .into_iter()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn fiber_counts_infinity_degree_drop() {
        // (z^4+1)/(2z^2) over infinity: 0 with degree 2 and infinity with 2
        let dh = map(&[1, 0, 0, 0, 1], &[0, 0, 2]);
        let mut f = dh.fiber(&Place::Infinity);
        f.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(f, vec![(Place::Infinity, 2), (Place::Finite(rat_i(0)), 2)]);
    }

    #[test]
    fn critical_values_of_square_and_line() {
        let sq = map(&[0, 0, 1], &[1]);
        assert_eq!(
            sq.critical_values(),
            vec![Place::Infinity, Place::Finite(rat_i(0))]
        );
        assert!(map(&[1, 1], &[1]).critical_values().is_empty());
    }

    #[test]
    fn critical_values_of_chebyshev3() {
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let cv = t3.critical_values();
        assert_eq!(
            cv,
            vec![
                Place::Infinity,
                Place::Finite(rat_i(-1)),
                Place::Finite(rat_i(1))
            ]
        );
    }

    #[test]
    fn passport_of_cube_and_chebyshev3() {
        let cube = map(&[0, 0, 0, 1], &[1]);
        let pp = cube.passport();
        assert_eq!(pp.partition_multiset(), vec![vec![3], vec![3]]);
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let pp = t3.passport();
        assert_eq!(
            pp.partition_multiset(),
            vec![vec![2, 1], vec![2, 1], vec![3]]
        );
        // canonical order: highest fiber lcm first
        assert_eq!(pp.entries[0].value, Place::Infinity);
        assert_eq!(pp.entries[0].partition, vec![3]);
    }

    #[test]
    fn fiber_over_class_value() {
        // z^2 over the class z^2 - 2 (values +-sqrt(2)): preimages are the
        // roots of z^4 - 2, one flattened class of size 4, local degree 1
        let sq = map(&[0, 0, 1], &[1]);
        let f = sq.fiber(&Place::class(p(&[-2, 0, 1])));
        assert_eq!(f, vec![(Place::class(p(&[-2, 0, 0, 0, 1])), 1)]);
    }

    #[test]
    fn class_fiber_splits_on_shape_disagreement() {
        // doubling map of y^2 = x^3 - x: critical points z^4 - 6z^2 + 1 map
        // half to 1 and half to -1; branch data must refine the class
        let a = map(&[1, 0, 2, 0, 1], &[0, -4, 0, 4]);
        let bd = a.branch_data();
        let values: Vec<&Place> = bd.iter().map(|(v, _)| v).collect();
        assert_eq!(
            values,
            vec![
                &Place::Finite(rat_i(-1)),
                &Place::Finite(rat_i(0)),
                &Place::Finite(rat_i(1))
            ]
        );
        for (_, parts) in &bd {
            let total: usize = parts.iter().map(|(p, k)| p.size() * k).sum();
            assert_eq!(total, 4);
        }
    }

    #[test]
    fn mobius_conjugation_preserves_partitions() {
        let t3 = map(&[0, -3, 0, 4], &[1]);
        let left = Mobius::from_ints(2, 1, 1, 3);
        let right = Mobius::from_ints(0, 1, 1, 0);
        let conj = t3.mobius_conjugate(&left, &right);
        assert_eq!(conj.degree(), 3);
        assert_eq!(
            conj.passport().partition_multiset(),
            t3.passport().partition_multiset()
        );
        // round trip with the inverse pair restores the map
        let back = conj.mobius_conjugate(&left.inverse(), &right.inverse());
        assert_eq!(back, t3);
    }

    #[test]
    fn tetra_deg12_from_factors() {
        // -(1/64) z^3 (z^3-8)^3 / (z^3+1)^3 has degree 12, local degree 3
        // at infinity (numerator degree 12, denominator degree 9)
        let num = (&p(&[0, 1]).pow(3) * &p(&[-8, 0, 0, 1]).pow(3)).scale(&rat_i(-1));
        let den = p(&[1, 0, 0, 1]).pow(3).scale(&rat_i(64));
        let a = RationalMap::make_map(&num, &den).unwrap();
        assert_eq!(a.degree(), 12);
        assert_eq!(a.local_degree(&Place::Infinity), 3);
        // fiber over 1: six double points, the classes of z^6 + 20z^3 - 8
        let f = a.fiber(&Place::Finite(rat_i(1)));
        let total: usize = f.iter().map(|(p, k)| p.size() * k).sum();
        assert_eq!(total, 12);
        assert!(f.iter().all(|(_, k)| *k == 2));
        let mut prod = UniPoly::one();
        for (pl, _) in &f {
            match pl {
                Place::Class(c) => prod = &prod * c,
                _ => panic!("expected algebraic classes"),
            }
        }
        assert_eq!(prod, p(&[-8, 0, 0, 20, 0, 0, 1]).monic());
    }
}

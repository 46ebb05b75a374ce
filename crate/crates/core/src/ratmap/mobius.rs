//! Möbius transformations with integer entries in canonical form.

use super::map::RationalMap;
use crate::exactnum::{Int, Rat, UniPoly};
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// A point of the projective line as a pair (num : den), not both zero;
/// infinity is (1 : 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjPoint {
    pub num: Int,
    pub den: Int,
}

impl ProjPoint {
    pub fn from_rat(r: &Rat) -> Self {
        ProjPoint {
            num: r.numer().clone(),
            den: r.denom().clone(),
        }
    }

    pub fn infinity() -> Self {
        ProjPoint {
            num: Int::one(),
            den: Int::zero(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn to_rat(&self) -> Option<Rat> {
        if self.den.is_zero() {
            None
        } else {
            Some(Rat::new(self.num.clone(), self.den.clone()))
        }
    }

    /// Projective equality (cross multiplication).
    pub fn same(&self, other: &ProjPoint) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// z -> (az + b) / (cz + d), ad - bc != 0, entries coprime integers with the
/// first nonzero of (a, b, c, d) positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mobius {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

impl Mobius {
    pub fn new(a: Int, b: Int, c: Int, d: Int) -> Mobius {
        assert!(
            !(&a * &d - &b * &c).is_zero(),
            "Mobius transformation must be invertible"
        );
        let mut m = Mobius { a, b, c, d };
        m.canonicalize();
        m
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Mobius {
        Mobius::new(Int::from(a), Int::from(b), Int::from(c), Int::from(d))
    }

    pub fn identity() -> Mobius {
        Mobius::from_ints(1, 0, 0, 1)
    }

    fn canonicalize(&mut self) {
        let mut g = self.a.gcd(&self.b).gcd(&self.c).gcd(&self.d);
        let first = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|x| !x.is_zero())
            .unwrap();
        if first.is_negative() {
            g = -g;
        }
        self.a = &self.a / &g;
        self.b = &self.b / &g;
        self.c = &self.c / &g;
        self.d = &self.d / &g;
    }

    /// self after other: (self . other)(z) = self(other(z)).
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius::new(
            &self.a * &other.a + &self.b * &other.c,
            &self.a * &other.b + &self.b * &other.d,
            &self.c * &other.a + &self.d * &other.c,
            &self.c * &other.b + &self.d * &other.d,
        )
    }

    pub fn inverse(&self) -> Mobius {
        Mobius::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint {
            num: &self.a * &p.num + &self.b * &p.den,
            den: &self.c * &p.num + &self.d * &p.den,
        }
    }

    pub fn as_map(&self) -> RationalMap {
        let num = UniPoly::new(vec![Rat::from_integer(self.b.clone()), Rat::from_integer(self.a.clone())]);
        let den = UniPoly::new(vec![Rat::from_integer(self.d.clone()), Rat::from_integer(self.c.clone())]);
        RationalMap::make_map(&num, &den).expect("Mobius is a valid degree-1 map")
    }

    /// The transformation sending z1 -> 0, z2 -> 1, z3 -> inf (points must be
    /// pairwise distinct).
    pub fn to_standard_triple(z1: &ProjPoint, z2: &ProjPoint, z3: &ProjPoint) -> Mobius {
        // (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)) written projectively
        let k1 = &z2.num * &z3.den - &z3.num * &z2.den;
        let k2 = &z2.num * &z1.den - &z1.num * &z2.den;
        Mobius::new(
            &k1 * &z1.den,
            -(&k1 * &z1.num),
            &k2 * &z3.den,
            -(&k2 * &z3.num),
        )
    }

    /// The transformation sending src[i] -> dst[i] for three pairwise
    /// distinct source points and three pairwise distinct targets.
    pub fn through(src: &[ProjPoint; 3], dst: &[ProjPoint; 3]) -> Mobius {
        let ms = Mobius::to_standard_triple(&src[0], &src[1], &src[2]);
        let md = Mobius::to_standard_triple(&dst[0], &dst[1], &dst[2]);
        md.inverse().compose(&ms)
    }

    /// z -> k z as a Mobius map for a nonzero rational k.
    pub fn scaling(k: &Rat) -> Mobius {
        Mobius::new(k.numer().clone(), Int::zero(), Int::zero(), k.denom().clone())
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |x: &Int, y: &Int| {
            if y.is_negative() {
                format!("{}*z-{}", x, -y)
            } else {
                format!("{}*z+{}", x, y)
            }
        };
        write!(f, "({})/({})", line(&self.a, &self.b), line(&self.c, &self.d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i;

    fn pt(n: i64, d: i64) -> ProjPoint {
        ProjPoint {
            num: Int::from(n),
            den: Int::from(d),
        }
    }

    #[test]
    fn compose_and_invert() {
        let m = Mobius::from_ints(2, 1, 1, 1);
        let inv = m.inverse();
        assert_eq!(m.compose(&inv), Mobius::identity());
    }

    #[test]
    fn through_three_points() {
        // send (0, 1, inf) to (1, inf, 0)
        let src = [pt(0, 1), pt(1, 1), pt(1, 0)];
        let dst = [pt(1, 1), pt(1, 0), pt(0, 1)];
        let m = Mobius::through(&src, &dst);
        for (s, d) in src.iter().zip(dst.iter()) {
            assert!(m.apply(s).same(d));
        }
    }

    #[test]
    fn through_with_fractions() {
        let src = [pt(1, 2), pt(-3, 1), pt(1, 0)];
        let dst = [pt(0, 1), pt(5, 3), pt(7, 1)];
        let m = Mobius::through(&src, &dst);
        for (s, d) in src.iter().zip(dst.iter()) {
            assert!(m.apply(s).same(d));
        }
    }

    #[test]
    fn canonical_form() {
        let m = Mobius::new(Int::from(-2), Int::from(0), Int::from(0), Int::from(-4));
        assert_eq!(m, Mobius::from_ints(1, 0, 0, 2));
        assert_eq!(m.as_map().degree(), 1);
        let _ = rat_i(0);
    }
}

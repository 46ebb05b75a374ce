//! Dense univariate polynomials over the rationals.
//!
//! Everything downstream (fibers, critical values, resolvents) reduces to a
//! handful of exact primitives implemented here: gcd, Yun's squarefree
//! decomposition, rational root extraction and resultants. The gcd and the
//! resultant run on primitive integer coefficient lists via subresultant
//! pseudo-remainder sequences, which keeps intermediate coefficient growth
//! polynomial instead of the exponential blowup of naive fraction Euclid.

use super::{ExactNumError, Int, Rat};

use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense univariate polynomial, coefficients lowest degree first, trailing
/// zeros stripped; the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The variable z.
    pub fn var() -> Self {
        Self::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| super::rat_i(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; by convention 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
            .collect();
        UniPoly::new(cs)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Rat::one() / self.lc();
        self.scale(&inv)
    }

    /// Multiplication by z^k.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut cs = vec![Rat::zero(); k];
        cs.extend_from_slice(&self.coeffs);
        UniPoly::new(cs)
    }

    pub fn pow(&self, mut n: usize) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.degree() < d.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let lc_inv = Rat::one() / d.lc();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd || (dd == 0 && !rem.is_empty()) {
            let k = rem.len() - dd - 1;
            let q = rem.last().unwrap() * &lc_inv;
            for i in 0..dd {
                let t = &d.coeffs[i] * &q;
                rem[k + i] -= t;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
            if rem.len() <= dd && dd > 0 {
                break;
            }
            if dd == 0 && rem.is_empty() {
                break;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// p(inner): substitution of one polynomial into another.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Clears denominators and content: returns `(ints, scale)` with
    /// `self = scale * ints`, `ints` a primitive integer list (content 1,
    /// sign of the leading coefficient preserved) and `scale > 0`.
    pub fn primitive_int(&self) -> (Vec<Int>, Rat) {
        if self.is_zero() {
            return (Vec::new(), Rat::one());
        }
        let mut l = Int::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let nums: Vec<Int> = self.coeffs.iter().map(|c| c.numer() * &l / c.denom()).collect();
        let mut g = Int::zero();
        for n in &nums {
            g = g.gcd(n);
        }
        let ints: Vec<Int> = nums.iter().map(|n| n / &g).collect();
        (ints, Rat::new(g, l))
    }

    pub fn from_int_coeffs(cs: &[Int]) -> UniPoly {
        UniPoly::new(cs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Total order used for canonical place sorting: by degree, then by
    /// coefficients from the highest power down.
    pub fn cmp_canonical(&self, other: &UniPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl<'a> Add for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::new(cs)
    }
}

impl<'a> Sub for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::new(cs)
    }
}

impl<'a> Mul for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut cs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        UniPoly::new(cs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "z")?;
                if i > 1 {
                    write!(f, "^{}", i)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Integer-level helpers (primitive pseudo-remainder sequences).
// ---------------------------------------------------------------------------

fn int_deg(p: &[Int]) -> usize {
    p.len().saturating_sub(1)
}

fn int_trim(p: &mut Vec<Int>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn int_content(p: &[Int]) -> Int {
    let mut g = Int::zero();
    for c in p {
        g = g.gcd(c);
    }
    g
}

fn int_primitive_part(p: &[Int]) -> Vec<Int> {
    let g = int_content(p);
    if g.is_zero() {
        return Vec::new();
    }
    p.iter().map(|c| c / &g).collect()
}

fn int_scale(p: &[Int], c: &Int) -> Vec<Int> {
    p.iter().map(|a| a * c).collect()
}

fn int_div_scalar(p: &[Int], c: &Int) -> Vec<Int> {
    p.iter().map(|a| a / c).collect()
}

/// Pseudo-remainder: remainder of lc(g)^(deg f - deg g + 1) * f divided by g,
/// computed entirely over the integers. Requires deg f >= deg g, g nonzero.
fn int_prem(f: &[Int], g: &[Int]) -> Vec<Int> {
    let df = int_deg(f);
    let dg = int_deg(g);
    let lg = g.last().unwrap().clone();
    let mut r: Vec<Int> = f.to_vec();
    let mut steps = df - dg + 1;
    while !r.is_empty() && int_deg(&r) >= dg && !(dg == 0 && r.is_empty()) {
        if r.len() < g.len() {
            break;
        }
        let k = r.len() - g.len();
        let lead = r.last().unwrap().clone();
        r = int_scale(&r, &lg);
        for (i, gc) in g.iter().enumerate() {
            r[k + i] -= gc * &lead;
        }
        int_trim(&mut r);
        steps -= 1;
        if dg == 0 {
            // dividing by a constant: remainder is zero after one step
            r.clear();
            break;
        }
    }
    // normalize the power of lg so the result is exactly prem(f, g)
    for _ in 0..steps {
        r = int_scale(&r, &lg);
    }
    r
}

/// Primitive gcd of integer polynomial coefficient lists via the
/// subresultant pseudo-remainder sequence.
fn int_gcd(f: &[Int], g: &[Int]) -> Vec<Int> {
    let mut a = int_primitive_part(f);
    let mut b = int_primitive_part(g);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if int_deg(&a) < int_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut gprev = Int::one();
    let mut h = Int::one();
    loop {
        let delta = int_deg(&a) - int_deg(&b);
        let r = int_prem(&a, &b);
        if r.is_empty() {
            return int_primitive_part(&b);
        }
        if int_deg(&b) == 0 {
            return vec![Int::one()];
        }
        a = b;
        let denom = &gprev * pow_int(&h, delta as u32);
        b = int_div_scalar(&r, &denom);
        gprev = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            pow_int(&gprev, delta as u32) / pow_int(&h, (delta - 1) as u32)
        };
        if int_deg(&b) == 0 {
            return vec![Int::one()];
        }
    }
}

fn pow_int(b: &Int, e: u32) -> Int {
    num::pow::pow(b.clone(), e as usize)
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_zero() && b.is_zero() {
        return UniPoly::zero();
    }
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (ai, _) = a.primitive_int();
    let (bi, _) = b.primitive_int();
    UniPoly::from_int_coeffs(&int_gcd(&ai, &bi)).monic()
}

/// Extended gcd over the rationals: returns (g, s, t) with g monic,
/// s*a + t*b = g. Used for inversion in residue rings.
pub fn poly_extended_gcd(a: &UniPoly, b: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = UniPoly::one();
    let mut s1 = UniPoly::zero();
    let mut t0 = UniPoly::zero();
    let mut t1 = UniPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = &s0 - &(&q * &s1);
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if r0.is_zero() {
        return (UniPoly::zero(), UniPoly::zero(), UniPoly::zero());
    }
    let inv = Rat::one() / r0.lc();
    (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
}

/// Yun's squarefree decomposition: returns pairwise-coprime squarefree monic
/// parts `g_k` with `a = lc(a) * prod g_k^k`. Parts with trivial factor 1 are
/// omitted.
pub fn squarefree_decomposition(a: &UniPoly) -> Result<Vec<(UniPoly, usize)>, ExactNumError> {
    if a.is_zero() {
        return Err(ExactNumError::ZeroPolynomial);
    }
    let a = a.monic();
    let mut out = Vec::new();
    if a.is_constant() {
        return Ok(out);
    }
    let da = a.derivative();
    let g = poly_gcd(&a, &da);
    let mut b = a.div_exact(&g);
    let mut d = &da.div_exact(&g) - &b.derivative();
    let mut i = 1usize;
    while !b.is_constant() {
        let p = poly_gcd(&b, &d);
        if !p.is_constant() {
            out.push((p.clone(), i));
        }
        b = b.div_exact(&p);
        d = &d.div_exact(&p) - &b.derivative();
        i += 1;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Rational roots.
// ---------------------------------------------------------------------------

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn gf_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn gf_reduce(ints: &[Int], p: u64) -> Vec<u64> {
    use num::ToPrimitive;
    let pi = Int::from(p);
    let mut out: Vec<u64> = ints
        .iter()
        .map(|c| c.mod_floor(&pi).to_u64().unwrap())
        .collect();
    gf_trim(&mut out);
    out
}

fn gf_powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn gf_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = gf_powmod(b[db], p - 2, p);
    while r.len() > db {
        let da = r.len() - 1;
        let c = ((r[da] as u128 * inv as u128) % p as u128) as u64;
        for i in 0..=db {
            let sub = ((c as u128 * b[i] as u128) % p as u128) as u64;
            let idx = da - db + i;
            r[idx] = (r[idx] + p - sub) % p;
        }
        gf_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// True iff the polynomial keeps full degree and stays squarefree mod p.
fn squarefree_mod_p(ints: &[Int], p: u64) -> bool {
    let f = gf_reduce(ints, p);
    if f.len() != ints.len() {
        return false;
    }
    let mut fd: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ((i as u128 * *c as u128) % p as u128) as u64)
        .collect();
    gf_trim(&mut fd);
    if fd.is_empty() {
        return false;
    }
    let (mut a, mut b) = (f, fd);
    loop {
        if b.is_empty() {
            return a.len() == 1;
        }
        if b.len() == 1 {
            return true;
        }
        let r = gf_rem(&a, &b, p);
        a = b;
        b = r;
    }
}

fn roots_mod_p(ints: &[Int], p: u64) -> Vec<u64> {
    let cs = gf_reduce(ints, p);
    let mut out = Vec::new();
    for r in 0..p {
        let mut acc = 0u64;
        for c in cs.iter().rev() {
            acc = ((acc as u128 * r as u128 + *c as u128) % p as u128) as u64;
        }
        if acc == 0 {
            out.push(r);
        }
    }
    out
}

fn eval_int_mod(ints: &[Int], x: &Int, m: &Int) -> Int {
    let mut acc = Int::zero();
    for c in ints.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn mod_inverse(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Lifts a simple root mod p to a root modulo a power of p exceeding
/// `target` by Newton iteration; returns the lifted root and the modulus.
fn lift_root(ints: &[Int], der: &[Int], p: u64, r0: u64, target: &Int) -> Option<(Int, Int)> {
    let mut modulus = Int::from(p);
    let mut r = Int::from(r0);
    while modulus <= *target {
        modulus = &modulus * &modulus;
        let fr = eval_int_mod(ints, &r, &modulus);
        let dr = eval_int_mod(der, &r, &modulus);
        let inv = mod_inverse(&dr, &modulus)?;
        r = (&r - fr * inv).mod_floor(&modulus);
    }
    Some((r, modulus))
}

/// Recovers u/v from its residue mod m when |u| <= num_bound and
/// |v| <= den_bound (unique when m > 2 * num_bound * den_bound).
fn rational_reconstruct(r: &Int, m: &Int, num_bound: &Int, den_bound: &Int) -> Option<Rat> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (Int::zero(), Int::one());
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
        if r1.is_zero() {
            return None;
        }
    }
    if t1.is_zero() || t1.abs() > *den_bound {
        return None;
    }
    Some(Rat::new(r1, t1))
}

/// All rational roots with multiplicities, sorted ascending by root.
///
/// Candidates are found p-adically: roots of the squarefree part modulo a
/// suitable small prime are Hensel-lifted past twice the product of the
/// classical numerator and denominator bounds (constant and leading
/// coefficient) and recovered by rational reconstruction; each candidate is
/// then verified exactly. This stays polynomial in the coefficient size,
/// unlike enumerating divisor pairs of the extreme coefficients.
pub fn rational_roots(a: &UniPoly) -> Result<Vec<(Rat, usize)>, ExactNumError> {
    if a.is_zero() {
        return Err(ExactNumError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    // multiplicity of the root 0
    let k = a.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut q = UniPoly::new(a.coeffs()[k..].to_vec());
    if k > 0 {
        out.push((Rat::zero(), k));
    }
    if q.is_constant() {
        out.sort_by(|x, y| x.0.cmp(&y.0));
        return Ok(out);
    }
    let sf = q.div_exact(&poly_gcd(&q, &q.derivative()));
    let (ints, _) = sf.primitive_int();
    let num_bound = ints[0].abs();
    let den_bound = ints.last().unwrap().abs();
    let target = Int::from(2) * &num_bound * &den_bound;
    let mut p = 10007u64;
    while !(is_small_prime(p) && squarefree_mod_p(&ints, p)) {
        p += 2;
    }
    let der: Vec<Int> = ints
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| Int::from(i as i64) * c)
        .collect();
    let mut roots = Vec::new();
    for r0 in roots_mod_p(&ints, p) {
        let Some((lifted, modulus)) = lift_root(&ints, &der, p, r0, &target) else {
            continue;
        };
        let Some(cand) = rational_reconstruct(&lifted, &modulus, &num_bound, &den_bound)
        else {
            continue;
        };
        if sf.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    for r in roots {
        let lin = UniPoly::new(vec![-&r, Rat::one()]);
        let mut mult = 0usize;
        loop {
            let (quot, rem) = q.divrem(&lin);
            if !rem.is_zero() {
                break;
            }
            q = quot;
            mult += 1;
            if q.is_constant() {
                break;
            }
        }
        if mult > 0 {
            out.push((r, mult));
        }
        if q.is_constant() {
            break;
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

// ---------------------------------------------------------------------------
// Resultants.
// ---------------------------------------------------------------------------

/// Resultant of two integer polynomials via the subresultant algorithm.
fn int_resultant(f: &[Int], g: &[Int]) -> Int {
    if f.is_empty() || g.is_empty() {
        return Int::zero();
    }
    let (mut a, mut b);
    let mut sign = 1i32;
    if int_deg(f) < int_deg(g) {
        if int_deg(f) % 2 == 1 && int_deg(g) % 2 == 1 {
            sign = -sign;
        }
        a = g.to_vec();
        b = f.to_vec();
    } else {
        a = f.to_vec();
        b = g.to_vec();
    }
    if int_deg(&b) == 0 {
        let s = pow_int(&b[0], int_deg(&a) as u32);
        return if sign < 0 { -s } else { s };
    }
    let ca = int_content(&a);
    let cb = int_content(&b);
    let mut t = pow_int(&ca, int_deg(&b) as u32) * pow_int(&cb, int_deg(&a) as u32);
    if sign < 0 {
        t = -t;
    }
    a = int_div_scalar(&a, &ca);
    b = int_div_scalar(&b, &cb);
    let mut g1 = Int::one();
    let mut h = Int::one();
    loop {
        let da = int_deg(&a);
        let db = int_deg(&b);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            t = -t;
        }
        let r = int_prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Int::zero();
        }
        let denom = &g1 * pow_int(&h, delta as u32);
        b = int_div_scalar(&r, &denom);
        g1 = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            pow_int(&g1, delta as u32) / pow_int(&h, (delta - 1) as u32)
        };
        if int_deg(&b) == 0 {
            let da = int_deg(&a);
            let hfin = pow_int(&b[0], da as u32) / pow_int(&h, (da - 1) as u32);
            return t * hfin;
        }
    }
}

/// Resultant over the rationals. Res(a, b) = lc(a)^deg b * prod b(alpha_i)
/// over the roots of a. Returns 0 if either argument is zero.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    if a.is_constant() && b.is_constant() {
        return Rat::one();
    }
    let (ai, sa) = a.primitive_int();
    let (bi, sb) = b.primitive_int();
    let r = int_resultant(&ai, &bi);
    let scale = num::pow::pow(sa, b.degree()) * num::pow::pow(sb, a.degree());
    Rat::from_integer(r) * scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_i};

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::from_ints(cs)
    }

    #[test]
    fn gcd_shared_linear_factor() {
        // gcd(z^2 - 1, z^3 - 1) = z - 1
        let g = poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(poly_gcd(&p(&[0, 1]), &p(&[1, 1])), UniPoly::one());
        assert_eq!(poly_gcd(&UniPoly::zero(), &UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn gcd_square_against_derivative() {
        // s = z^6 + 20z^3 - 8 is squarefree; gcd(s^2, (s^2)') = s
        let s = p(&[-8, 0, 0, 20, 0, 0, 1]);
        assert_eq!(poly_gcd(&s, &s.derivative()), UniPoly::one());
        let sq = &s * &s;
        assert_eq!(poly_gcd(&sq, &sq.derivative()), s.monic());
    }

    #[test]
    fn squarefree_basic() {
        // z^3 + 2z^2 + z = z (z+1)^2
        let d = squarefree_decomposition(&p(&[0, 1, 2, 1])).unwrap();
        assert_eq!(d, vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2)]);
        let d = squarefree_decomposition(&p(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(d, vec![(p(&[0, 1]), 4)]);
    }

    #[test]
    fn squarefree_of_squared_sextic() {
        let s = p(&[-8, 0, 0, 20, 0, 0, 1]);
        let d = squarefree_decomposition(&(&s * &s)).unwrap();
        assert_eq!(d, vec![(s, 2)]);
    }

    #[test]
    fn squarefree_zero_rejected() {
        assert_eq!(
            squarefree_decomposition(&UniPoly::zero()),
            Err(ExactNumError::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_roots_basic() {
        let r = rational_roots(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(r, vec![(rat_i(-1), 1), (rat_i(1), 1)]);
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // z^3 (z-8)^3 expanded
        let f = p(&[0, 1]).pow(3);
        let g = p(&[-8, 1]).pow(3);
        let r = rational_roots(&(&f * &g)).unwrap();
        assert_eq!(r, vec![(rat_i(0), 3), (rat_i(8), 3)]);
    }

    #[test]
    fn rational_roots_fractional() {
        // (2z - 1)(3z + 5)
        let f = &p(&[-1, 2]) * &p(&[5, 3]);
        let r = rational_roots(&f).unwrap();
        assert_eq!(r, vec![(rat(-5, 3), 1), (rat(1, 2), 1)]);
    }

    #[test]
    fn divrem_roundtrip() {
        let a = p(&[1, 2, 3, 4, 5]);
        let b = p(&[7, 0, 2]);
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn resultant_common_root_vanishes() {
        // z-1 and z^2-1 share the root 1
        assert!(resultant(&p(&[-1, 1]), &p(&[-1, 0, 1])).is_zero());
        // res(z^2+1, z^2-1) = 4
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[-1, 0, 1])), rat_i(4));
    }

    #[test]
    fn resultant_product_of_values() {
        // monic a: res(a, b) = prod of b over roots of a.
        // a = (z-2)(z+3), b = z^2 + 1 -> b(2) * b(-3) = 5 * 10 = 50
        let a = &p(&[-2, 1]) * &p(&[3, 1]);
        assert_eq!(resultant(&a, &p(&[1, 0, 1])), rat_i(50));
        // swap: res(b, a) = (-1)^(2*2) lc(b)^2 ... = same here
        assert_eq!(resultant(&p(&[1, 0, 1]), &a), rat_i(50));
    }

    #[test]
    fn resultant_scaling_laws() {
        let a = p(&[1, 4, 0, 2]);
        let b = p(&[3, -1, 5]);
        let r = resultant(&a, &b);
        assert_eq!(resultant(&a.scale(&rat_i(3)), &b), r.clone() * rat_i(9));
        assert_eq!(resultant(&a, &b.scale(&rat_i(-2))), r * rat_i(-8));
    }

    #[test]
    fn compose_and_pow() {
        // (z^2)(z+1) = z^2 + 2z + 1
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[1, 1])), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
    }

    #[test]
    fn extended_gcd_bezout() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 0, 0, 1]);
        let (g, s, t) = poly_extended_gcd(&a, &b);
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }
}

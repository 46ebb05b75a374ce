//! Command-line front end: parses rational-function expressions, runs the
//! classification pipeline, and renders exact, deterministic text or JSON
//! reports. Also hosts the built-in identity verification suite.

pub mod identities;

use crate::classify::{
    catalog, catalog_match, genus_class, is_lattes, parametric_entry, zero_chi_analysis,
    CatalogEntry, CatalogMatch, ClassifyError, CoveringWitness, Family, GenusClass,
};
use crate::exactnum::{Int, Rat, UniPoly};
use crate::orbifold::{ramification_orbifolds, Orbifold, Signature};
use crate::ratmap::{Mobius, Passport, Place, RationalMap};
use num::ToPrimitive;
use serde_json::{json, Value};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("division by a constant zero subexpression")]
    DivisionByZeroConstant,
    #[error("exponent is not an integer constant")]
    NonIntegerExponent,
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
/// 3 internal invariant violation.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

// ---------------------------------------------------------------------------
// expression parsing

/// Syntax tree for rational-function expressions in the variable z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(Int),
    Z,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    /// Composition `f . g`, outermost first.
    Compose(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Int),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Dot,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '.' => Tok::Dot,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'z' => Tok::Z,
            _ if c.is_ascii_digit() => {
                let start = i;
                let mut digits = String::new();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    digits.push(chars[i]);
                    i += 1;
                }
                out.push((start, Tok::Int(digits.parse().unwrap())));
                continue;
            }
            _ => {
                return Err(CliError::SyntaxError {
                    pos: i,
                    msg: format!("unexpected character '{}'", c),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        self.i += 1;
        t
    }

    fn err(&self, msg: &str) -> CliError {
        CliError::SyntaxError {
            pos: self.pos(),
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), CliError> {
        if self.peek() == Some(t) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    // composition := sum ('.' sum)*, outermost first
    fn composition(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.sum()?;
        while self.peek() == Some(&Tok::Dot) {
            self.i += 1;
            let rhs = self.sum()?;
            acc = Expr::Compose(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, CliError> {
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.i += 1;
            let exp = self.factor()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr, CliError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let Some(Tok::Int(n)) = self.bump() else { unreachable!() };
                Ok(Expr::Int(n))
            }
            Some(Tok::Z) => {
                self.i += 1;
                Ok(Expr::Z)
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let inner = self.composition()?;
                self.expect(&Tok::RParen, "expected ')'")?;
                Ok(inner)
            }
            _ => Err(self.err("expected a rational literal, 'z', or '('")),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, CliError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        end: src.chars().count(),
    };
    let e = p.composition()?;
    if p.i != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Lowers an expression to its canonical rational map.
pub fn lower(e: &Expr) -> Result<RationalMap, CliError> {
    match e {
        Expr::Int(n) => Ok(RationalMap::constant(&Rat::from_integer(n.clone()))),
        Expr::Z => Ok(RationalMap::var()),
        Expr::Neg(x) => Ok(lower(x)?.neg()),
        Expr::Add(x, y) => Ok(lower(x)?.add(&lower(y)?)),
        Expr::Sub(x, y) => Ok(lower(x)?.sub(&lower(y)?)),
        Expr::Mul(x, y) => Ok(lower(x)?.mul(&lower(y)?)),
        Expr::Div(x, y) => lower(x)?
            .div(&lower(y)?)
            .ok_or(CliError::DivisionByZeroConstant),
        Expr::Pow(b, exp) => {
            let val = lower(exp)?;
            if !val.is_constant() {
                return Err(CliError::NonIntegerExponent);
            }
            let c = val.num().coeff(0) / val.den().coeff(0);
            if !c.is_integer() {
                return Err(CliError::NonIntegerExponent);
            }
            let k = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| CliError::BadParameter("exponent out of range".into()))?;
            lower(b)?.powi(k).ok_or(CliError::DivisionByZeroConstant)
        }
        Expr::Compose(f, g) => {
            let outer = lower(f)?;
            let inner = lower(g)?;
            if inner.is_constant() {
                return Err(CliError::BadParameter(
                    "composition with a constant inner map".into(),
                ));
            }
            Ok(RationalMap::compose(&outer, &inner))
        }
    }
}

pub fn parse_map(src: &str) -> Result<RationalMap, CliError> {
    lower(&parse_expr(src)?)
}

/// Resolves the map from either an expression string or explicit
/// lowest-degree-first integer coefficient lists.
pub fn map_from_args(
    expr: Option<&str>,
    num: Option<&[i64]>,
    den: Option<&[i64]>,
) -> Result<RationalMap, CliError> {
    match (expr, num) {
        (Some(_), Some(_)) => Err(CliError::BadParameter(
            "give either an expression or --num/--den, not both".into(),
        )),
        (Some(s), None) => {
            if den.is_some() {
                return Err(CliError::BadParameter(
                    "--den requires --num instead of an expression".into(),
                ));
            }
            parse_map(s)
        }
        (None, Some(n)) => {
            let num_poly = UniPoly::from_ints(n);
            let den_poly = UniPoly::from_ints(den.unwrap_or(&[1]));
            RationalMap::make_map(&num_poly, &den_poly)
                .map_err(|e| CliError::BadParameter(e.to_string()))
        }
        (None, None) => Err(CliError::BadParameter(
            "an expression or --num is required".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// reports

/// Everything the classify pipeline determines about one map.
pub struct Report {
    pub map: RationalMap,
    pub degree: usize,
    pub passport: Passport,
    pub signature: Signature,
    pub chi: Rat,
    pub genus: GenusClass,
    pub matches: Vec<CatalogMatch>,
    pub witness: Option<CoveringWitness>,
    pub lattes: Option<Orbifold>,
}

/// Runs the full pipeline. The catalog is complete up to Mobius equivalence
/// over the complex numbers, but the equivalence search only finds witnesses
/// with rational coefficients, so a genus-zero closure may legitimately
/// report no matches (e.g. the elliptic doubling map, which is equivalent to
/// a dihedral quotient only over an imaginary quadratic field).
pub fn build_report(map: &RationalMap) -> Result<Report, (String, i32)> {
    if map.is_constant() {
        return Err(("cannot classify a constant map".into(), EXIT_USAGE));
    }
    let degree = map.degree();
    let passport = map.passport();
    let (signature, chi) = if degree >= 2 {
        let (_, o2) = ramification_orbifolds(map);
        (o2.signature(), o2.euler_char())
    } else {
        (Vec::new(), Rat::from_integer(2.into()))
    };
    let genus = genus_class(map);
    let matches = if genus == GenusClass::Zero && degree >= 2 {
        match catalog_match(map) {
            Ok(ms) => ms,
            Err(ClassifyError::Unsupported | ClassifyError::NoMatch) => Vec::new(),
            Err(e) => return Err((format!("catalog lookup failed: {}", e), EXIT_INTERNAL)),
        }
    } else {
        Vec::new()
    };
    let (witness, lattes) = if degree >= 2 {
        (zero_chi_analysis(map), is_lattes(map))
    } else {
        (None, None)
    };
    Ok(Report {
        map: map.clone(),
        degree,
        passport,
        signature,
        chi,
        genus,
        matches,
        witness,
        lattes,
    })
}

/// Assigns stable JSON encodings to places; algebraic classes get an index
/// in order of first appearance within one report.
#[derive(Default)]
pub struct PlaceEncoder {
    classes: Vec<UniPoly>,
}

impl PlaceEncoder {
    pub fn encode(&mut self, p: &Place) -> Value {
        match p {
            Place::Infinity => json!("inf"),
            Place::Finite(r) => json!(r.to_string()),
            Place::Class(m) => {
                let idx = match self.classes.iter().position(|q| q == m) {
                    Some(i) => i,
                    None => {
                        self.classes.push(m.clone());
                        self.classes.len() - 1
                    }
                };
                let coeffs: Vec<String> = m.coeffs().iter().map(|c| c.to_string()).collect();
                json!({"minpoly": coeffs, "index": idx})
            }
        }
    }
}

fn mobius_json(m: &Mobius) -> Value {
    json!([
        m.a.to_string(),
        m.b.to_string(),
        m.c.to_string(),
        m.d.to_string()
    ])
}

fn orbifold_json(o: &Orbifold, enc: &mut PlaceEncoder) -> Value {
    let support: Vec<Value> = o
        .support()
        .iter()
        .map(|(p, nu)| json!([enc.encode(p), nu]))
        .collect();
    json!({
        "support": support,
        "signature": o.signature(),
        "chi": o.euler_char().to_string(),
    })
}

fn match_json(m: &CatalogMatch) -> Value {
    let mut v = json!({
        "family": m.entry.family.to_string(),
        "mu_left": mobius_json(&m.mu_left),
        "mu_right": mobius_json(&m.mu_right),
    });
    if let Some(n) = m.entry.n {
        v["n"] = json!(n);
    }
    v
}

pub fn report_json(r: &Report) -> Value {
    let mut enc = PlaceEncoder::default();
    let passport: Vec<Value> = r
        .passport
        .entries
        .iter()
        .map(|e| json!([enc.encode(&e.value), e.partition]))
        .collect();
    let witness = match &r.witness {
        Some(w) => json!({
            "o1": orbifold_json(&w.o1, &mut enc),
            "o2": orbifold_json(&w.o2, &mut enc),
            "case": w.case.to_string(),
        }),
        None => Value::Null,
    };
    let lattes = json!({
        "flag": r.lattes.is_some(),
        "orbifold": r.lattes.as_ref().map_or(Value::Null, |o| orbifold_json(o, &mut enc)),
    });
    json!({
        "degree": r.degree,
        "passport": passport,
        "signature": r.signature,
        "chi": r.chi.to_string(),
        "genus": r.genus.to_string(),
        "matches": r.matches.iter().map(match_json).collect::<Vec<_>>(),
        "zero_chi_witness": witness,
        "lattes": lattes,
    })
}

fn signature_str(sig: &Signature) -> String {
    let parts: Vec<String> = sig.iter().map(|n| n.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn report_text(r: &Report, quiet: bool) -> String {
    if quiet {
        return format!("genus: {}\n", r.genus);
    }
    let mut out = String::new();
    let _ = writeln!(out, "map: {}", r.map);
    let _ = writeln!(out, "degree: {}", r.degree);
    let _ = writeln!(out, "passport: {}", r.passport);
    let _ = writeln!(out, "signature: {}", signature_str(&r.signature));
    let _ = writeln!(out, "chi: {}", r.chi);
    let _ = writeln!(out, "genus: {}", r.genus);
    if r.matches.is_empty() {
        let _ = writeln!(out, "matches: none");
    } else {
        for m in &r.matches {
            let _ = writeln!(
                out,
                "match: {} via mu_left = {}, mu_right = {}",
                m.entry.name(),
                m.mu_left,
                m.mu_right
            );
        }
    }
    match &r.witness {
        Some(w) => {
            let _ = writeln!(out, "zero-chi witness ({}): o1: {}; o2: {}", w.case, w.o1, w.o2);
        }
        None => {
            let _ = writeln!(out, "zero-chi witness: none");
        }
    }
    match &r.lattes {
        Some(o) => {
            let _ = writeln!(out, "lattes: true; orbifold: {}", o);
        }
        None => {
            let _ = writeln!(out, "lattes: false");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// commands (each returns printable output and an exit code)

pub fn cmd_classify(map: &RationalMap, as_json: bool, quiet: bool) -> (String, i32) {
    match build_report(map) {
        Ok(r) => {
            let out = if as_json {
                format!("{}\n", report_json(&r))
            } else {
                report_text(&r, quiet)
            };
            (out, EXIT_OK)
        }
        Err((msg, code)) => (format!("error: {}\n", msg), code),
    }
}

pub fn cmd_passport(map: &RationalMap, as_json: bool) -> (String, i32) {
    let p = map.passport();
    if as_json {
        let mut enc = PlaceEncoder::default();
        let entries: Vec<Value> = p
            .entries
            .iter()
            .map(|e| json!([enc.encode(&e.value), e.partition]))
            .collect();
        (
            format!("{}\n", json!({"degree": p.degree, "passport": entries})),
            EXIT_OK,
        )
    } else {
        (format!("degree {}: {}\n", p.degree, p), EXIT_OK)
    }
}

pub fn cmd_mu_equiv(a: &RationalMap, b: &RationalMap, as_json: bool) -> (String, i32) {
    match crate::classify::mu_equivalent(a, b) {
        Ok(Some((l, r))) => {
            let out = if as_json {
                format!(
                    "{}\n",
                    json!({"equivalent": true, "mu_left": mobius_json(&l), "mu_right": mobius_json(&r)})
                )
            } else {
                format!("equivalent: mu_left = {}, mu_right = {}\n", l, r)
            };
            (out, EXIT_OK)
        }
        Ok(None) => {
            let out = if as_json {
                format!("{}\n", json!({"equivalent": false}))
            } else {
                "not equivalent\n".to_string()
            };
            (out, EXIT_VERIFY)
        }
        Err(e) => (format!("undecided: {}\n", e), EXIT_VERIFY),
    }
}

pub fn cmd_compose(maps: &[RationalMap], as_json: bool) -> (String, i32) {
    if maps.is_empty() {
        return ("error: nothing to compose\n".to_string(), EXIT_USAGE);
    }
    let mut acc = maps[0].clone();
    for m in &maps[1..] {
        if m.is_constant() {
            return (
                "error: composition with a constant inner map\n".to_string(),
                EXIT_USAGE,
            );
        }
        acc = RationalMap::compose(&acc, m);
    }
    if as_json {
        (
            format!("{}\n", json!({"map": acc.to_string(), "degree": acc.degree()})),
            EXIT_OK,
        )
    } else {
        (format!("{}\n", acc), EXIT_OK)
    }
}

fn entry_json(e: &CatalogEntry) -> Value {
    let num: Vec<String> = e.map.num().coeffs().iter().map(|c| c.to_string()).collect();
    let den: Vec<String> = e.map.den().coeffs().iter().map(|c| c.to_string()).collect();
    let mut v = json!({
        "family": e.family.to_string(),
        "degree": e.map.degree(),
        "num": num,
        "den": den,
        "signature": e.signature,
    });
    if let Some(n) = e.n {
        v["n"] = json!(n);
    }
    v
}

fn entry_text(e: &CatalogEntry) -> String {
    format!(
        "{}  degree {}  signature {}  {}\n",
        e.name(),
        e.map.degree(),
        signature_str(&e.signature),
        e.map
    )
}

pub fn cmd_catalog(family: Option<&str>, n: Option<u32>, as_json: bool) -> (String, i32) {
    if let Some(n) = n {
        if !(1..=1000).contains(&n) {
            return (
                format!("error: bad parameter: n = {} out of range [1, 1000]\n", n),
                EXIT_USAGE,
            );
        }
    }
    let entries: Vec<CatalogEntry> = match family.map(str::to_ascii_lowercase).as_deref() {
        None => catalog().to_vec(),
        Some(f @ ("cyclic" | "chebyshev" | "dihedral")) => {
            let fam = match f {
                "cyclic" => Family::Cyclic,
                "chebyshev" => Family::Chebyshev,
                _ => Family::DihedralHalf,
            };
            let Some(n) = n else {
                return (
                    format!("error: bad parameter: family {} needs --n\n", f),
                    EXIT_USAGE,
                );
            };
            match parametric_entry(fam, n) {
                Ok(e) => vec![e],
                Err(e) => return (format!("error: {}\n", e), EXIT_USAGE),
            }
        }
        Some(f @ ("tetra" | "octa" | "icosa")) => catalog()
            .iter()
            .filter(|e| e.name().to_ascii_lowercase().starts_with(f))
            .cloned()
            .collect(),
        Some(f) => {
            return (
                format!("error: bad parameter: unknown family '{}'\n", f),
                EXIT_USAGE,
            )
        }
    };
    if as_json {
        (
            format!("{}\n", Value::Array(entries.iter().map(entry_json).collect())),
            EXIT_OK,
        )
    } else {
        (entries.iter().map(entry_text).collect(), EXIT_OK)
    }
}

pub fn cmd_verify_identities(as_json: bool, quiet: bool) -> (String, i32) {
    verify_identity_list(&identities::identities(), as_json, quiet)
}

/// Verifies a list of identities; exit 0 iff all hold, otherwise 1 with the
/// failures named. Split out so the negative control can run on a perturbed
/// list.
pub fn verify_identity_list(
    ids: &[identities::Identity],
    as_json: bool,
    quiet: bool,
) -> (String, i32) {
    let results: Vec<(&str, bool)> = ids.iter().map(|id| (id.name, id.holds())).collect();
    let failed: Vec<&str> = results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    let code = if failed.is_empty() { EXIT_OK } else { EXIT_VERIFY };
    if as_json {
        let list: Vec<Value> = results
            .iter()
            .map(|(n, ok)| json!({"identity": n, "status": if *ok { "pass" } else { "fail" }}))
            .collect();
        return (format!("{}\n", Value::Array(list)), code);
    }
    let mut out = String::new();
    if !quiet {
        for (n, ok) in &results {
            let _ = writeln!(out, "{} {}", if *ok { "ok  " } else { "FAIL" }, n);
        }
    }
    if failed.is_empty() {
        let _ = writeln!(out, "all {} identities hold", results.len());
    } else {
        let _ = writeln!(
            out,
            "{} of {} identities failed, first: {}",
            failed.len(),
            results.len(),
            failed[0]
        );
    }
    (out, code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat_i;

    fn pm(src: &str) -> RationalMap {
        parse_map(src).unwrap()
    }

    #[test]
    fn parse_halfsum() {
        let m = pm("1/2*(z^3 + z^-3)");
        let expected = RationalMap::make_map(
            &UniPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]),
            &UniPoly::from_ints(&[0, 0, 0, 2]),
        )
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn parse_composition() {
        assert_eq!(pm("(z^2) . (z+1)"), pm("z^2 + 2*z + 1"));
        // outermost-first and left-associative: (f . g) . h
        assert_eq!(pm("z^2 . z^3 . (z+1)"), pm("(z+1)^6"));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_map("z^(1/2)"), Err(CliError::NonIntegerExponent));
        assert_eq!(parse_map("z^z"), Err(CliError::NonIntegerExponent));
        assert_eq!(parse_map("1/0"), Err(CliError::DivisionByZeroConstant));
        assert_eq!(parse_map("z/(z-z)"), Err(CliError::DivisionByZeroConstant));
        assert_eq!(parse_map("0^-1"), Err(CliError::DivisionByZeroConstant));
        match parse_map("z @ 2") {
            Err(CliError::SyntaxError { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {:?}", other),
        }
        assert!(matches!(parse_map("z +"), Err(CliError::SyntaxError { .. })));
        assert!(matches!(parse_map("(z"), Err(CliError::SyntaxError { .. })));
        assert!(matches!(parse_map("z z"), Err(CliError::SyntaxError { .. })));
    }

    #[test]
    fn negative_exponent_and_unary_minus() {
        assert_eq!(pm("z^-2"), pm("1/z^2"));
        assert_eq!(pm("-z^2"), pm("0 - z^2"));
        assert_eq!(pm("2^-3"), RationalMap::constant(&crate::exactnum::rat(1, 8)));
    }

    #[test]
    fn catalog_round_trip() {
        for e in catalog() {
            let printed = e.map.to_string();
            assert_eq!(pm(&printed), e.map, "round trip failed for {}", e.name());
        }
    }

    #[test]
    fn classify_chebyshev3() {
        let r = build_report(&pm("4*z^3 - 3*z")).unwrap();
        assert_eq!(r.genus, GenusClass::Zero);
        assert_eq!(r.signature, vec![2, 2, 3]);
        let names: Vec<String> = r.matches.iter().map(|m| m.entry.name()).collect();
        assert_eq!(names, vec!["Chebyshev(3)"]);
    }

    #[test]
    fn classify_doubling_map_json() {
        let (out, code) = cmd_classify(
            &pm("(z^2+1)^2 / (4*z*(z^2-1))"),
            true,
            false,
        );
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degree"], 4);
        assert_eq!(v["lattes"]["flag"], true);
        assert_eq!(v["lattes"]["orbifold"]["signature"], json!([2, 2, 2, 2]));
        assert_eq!(v["chi"], "1/2");
        // two identical runs are byte-identical
        let (out2, _) = cmd_classify(&pm("(z^2+1)^2 / (4*z*(z^2-1))"), true, false);
        assert_eq!(out, out2);
    }

    #[test]
    fn classify_higher_genus() {
        let r = build_report(&pm("z^4*(z-1)")).unwrap();
        assert_eq!(r.genus, GenusClass::Higher);
        assert!(r.witness.is_none());
        assert!(r.lattes.is_none());
    }

    #[test]
    fn classify_rejects_constant() {
        let (_, code) = cmd_classify(&pm("3/4"), false, false);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn json_schema_fields() {
        let r = build_report(&pm("z^2")).unwrap();
        let v = report_json(&r);
        let obj = v.as_object().unwrap();
        let mut keys: Vec<&String> = obj.keys().collect();
        keys.sort();
        assert_eq!(
            keys,
            vec![
                "chi",
                "degree",
                "genus",
                "lattes",
                "matches",
                "passport",
                "signature",
                "zero_chi_witness"
            ]
        );
        assert_eq!(v["genus"], "zero");
        assert_eq!(v["passport"][0][0], "inf");
    }

    #[test]
    fn class_place_json_indexing() {
        // z^2 - 2 shifted so a fiber holds an algebraic class: use passport
        // of a map whose critical value is a class
        let m = pm("z^3 - 3*z^2");
        let mut enc = PlaceEncoder::default();
        let c = Place::class(UniPoly::from_ints(&[2, 0, 1]));
        let v1 = enc.encode(&c);
        let v2 = enc.encode(&c);
        assert_eq!(v1["index"], 0);
        assert_eq!(v2["index"], 0);
        let d = Place::class(UniPoly::from_ints(&[3, 0, 1]));
        assert_eq!(enc.encode(&d)["index"], 1);
        let _ = m;
    }

    #[test]
    fn catalog_command() {
        let (out, code) = cmd_catalog(Some("icosa"), None, false);
        assert_eq!(code, EXIT_OK);
        let degrees: Vec<&str> = out
            .lines()
            .map(|l| l.split_whitespace().nth(2).unwrap())
            .collect();
        assert_eq!(degrees, vec!["60", "5", "6", "10", "12", "15", "20", "30"]);

        let (out, code) = cmd_catalog(Some("cyclic"), Some(7), false);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("z^7"));

        let (_, code) = cmd_catalog(Some("cyclic"), Some(0), false);
        assert_eq!(code, EXIT_USAGE);
        let (_, code) = cmd_catalog(Some("cyclic"), Some(1001), false);
        assert_eq!(code, EXIT_USAGE);
        let (_, code) = cmd_catalog(Some("nonsense"), None, false);
        assert_eq!(code, EXIT_USAGE);

        let (j1, _) = cmd_catalog(None, None, true);
        let (j2, _) = cmd_catalog(None, None, true);
        assert_eq!(j1, j2);
        let v: Value = serde_json::from_str(&j1).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 18);
    }

    #[test]
    fn passport_command() {
        let (out, code) = cmd_passport(&pm("z^2"), false);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("{2}@inf"));
        let (out, _) = cmd_passport(&pm("z^2"), true);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["degree"], 2);
    }

    #[test]
    fn mu_equiv_command() {
        let (out, code) = cmd_mu_equiv(&pm("2*z^2-1"), &pm("z^2"), false);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("equivalent"));
        let (_, code) = cmd_mu_equiv(&pm("z^4"), &pm("8*z^4-8*z^2+1"), false);
        assert_eq!(code, EXIT_VERIFY);
        // equivalence found through nontrivial Mobius maps on both sides
        let (_, code) = cmd_mu_equiv(&pm("z^4"), &pm("(2*z^4-1) . (z+1)"), false);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn compose_command() {
        let maps = vec![pm("z^2"), pm("z+1")];
        let (out, code) = cmd_compose(&maps, false);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "z^2+2*z+1");
    }

    #[test]
    fn constant_folding_is_exact() {
        assert_eq!(
            pm("(1/3 + 1/6) * z"),
            RationalMap::make_map(&UniPoly::from_ints(&[0, 1]), &UniPoly::from_ints(&[2]))
                .unwrap()
        );
        assert_eq!(pm("2^10"), RationalMap::constant(&rat_i(1024)));
    }
}

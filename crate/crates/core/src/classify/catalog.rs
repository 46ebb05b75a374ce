//! The genus-zero catalog: three parametric families (cyclic, Chebyshev,
//! half-dihedral) and eighteen fixed maps attached to the tetrahedral,
//! octahedral, and icosahedral rotation groups, with exact coefficients.

use super::mu::mu_equivalent;
use super::ClassifyError;
use crate::exactnum::{rat_i, UniPoly};
use crate::orbifold::Signature;
use crate::ratmap::{Mobius, RationalMap};
use once_cell::sync::Lazy;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic,
    DihedralHalf,
    Chebyshev,
    TetraA,
    TetraB,
    TetraC,
    OctaA,
    OctaB,
    OctaC,
    OctaD,
    OctaE,
    OctaF,
    OctaG,
    IcosaA,
    IcosaB,
    IcosaC,
    IcosaD,
    IcosaE,
    IcosaF,
    IcosaG,
    IcosaH,
}

impl Family {
    pub fn is_parametric(&self) -> bool {
        matches!(self, Family::Cyclic | Family::DihedralHalf | Family::Chebyshev)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Cyclic => "Cyclic",
            Family::DihedralHalf => "DihedralHalf",
            Family::Chebyshev => "Chebyshev",
            Family::TetraA => "Tetra_a",
            Family::TetraB => "Tetra_b",
            Family::TetraC => "Tetra_c",
            Family::OctaA => "Octa_a",
            Family::OctaB => "Octa_b",
            Family::OctaC => "Octa_c",
            Family::OctaD => "Octa_d",
            Family::OctaE => "Octa_e",
            Family::OctaF => "Octa_f",
            Family::OctaG => "Octa_g",
            Family::IcosaA => "Icosa_a",
            Family::IcosaB => "Icosa_b",
            Family::IcosaC => "Icosa_c",
            Family::IcosaD => "Icosa_d",
            Family::IcosaE => "Icosa_e",
            Family::IcosaF => "Icosa_f",
            Family::IcosaG => "Icosa_g",
            Family::IcosaH => "Icosa_h",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub family: Family,
    /// Parameter for the parametric families; None for fixed entries.
    pub n: Option<u32>,
    pub map: RationalMap,
    /// Expected signature of the minimal target orbifold.
    pub signature: Signature,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        match self.n {
            Some(n) => format!("{}({})", self.family, n),
            None => self.family.to_string(),
        }
    }
}

/// A catalog member together with the verified Mobius pair:
/// query = mu_left . entry.map . mu_right.
#[derive(Debug, Clone)]
pub struct CatalogMatch {
    pub entry: CatalogEntry,
    pub mu_left: Mobius,
    pub mu_right: Mobius,
}

fn p(cs: &[i64]) -> UniPoly {
    UniPoly::from_ints(cs)
}

fn rm(num: UniPoly, den: UniPoly) -> RationalMap {
    RationalMap::make_map(&num, &den).unwrap()
}

/// z^n.
pub fn cyclic(n: u32) -> Result<RationalMap, ClassifyError> {
    if n < 1 {
        return Err(ClassifyError::BadParameter("cyclic requires n >= 1".into()));
    }
    Ok(RationalMap::from_poly(&UniPoly::var().pow(n as usize)))
}

/// The degree-n Chebyshev polynomial via T_n = 2z T_{n-1} - T_{n-2}.
pub fn chebyshev(n: u32) -> Result<RationalMap, ClassifyError> {
    if n < 2 {
        return Err(ClassifyError::BadParameter("chebyshev requires n >= 2".into()));
    }
    Ok(RationalMap::from_poly(&chebyshev_poly(n)))
}

pub(crate) fn chebyshev_poly(n: u32) -> UniPoly {
    let two_z = p(&[0, 2]);
    let mut prev = UniPoly::one();
    let mut cur = UniPoly::var();
    for _ in 2..=n {
        let next = &(&two_z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    if n == 0 {
        prev
    } else {
        cur
    }
}

/// (z^{2n} + 1) / (2 z^n), degree 2n.
pub fn dihedral_half(n: u32) -> Result<RationalMap, ClassifyError> {
    if n < 2 {
        return Err(ClassifyError::BadParameter(
            "dihedral_half requires n >= 2".into(),
        ));
    }
    let num = &UniPoly::var().pow(2 * n as usize) + &UniPoly::one();
    let den = UniPoly::var().pow(n as usize).scale(&rat_i(2));
    Ok(rm(num, den))
}

pub fn tetra_a() -> RationalMap {
    let num = (&p(&[0, 1]).pow(3) * &p(&[-8, 0, 0, 1]).pow(3)).scale(&rat_i(-1));
    let den = p(&[1, 0, 0, 1]).pow(3).scale(&rat_i(64));
    rm(num, den)
}

pub fn tetra_b() -> RationalMap {
    let num = (&p(&[0, 1]) * &p(&[-8, 1]).pow(3)).scale(&rat_i(-1));
    let den = p(&[1, 1]).pow(3).scale(&rat_i(64));
    rm(num, den)
}

pub fn tetra_c() -> RationalMap {
    let num = p(&[-4, 0, 1]).pow(3).scale(&rat_i(-1));
    let den = p(&[-1, 1]).pow(3).scale(&rat_i(64));
    rm(num, den)
}

pub fn octa_a() -> RationalMap {
    let num = p(&[1, 0, 0, 0, 14, 0, 0, 0, 1]).pow(3);
    let den = (&p(&[0, 0, 0, 0, 1]) * &p(&[-1, 0, 0, 0, 1]).pow(4)).scale(&rat_i(108));
    rm(num, den)
}

pub fn octa_b() -> RationalMap {
    let num = p(&[1, 14, 1]).pow(3);
    let den = (&p(&[0, 1]) * &p(&[-1, 1]).pow(4)).scale(&rat_i(108));
    rm(num, den)
}

pub fn octa_c() -> RationalMap {
    let num = p(&[-4, 0, 1]).pow(3).scale(&rat_i(-1));
    let den = p(&[0, 0, 0, 0, 1]).scale(&rat_i(27));
    rm(num, den)
}

pub fn octa_d() -> RationalMap {
    let num = p(&[1, 0, -1, 0, 1]).pow(3).scale(&rat_i(4));
    let den = (&p(&[0, 0, 0, 0, 1]) * &p(&[-1, 0, 1]).pow(2)).scale(&rat_i(27));
    rm(num, den)
}

pub fn octa_e() -> RationalMap {
    let num = (&p(&[1, 0, 2]).pow(3) * &p(&[-3, 0, 2]).pow(3)).scale(&rat_i(-1));
    let den = p(&[-1, 0, 2]).pow(4).scale(&rat_i(27));
    rm(num, den)
}

pub fn octa_f() -> RationalMap {
    let num = (&p(&[0, 0, 0, 1]) * &p(&[-1, 1])).scale(&rat_i(-256));
    rm(num, p(&[27]))
}

pub fn octa_g() -> RationalMap {
    let num = (&p(&[0, 1]) * &p(&[-8, -7, 1]).pow(3)).scale(&rat_i(256));
    let den = p(&[-8, 20, 1]).pow(4);
    rm(num, den)
}

pub fn icosa_a() -> RationalMap {
    let mut core = vec![0i64; 21];
    core[0] = 1;
    core[5] = -228;
    core[10] = 494;
    core[15] = 228;
    core[20] = 1;
    let num = UniPoly::from_ints(&core).pow(3);
    let mut base = vec![0i64; 11];
    base[0] = -1;
    base[5] = -11;
    base[10] = 1;
    let den = (&UniPoly::from_ints(&base).pow(5) * &p(&[0, 0, 0, 0, 0, 1])).scale(&rat_i(1728));
    rm(num, den)
}

pub fn icosa_b() -> RationalMap {
    let num = (&p(&[5, 3]).pow(3) * &p(&[15, 0, 1])).scale(&rat_i(-1));
    rm(num, p(&[6144]))
}

pub fn icosa_c() -> RationalMap {
    let num = p(&[-20, 0, 1]).pow(3);
    let den = p(&[-5, 1]).scale(&rat_i(1728));
    rm(num, den)
}

pub fn icosa_d() -> RationalMap {
    let num = p(&[-95, -87, 0, 20]).pow(3).scale(&rat_i(320000));
    let den = p(&[101, 140, 20]).pow(5).scale(&rat_i(9));
    rm(num, den)
}

pub fn icosa_e() -> RationalMap {
    let num = p(&[1, -228, 494, 228, 1]).pow(3);
    let den = (&p(&[-1, -11, 1]).pow(5) * &p(&[0, 1])).scale(&rat_i(1728));
    rm(num, den)
}

pub fn icosa_f() -> RationalMap {
    let num = (&(&p(&[-4, -20, -40]).pow(3) * &p(&[0, 0, 0, 1])) * &p(&[1, 5, 5]).pow(3))
        .scale(&rat_i(625));
    let den = p(&[1, 10, 20]).pow(5).scale(&rat_i(27));
    rm(num, den)
}

pub fn icosa_g() -> RationalMap {
    let num = (&(&(&p(&[0, 1]) * &p(&[40, 5, 1]).pow(3)) * &p(&[-5, -40, 1]).pow(3))
        * &p(&[5, -5, 8]).pow(3))
        .scale(&rat_i(125));
    let den = p(&[25, -275, -165, 55, 1]).pow(5).scale(&rat_i(64));
    rm(num, den)
}

pub fn icosa_h() -> RationalMap {
    let num = &(&p(&[1, 3, 1]).pow(3) * &p(&[31, -14, 11, -4, 1]).pow(3))
        * &p(&[16, -4, 11, 1, 1]).pow(3);
    let den =
        (&p(&[-1, 1]).pow(5) * &p(&[11, 6, 6, 1, 1]).pow(5)).scale(&rat_i(1728));
    rm(num, den)
}

fn fixed_entry(family: Family, map: RationalMap, signature: &[u32]) -> CatalogEntry {
    CatalogEntry {
        family,
        n: None,
        map,
        signature: signature.to_vec(),
    }
}

static FIXED_CATALOG: Lazy<Vec<CatalogEntry>> = Lazy::new(|| {
    vec![
        fixed_entry(Family::TetraA, tetra_a(), &[2, 3, 3]),
        fixed_entry(Family::TetraB, tetra_b(), &[2, 3, 3]),
        fixed_entry(Family::TetraC, tetra_c(), &[2, 3, 3]),
        fixed_entry(Family::OctaA, octa_a(), &[2, 3, 4]),
        fixed_entry(Family::OctaB, octa_b(), &[2, 3, 4]),
        fixed_entry(Family::OctaC, octa_c(), &[2, 3, 4]),
        fixed_entry(Family::OctaD, octa_d(), &[2, 3, 4]),
        fixed_entry(Family::OctaE, octa_e(), &[2, 3, 4]),
        fixed_entry(Family::OctaF, octa_f(), &[2, 3, 4]),
        fixed_entry(Family::OctaG, octa_g(), &[2, 3, 4]),
        fixed_entry(Family::IcosaA, icosa_a(), &[2, 3, 5]),
        fixed_entry(Family::IcosaB, icosa_b(), &[2, 3, 5]),
        fixed_entry(Family::IcosaC, icosa_c(), &[2, 3, 5]),
        fixed_entry(Family::IcosaD, icosa_d(), &[2, 3, 5]),
        fixed_entry(Family::IcosaE, icosa_e(), &[2, 3, 5]),
        fixed_entry(Family::IcosaF, icosa_f(), &[2, 3, 5]),
        fixed_entry(Family::IcosaG, icosa_g(), &[2, 3, 5]),
        fixed_entry(Family::IcosaH, icosa_h(), &[2, 3, 5]),
    ]
});

/// The eighteen fixed catalog maps with exact coefficients. Parametric
/// family members are produced by [`parametric_entry`].
pub fn catalog() -> &'static [CatalogEntry] {
    &FIXED_CATALOG
}

/// Builds a member of one of the three parametric families.
pub fn parametric_entry(family: Family, n: u32) -> Result<CatalogEntry, ClassifyError> {
    let (map, signature) = match family {
        Family::Cyclic => (cyclic(n)?, vec![n, n]),
        Family::Chebyshev => (chebyshev(n)?, vec![2, 2, n]),
        Family::DihedralHalf => (dihedral_half(n)?, vec![2, 2, n]),
        other => {
            return Err(ClassifyError::BadParameter(format!(
                "{} is not a parametric family",
                other
            )))
        }
    };
    Ok(CatalogEntry {
        family,
        n: Some(n),
        map,
        signature,
    })
}

/// All catalog families mu-equivalent to the query, each with a verified
/// Mobius witness pair. The query must have a spherical Galois closure
/// (positive orbifold Euler characteristic).
pub fn catalog_match(a: &RationalMap) -> Result<Vec<CatalogMatch>, ClassifyError> {
    let d = a.degree() as u32;
    let pm = a.passport().partition_multiset();
    let mut candidates: Vec<CatalogEntry> = Vec::new();
    if d >= 1 {
        candidates.push(parametric_entry(Family::Cyclic, d)?);
    }
    if d >= 2 {
        candidates.push(parametric_entry(Family::Chebyshev, d)?);
    }
    if d % 2 == 0 && d / 2 >= 2 {
        candidates.push(parametric_entry(Family::DihedralHalf, d / 2)?);
    }
    candidates.extend(
        catalog()
            .iter()
            .filter(|e| e.map.degree() as u32 == d)
            .cloned(),
    );

    let mut out = Vec::new();
    let mut unsupported = false;
    for entry in candidates {
        if entry.map.passport().partition_multiset() != pm {
            continue;
        }
        match mu_equivalent(a, &entry.map) {
            Ok(Some((mu_left, mu_right))) => out.push(CatalogMatch {
                entry,
                mu_left,
                mu_right,
            }),
            Ok(None) => {}
            Err(ClassifyError::Unsupported) => unsupported = true,
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        if unsupported {
            Err(ClassifyError::Unsupported)
        } else {
            Err(ClassifyError::NoMatch)
        }
    } else {
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn parametric_generators() {
        assert_eq!(chebyshev(2).unwrap(), RationalMap::from_poly(&p(&[-1, 0, 2])));
        assert_eq!(
            chebyshev(3).unwrap(),
            RationalMap::from_poly(&p(&[0, -3, 0, 4]))
        );
        assert_eq!(
            dihedral_half(2).unwrap(),
            RationalMap::make_map(&p(&[1, 0, 0, 0, 1]), &p(&[0, 0, 2])).unwrap()
        );
        assert_eq!(cyclic(1).unwrap().degree(), 1);
        assert!(cyclic(0).is_err());
        assert!(chebyshev(1).is_err());
        assert!(dihedral_half(1).is_err());
    }

    #[test]
    fn fixed_entry_degrees() {
        let degs: Vec<usize> = catalog().iter().map(|e| e.map.degree()).collect();
        assert_eq!(
            degs,
            vec![12, 4, 6, 24, 6, 6, 12, 12, 4, 8, 60, 5, 6, 10, 12, 15, 20, 30]
        );
    }

    #[test]
    fn octa_f_exact_form() {
        let e = octa_f();
        assert_eq!(e.num(), &(&p(&[0, 0, 0, 1]) * &p(&[-1, 1])).scale(&rat(-256, 1)));
        assert_eq!(e.den(), &p(&[27]));
    }

    #[test]
    fn tetra_c_exact_form() {
        // -(1/64)((z^2-4)/(z-1))^3 cleared to integers
        let e = tetra_c();
        assert_eq!(e.num(), &p(&[-4, 0, 1]).pow(3).scale(&rat_i(-1)));
        assert_eq!(e.den(), &p(&[-1, 1]).pow(3).scale(&rat_i(64)));
    }
}

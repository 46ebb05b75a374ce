//! Built-in suite of exact decomposition and shift-factorization identities
//! among the catalog maps; every identity is checked by canonical equality
//! of both sides.

use super::parse_map;
use crate::classify::{
    chebyshev, dihedral_half, icosa_a, icosa_b, icosa_c, icosa_d, icosa_e, icosa_f, icosa_g,
    icosa_h, octa_a, octa_b, octa_c, octa_d, octa_e, octa_f, octa_g, tetra_a, tetra_b,
};
use crate::exactnum::rat_i;
use crate::ratmap::RationalMap;

/// One exact identity: `lhs == rhs` as canonical rational maps.
pub struct Identity {
    pub name: &'static str,
    pub lhs: RationalMap,
    pub rhs: RationalMap,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn pm(src: &str) -> RationalMap {
    parse_map(src).expect("built-in expression")
}

fn comp(outer: &RationalMap, inner: &RationalMap) -> RationalMap {
    RationalMap::compose(outer, inner)
}

/// (z^n + z^-n)/2, the degree-2n dihedral quotient map.
fn halfsum(n: u32) -> RationalMap {
    pm(&format!("1/2*(z^{} + z^-{})", n, n))
}

/// The degree-3 left factor (z+7)^3/(54(z-1)^2) shared by the octahedral
/// decompositions.
fn octa_left() -> RationalMap {
    pm("1/54*(z+7)^3/(z-1)^2")
}

pub fn identities() -> Vec<Identity> {
    let l = octa_left();
    let conj = pm("-4*z/(z^2-2*z+1)");
    let one = rat_i(1);
    let mut out = vec![
        Identity {
            name: "tetra12-three-step-chain",
            lhs: tetra_a(),
            rhs: comp(
                &comp(&pm("-1/64*z^3"), &pm("(z^2-4)/(z-1)")),
                &pm("(z^2+2)/(z+1)"),
            ),
        },
        Identity {
            name: "tetra12-cube-split",
            lhs: tetra_a(),
            rhs: comp(&tetra_b(), &pm("z^3")),
        },
        Identity {
            name: "tetra12-degree4-split",
            lhs: tetra_a(),
            rhs: comp(&pm("-1/64*z^3"), &pm("z*(z^3-8)/(z^3+1)")),
        },
        Identity {
            name: "octa24-dihedral-split",
            lhs: octa_a(),
            rhs: comp(&l, &dihedral_half(4).unwrap()),
        },
        Identity {
            name: "octa-left-factor-order4",
            lhs: octa_b(),
            rhs: comp(&l, &halfsum(1)),
        },
        Identity {
            name: "octa-left-factor-klein-plus",
            lhs: pm("1/27*(z^2+3)^3/(z^2-1)^2"),
            rhs: comp(&l, &chebyshev(2).unwrap()),
        },
        Identity {
            name: "octa-left-factor-klein-minus",
            lhs: octa_c(),
            rhs: comp(&l, &chebyshev(2).unwrap().neg()),
        },
        Identity {
            name: "octa-left-factor-order2-plus",
            lhs: octa_d(),
            rhs: comp(&l, &chebyshev(4).unwrap()),
        },
        Identity {
            name: "octa-left-factor-order2-minus",
            lhs: octa_e(),
            rhs: comp(&l, &chebyshev(4).unwrap().neg()),
        },
        Identity {
            name: "octa-left-factor-order6",
            lhs: pm("-1/432*(16*z^8-56*z^4+1)^3/(z^4*(4*z^4+1)^4)"),
            rhs: comp(
                &octa_f(),
                &pm("1/8*(2*z^2+2*z-1)*(4*z^4+8*z^2+1)/(z*(4*z^4+1))"),
            ),
        },
        Identity {
            name: "octa-conjugate-of-tetra12",
            lhs: pm("256*z^3*(z^6-7*z^3-8)^3/(z^6+20*z^3-8)^4"),
            rhs: comp(&conj, &tetra_a()),
        },
        Identity {
            name: "octa-left-factor-order3",
            lhs: octa_g(),
            rhs: comp(&conj, &tetra_b()),
        },
        Identity {
            name: "tetra12-shift-factorization",
            lhs: tetra_a().sub_const(&one),
            rhs: pm("-1/64*(z^6+20*z^3-8)^2/(z^3+1)^3"),
        },
        Identity {
            name: "octa-klein-plus-shift-factorization",
            lhs: comp(&l, &chebyshev(2).unwrap()).sub_const(&one),
            rhs: pm("1/27*z^2*(z^2-9)^2/(z^2-1)^2"),
        },
        Identity {
            name: "octa-conjugate-shift-factorization",
            lhs: pm("256*z^3*(z^6-7*z^3-8)^3/(z^6+20*z^3-8)^4").sub_const(&one),
            rhs: pm(
                "-(z^2+2)^2*(z^4-2*z^2+4)^2*(z^2-4*z-2)^2*(z^4+4*z^3+18*z^2-8*z+4)^2\
                 /(z^6+20*z^3-8)^4",
            ),
        },
    ];

    // half-sum maps split through pure powers and through Chebyshev
    // polynomials for every proper divisor
    for (n, d) in [(4u32, 2u32), (6, 2), (6, 3), (8, 2), (8, 4)] {
        out.push(Identity {
            name: match (n, d) {
                (4, 2) => "halfsum-power-split-4-2",
                (6, 2) => "halfsum-power-split-6-2",
                (6, 3) => "halfsum-power-split-6-3",
                (8, 2) => "halfsum-power-split-8-2",
                _ => "halfsum-power-split-8-4",
            },
            lhs: halfsum(n),
            rhs: comp(&halfsum(d), &pm(&format!("z^{}", n / d))),
        });
        out.push(Identity {
            name: match (n, d) {
                (4, 2) => "halfsum-chebyshev-split-4-2",
                (6, 2) => "halfsum-chebyshev-split-6-2",
                (6, 3) => "halfsum-chebyshev-split-6-3",
                (8, 2) => "halfsum-chebyshev-split-8-2",
                _ => "halfsum-chebyshev-split-8-4",
            },
            lhs: halfsum(n),
            rhs: comp(&chebyshev(d).unwrap(), &halfsum(n / d)),
        });
    }

    // T_d(z) semiconjugates the half-sum of degree one to the half-sum of
    // degree d
    for d in 2u32..=8 {
        out.push(Identity {
            name: match d {
                2 => "chebyshev-halfsum-2",
                3 => "chebyshev-halfsum-3",
                4 => "chebyshev-halfsum-4",
                5 => "chebyshev-halfsum-5",
                6 => "chebyshev-halfsum-6",
                7 => "chebyshev-halfsum-7",
                _ => "chebyshev-halfsum-8",
            },
            lhs: comp(&chebyshev(d).unwrap(), &halfsum(1)),
            rhs: halfsum(d),
        });
    }

    // shift factorizations of the eight icosahedral entries
    let icosa_shifts: [(&'static str, RationalMap, &'static str); 8] = [
        (
            "icosa-a-shift-factorization",
            icosa_a(),
            "1/1728*(z^30-522*z^25-10005*z^20-10005*z^10+522*z^5+1)^2\
             /(z^5*(z^10-11*z^5-1)^5)",
        ),
        (
            "icosa-b-shift-factorization",
            icosa_b(),
            "-1/6144*(3*z+11)*(3*z^2+2*z+27)^2",
        ),
        (
            "icosa-c-shift-factorization",
            icosa_c(),
            "1/1728*(z^2+12*z+40)*(z^2-6*z+4)^2/(z-5)",
        ),
        (
            "icosa-d-shift-factorization",
            icosa_d(),
            "-1/9*(180*z^2+380*z+229)*(20*z^2+20*z+41)^2*(20*z^2-580*z-979)^2\
             /(20*z^2+140*z+101)^5",
        ),
        (
            "icosa-e-shift-factorization",
            icosa_e(),
            "1/1728*(z^6-522*z^5-10005*z^4-10005*z^2+522*z+1)^2/(z*(z^2-11*z-1)^5)",
        ),
        (
            "icosa-f-shift-factorization",
            icosa_f(),
            "-1/27*(10*z+3)*(20*z^2+20*z+1)*(10*z^2+10*z+3)^2\
             *(500*z^4+300*z^3+70*z^2+10*z+1)^2/(20*z^2+10*z+1)^5",
        ),
        (
            "icosa-g-shift-factorization",
            icosa_g(),
            "-1/64*(z^2+5)^2*(8*z^4-100*z^3+2055*z^2+500*z+200)^2\
             *(z^4-350*z^3-2190*z^2+1750*z+25)^2/(z^4+55*z^3-165*z^2-275*z+25)^5",
        ),
        (
            "icosa-h-shift-factorization",
            icosa_h(),
            "1/1728*(z^2+4)*(z^2-2*z-4)^2*(z^4+3*z^2+1)^2\
             *(z^4+6*z^3+21*z^2+36*z+61)^2*(z^4-4*z^3+21*z^2-34*z+41)^2\
             /((z-1)^5*(z^4+z^3+6*z^2+6*z+11)^5)",
        ),
    ];
    for (name, entry, shifted) in icosa_shifts {
        out.push(Identity {
            name,
            lhs: entry.sub_const(&one),
            rhs: pm(shifted),
        });
    }

    out
}

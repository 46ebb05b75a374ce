//! Deciding Mobius equivalence A1 = mu1 . A2 . mu2 by exact search.
//!
//! The search anchors on rational points (and infinity) inside fibers over
//! critical values: such points are carried to one another by any rational
//! Mobius pair, matched by their invariant key (the partition of the fiber
//! they sit in, and their own local degree). With three or more anchors the
//! right-hand transformation is pinned by a point triple; with exactly two
//! anchors a one-parameter scaling family remains and the parameter is
//! solved for as a rational root of an exact minor determinant.

use super::ClassifyError;
use crate::exactnum::{rational_roots, Int, Rat, UniPoly};
use crate::ratmap::{Mobius, Place, ProjPoint, RationalMap};
use num::{Integer, One, Zero};

type AnchorKey = (Vec<usize>, usize);

#[derive(Debug, Clone)]
struct Anchor {
    key: AnchorKey,
    point: ProjPoint,
}

fn anchors(a: &RationalMap) -> Vec<Anchor> {
    let d = a.degree();
    let mut out = Vec::new();
    for (v, parts) in a.branch_data() {
        let s = v.size();
        let mut partition: Vec<usize> = Vec::new();
        for (p, k) in &parts {
            partition.extend(std::iter::repeat(*k).take(p.size() / s));
        }
        partition.sort_unstable_by(|x, y| y.cmp(x));
        debug_assert_eq!(partition.iter().sum::<usize>(), d);
        for (p, k) in &parts {
            let point = match p {
                Place::Finite(x) => ProjPoint::from_rat(x),
                Place::Infinity => ProjPoint::infinity(),
                Place::Class(_) => continue,
            };
            out.push(Anchor {
                key: (partition.clone(), *k),
                point,
            });
        }
    }
    out
}

fn key_counts(anchors: &[Anchor]) -> Vec<(AnchorKey, usize)> {
    let mut counts: Vec<(AnchorKey, usize)> = Vec::new();
    for a in anchors {
        match counts.iter_mut().find(|(k, _)| *k == a.key) {
            Some((_, c)) => *c += 1,
            None => counts.push((a.key.clone(), 1)),
        }
    }
    counts.sort();
    counts
}

/// Row-reduces an n x 4 rational matrix and returns a basis of its right
/// nullspace.
fn nullspace4(rows: &[[Rat; 4]]) -> Vec<[Rat; 4]> {
    let mut m: Vec<[Rat; 4]> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..4 {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = Rat::one() / m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x *= inv.clone();
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..4 {
                    let sub = &f * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..4 {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        v[free] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn mobius_from_rats(v: &[Rat; 4]) -> Mobius {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    Mobius::new(ints[0].clone(), ints[1].clone(), ints[2].clone(), ints[3].clone())
}

/// Finds the Mobius mu with a1 = mu . b, if one exists, by solving the
/// bilinear identity a Q1 Pb + b Q1 Qb - c P1 Pb - d P1 Qb = 0 linearly.
fn solve_left(a1: &RationalMap, b: &RationalMap) -> Option<Mobius> {
    let m1 = a1.den() * b.num();
    let m2 = a1.den() * b.den();
    let m3 = -&(a1.num() * b.num());
    let m4 = -&(a1.num() * b.den());
    let maxd = m1
        .degree()
        .max(m2.degree())
        .max(m3.degree())
        .max(m4.degree());
    let rows: Vec<[Rat; 4]> = (0..=maxd)
        .map(|i| [m1.coeff(i), m2.coeff(i), m3.coeff(i), m4.coeff(i)])
        .collect();
    for v in nullspace4(&rows) {
        let det = &v[0] * &v[3] - &v[1] * &v[2];
        if det.is_zero() {
            continue;
        }
        let num = &b.num().scale(&v[0]) + &b.den().scale(&v[1]);
        let den = &b.num().scale(&v[2]) + &b.den().scale(&v[3]);
        let composed = RationalMap::make_map(&num, &den).ok()?;
        if &composed == a1 {
            return Some(mobius_from_rats(&v));
        }
    }
    None
}

/// The Mobius sending p to 0 and q to infinity.
fn to_zero_inf(p: &ProjPoint, q: &ProjPoint) -> Mobius {
    Mobius::new(
        p.den.clone(),
        -p.num.clone(),
        q.den.clone(),
        -q.num.clone(),
    )
}

fn try_mu2(a1: &RationalMap, a2: &RationalMap, mu2: &Mobius) -> Option<(Mobius, Mobius)> {
    let b = RationalMap::compose(a2, &mu2.as_map());
    solve_left(a1, &b).map(|mu1| (mu1, mu2.clone()))
}

/// Checks cheaply that mu2 carries every anchor of a1 onto an anchor of a2
/// with the same key.
fn anchors_compatible(mu2: &Mobius, an1: &[Anchor], an2: &[Anchor]) -> bool {
    an1.iter().all(|a| {
        let img = mu2.apply(&a.point);
        an2.iter().any(|b| b.key == a.key && b.point.same(&img))
    })
}

// -- two-anchor scaling solver ---------------------------------------------

/// Polynomial in z whose coefficients are polynomials in an auxiliary
/// parameter, lowest z-degree first.
type ParamPoly = Vec<UniPoly>;

fn pp_lift(p: &UniPoly) -> ParamPoly {
    (0..=p.degree()).map(|i| UniPoly::constant(p.coeff(i))).collect()
}

/// p(lambda * z) as a polynomial in z with coefficients in lambda.
fn pp_scaled_arg(p: &UniPoly) -> ParamPoly {
    (0..=p.degree())
        .map(|i| {
            let mut cs = vec![Rat::zero(); i + 1];
            cs[i] = p.coeff(i);
            UniPoly::new(cs)
        })
        .collect()
}

fn pp_mul(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let mut out = vec![UniPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

fn pp_neg(a: &ParamPoly) -> ParamPoly {
    a.iter().map(|x| -x).collect()
}

fn det3(m: &[Vec<UniPoly>]) -> UniPoly {
    let t0 = &m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1]));
    let t1 = &m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]));
    let t2 = &m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0]));
    &(&t0 - &t1) + &t2
}

fn det4(rows: &[&[UniPoly; 4]; 4]) -> UniPoly {
    let mut det = UniPoly::zero();
    for i in 0..4 {
        if rows[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = (0..4)
            .filter(|&r| r != i)
            .map(|r| (1..4).map(|c| rows[r][c].clone()).collect())
            .collect();
        let term = &rows[i][0] * &det3(&minor);
        det = if i % 2 == 0 { &det + &term } else { &det - &term };
    }
    det
}

/// Candidate scaling parameters for mu2 = beta^-1 . (lambda z) . alpha: the
/// rational roots of the first nonvanishing 4x4 minor of the exact linear
/// system expressing "some mu1 exists".
fn lambda_candidates(d_map: &RationalMap, c_map: &RationalMap) -> Option<Vec<Rat>> {
    let pd = pp_lift(d_map.num());
    let qd = pp_lift(d_map.den());
    let pe = pp_scaled_arg(c_map.num());
    let qe = pp_scaled_arg(c_map.den());
    let cols = [
        pp_mul(&qd, &pe),
        pp_mul(&qd, &qe),
        pp_neg(&pp_mul(&pd, &pe)),
        pp_neg(&pp_mul(&pd, &qe)),
    ];
    let nrows = cols.iter().map(|c| c.len()).max().unwrap();
    let get = |c: &ParamPoly, i: usize| -> UniPoly {
        c.get(i).cloned().unwrap_or_else(UniPoly::zero)
    };
    let rows: Vec<[UniPoly; 4]> = (0..nrows)
        .map(|i| {
            [
                get(&cols[0], i),
                get(&cols[1], i),
                get(&cols[2], i),
                get(&cols[3], i),
            ]
        })
        .collect();
    // first non-identically-zero 4x4 minor, rows in lexicographic order
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            for c in b + 1..rows.len() {
                for e in c + 1..rows.len() {
                    let det = det4(&[&rows[a], &rows[b], &rows[c], &rows[e]]);
                    if !det.is_zero() {
                        let roots = rational_roots(&det).ok()?;
                        return Some(
                            roots
                                .into_iter()
                                .map(|(r, _)| r)
                                .filter(|r| !r.is_zero())
                                .collect(),
                        );
                    }
                }
            }
        }
    }
    None // rank below 4 for every parameter value
}

/// Decides whether a1 = mu1 . a2 . mu2 for rational Mobius transformations,
/// returning a verified witness pair. `Err(Unsupported)` means the maps do
/// not expose enough rational anchor points for the bounded search.
pub fn mu_equivalent(
    a1: &RationalMap,
    a2: &RationalMap,
) -> Result<Option<(Mobius, Mobius)>, ClassifyError> {
    if a1.degree() != a2.degree() {
        return Ok(None);
    }
    if a1 == a2 {
        return Ok(Some((Mobius::identity(), Mobius::identity())));
    }
    if a1.passport().partition_multiset() != a2.passport().partition_multiset() {
        return Ok(None);
    }
    let an1 = anchors(a1);
    let an2 = anchors(a2);
    if key_counts(&an1) != key_counts(&an2) {
        // rational anchor multiplicities are preserved by rational Mobius
        // pairs, so a mismatch rules out a rational witness
        return Ok(None);
    }
    if an1.len() >= 3 {
        // pin mu2 by the images of a fixed anchor triple
        let src = &an1[0..3];
        let n = an2.len();
        for i in 0..n {
            if an2[i].key != src[0].key {
                continue;
            }
            for j in 0..n {
                if j == i || an2[j].key != src[1].key {
                    continue;
                }
                for k in 0..n {
                    if k == i || k == j || an2[k].key != src[2].key {
                        continue;
                    }
                    let mu2 = Mobius::through(
                        &[
                            src[0].point.clone(),
                            src[1].point.clone(),
                            src[2].point.clone(),
                        ],
                        &[
                            an2[i].point.clone(),
                            an2[j].point.clone(),
                            an2[k].point.clone(),
                        ],
                    );
                    if !anchors_compatible(&mu2, &an1, &an2) {
                        continue;
                    }
                    if let Some(w) = try_mu2(a1, a2, &mu2) {
                        return Ok(Some(w));
                    }
                }
            }
        }
        return Ok(None);
    }
    if an1.len() == 2 {
        let alpha = to_zero_inf(&an1[0].point, &an1[1].point);
        let d_map = RationalMap::compose(a1, &alpha.inverse().as_map());
        let mut orders: Vec<(usize, usize)> = vec![];
        if an2[0].key == an1[0].key && an2[1].key == an1[1].key {
            orders.push((0, 1));
        }
        if an2[1].key == an1[0].key && an2[0].key == an1[1].key {
            orders.push((1, 0));
        }
        for (x, y) in orders {
            let beta = to_zero_inf(&an2[x].point, &an2[y].point);
            let c_map = RationalMap::compose(a2, &beta.inverse().as_map());
            let lambdas = match lambda_candidates(&d_map, &c_map) {
                Some(ls) => ls,
                None => [1i64, -1, 2, -2, 3, -3]
                    .iter()
                    .flat_map(|&v| {
                        [
                            Rat::from_integer(Int::from(v)),
                            Rat::new(Int::one(), Int::from(v)),
                        ]
                    })
                    .collect(),
            };
            for lambda in lambdas {
                let mu2 = beta
                    .inverse()
                    .compose(&Mobius::scaling(&lambda))
                    .compose(&alpha);
                if let Some(w) = try_mu2(a1, a2, &mu2) {
                    return Ok(Some(w));
                }
            }
        }
        return Ok(None);
    }
    Err(ClassifyError::Unsupported)
}

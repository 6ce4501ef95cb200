//! Closed-form `G0` as tabulated in the literature, and a diff against the
//! integrated one.
//!
//! The table is written in `y = (1 - x)/2` as `2ω²r²·B₂(y) + r⁻²·B₋₂(y)`.
//! Its `r⁻²` block has an unbalanced denominator and an unsigned last line;
//! it is read here as `N(y) / (αβ((α-β)y - α)⁴)` with a `+` on the last
//! line. Findings are reported, never reconciled.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rational, int, rat};
use crate::exact::{LaurentR, Poly, RatFn, Rational};
use crate::model::params::SystemParams;

fn sq(q: &Rational) -> Rational {
    q * q
}

/// `B₂(y)`
pub fn tabulated_r2(p: &SystemParams) -> RatFn {
    let (a, b) = (&p.alpha, &p.beta);
    let d = p.delta();
    let y0 = a / &d;
    let quarter = rat(1, 4);
    let mut f = RatFn::pole(&quarter - sq(a), &int(0), 1);
    f = &f + &RatFn::pole(&quarter - sq(b), &int(1), 1);
    let d3 = &d * &d * &d;
    f = &f + &RatFn::pole(-(a * b * (a + b) * int(8)) / d3, &y0, 2);
    let c1 = (sq(a) + a * b * int(4) + sq(b)) * int(4);
    f = &f + &RatFn::pole(-c1 / (&d * &d), &y0, 1);
    let constant = a * &d * int(2) - (a - b * int(7)) / &d;
    let linear = -(sq(&d) + int(3)) * int(2);
    &f + &RatFn::from_poly(Poly::new(vec![constant, linear]))
}

/// `B₋₂(y)`
pub fn tabulated_rm2(p: &SystemParams) -> Result<RatFn> {
    let (a, b) = (&p.alpha, &p.beta);
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidParams("tabulated G0 divides by α and β".into()));
    }
    let d = p.delta();
    let one_m4a2 = int(1) - sq(a) * int(4);
    let one_m4b2 = int(1) - sq(b) * int(4);
    let ka = -(a * a * a) * int(8) + sq(a) * b * int(8) + a * int(12) - b * int(32);
    let kb = -(b * b * b) * int(8) + a * sq(b) * int(8) + b * int(12) - a * int(32);
    // ((1-4α²) ka y + α(1-4α²)) / (8α y²)
    let t1 = RatFn::new(
        Poly::new(vec![a * &one_m4a2, &one_m4a2 * &ka]),
        Poly::monomial(a * int(8), 2),
    )?;
    // ((1-4β²) kb (y-1) + β(1-4β²)) / (8β (y-1)²)
    let t2 = RatFn::new(
        Poly::new(vec![b * &one_m4b2 - &one_m4b2 * &kb, &one_m4b2 * &kb]),
        Poly::from_ints(&[1, -2, 1]).scale(&(b * int(8))),
    )?;
    let (a2, b2) = (sq(a), sq(b));
    let (a3, b3) = (a * &a2, b * &b2);
    let (a4, b4) = (sq(&a2), sq(&b2));
    let n0 = -(&a3) * (&a2 * &b2 * int(4) - &a2 - a * b * int(3) + &b2 * int(5));
    let n1 = &a2
        * (&a3 * &b2 * int(12) - &a2 * &b3 * int(12) - &a3 * int(3) - &a2 * b * int(12) + a * &b2 * int(8)
            + &b3 * int(23));
    let n2 = -a
        * (&a4 * &b2 * int(12) - &a3 * &b3 * int(24) + &a2 * &b4 * int(12) - &a4 * int(3) - &a3 * b * int(15)
            - &a2 * &b2 * int(22)
            + a * &b3 * int(53)
            + &b4 * int(3));
    let n3 = &d
        * (&a4 * &b2 * int(4) - &a3 * &b3 * int(8) + &a2 * &b4 * int(4) - &a4 - &a3 * b * int(7)
            - &a2 * &b2 * int(32)
            - a * &b3 * int(7)
            - &b4);
    let lin = Poly::new(vec![-a.clone(), d.clone()]);
    let t3 = RatFn::new(Poly::new(vec![n0, n1, n2, n3]), lin.pow(4).scale(&(a * b)))?;
    Ok(&(&t1 + &t2) + &t3)
}

/// `G0` coefficient of `r^k` as a function of `y`.
fn in_y(g0: &LaurentR, k: i32) -> Result<RatFn> {
    let t = g0.coeff(k);
    if !t.odd.is_zero() {
        return Err(Error::NonClosure(format!("r^{k} part of G0 is not even in s")));
    }
    // x = 1 - 2y
    Ok(t.even.compose_affine(&int(-2), &int(1)))
}

/// Shape of `ours - tabulated` for one power of `r`.
#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiffShape {
    Zero,
    Constant { value: String },
    /// Pole parts agree; the polynomial parts differ.
    Polynomial { degree: usize, diff: String },
    /// Pole parts differ at these `y` locations (with order).
    Poles { at: Vec<(String, u32)>, diff: String },
}

pub fn classify(diff: &RatFn, candidates: &[Rational]) -> DiffShape {
    if diff.is_zero() {
        return DiffShape::Zero;
    }
    if let Some(c) = diff.as_constant() {
        return DiffShape::Constant { value: fmt_rational(&c) };
    }
    let text = diff.display_var("y");
    if diff.is_polynomial() {
        return DiffShape::Polynomial {
            degree: diff.num().degree().unwrap_or(0),
            diff: text,
        };
    }
    let at = candidates
        .iter()
        .filter_map(|c| {
            let (k, _) = diff.den().strip_root(c);
            (k > 0).then(|| (fmt_rational(c), k))
        })
        .collect();
    DiffShape::Poles { at, diff: text }
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixDiff {
    pub r2: DiffShape,
    pub rm2: DiffShape,
    /// Powers of `r` present in the integrated `G0`.
    pub powers: Vec<i32>,
}

/// Compare the integrated `G0` with the tabulated one.
pub fn appendix_diff(p: &SystemParams, g0: &LaurentR) -> Result<AppendixDiff> {
    let w2 = &p.omega * &p.omega;
    let ours2 = in_y(g0, 2)?;
    let ours_m2 = in_y(g0, -2)?;
    let tab2 = tabulated_r2(p).scale(&(w2 * int(2)));
    let tab_m2 = tabulated_rm2(p)?;
    let poles = [int(0), int(1), &p.alpha / p.delta()];
    Ok(AppendixDiff {
        r2: classify(&(&ours2 - &tab2), &poles),
        rm2: classify(&(&ours_m2 - &tab_m2), &poles),
        powers: g0.terms().keys().copied().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_l2;

    #[test]
    fn tabulated_pole_structure() {
        let p = SystemParams::reference();
        let b2 = tabulated_r2(&p);
        // simple poles at 0 and 1, double pole at α/(α-β) = -1
        assert_eq!(b2.den().strip_root(&int(0)).0, 1);
        assert_eq!(b2.den().strip_root(&int(1)).0, 1);
        assert_eq!(b2.den().strip_root(&int(-1)).0, 2);
        let bm2 = tabulated_rm2(&p).unwrap();
        assert_eq!(bm2.den().strip_root(&int(-1)).0, 4);
    }

    #[test]
    fn r2_block_differs_only_in_polynomial_part() {
        let p = SystemParams::reference();
        let bundle = build_l2(&p).unwrap();
        let d = appendix_diff(&p, &bundle.g0).unwrap();
        assert_eq!(d.powers, vec![-2, 2]);
        // ours - table = 2ω²(8y + 24)
        assert_eq!(
            d.r2,
            DiffShape::Polynomial {
                degree: 1,
                diff: "16*y + 48".into()
            }
        );
        assert!(matches!(d.rm2, DiffShape::Poles { .. }));
    }
}

//! The fourth-order integral `L2`.
//!
//! `L2 = {∂x² - ∂y², ∂φ²} + S + G0`, where `S` is the second-order part
//! written in divergence form
//!
//! ```text
//! S = -(1/r)∂r(2r G1 ∂r) - (1/r)∂r(r G2 ∂φ) - ∂φ(G2 ∂r) - ∂φ(2 G3 ∂φ)
//! ```
//!
//! whose principal symbol is `-2(G1 ∂r² + G2 ∂r∂φ + G3 ∂φ²)`. With `G1..G3`
//! solving the first-order determining equations, `[H, {..} + S]` is a
//! first-order operator `ρ_r ∂r + ρ_φ ∂φ + ρ_0`, and `G0` is recovered from
//! `∂r G0 = ρ_r / 2`, `∂φ G0 = r² ρ_φ / 2` by exact integration.

use num_traits::Zero;
use serde::Serialize;

use crate::diffop::{op_commutator, op_compose, Op2D};
use crate::error::{Error, Result};
use crate::exact::rational::{int, rat};
use crate::exact::{laurent_scale_shift, LaurentR, Rational, TrigRat};

use super::hamiltonian::{build_hamiltonian, build_l1, t_function};
use super::params::{ser_rational, SystemParams};

/// Free constants of the `G1..G3` solution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CConstants {
    #[serde(serialize_with = "ser_rational")]
    pub c10: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c11: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c12: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c21: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c22: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c30: Rational,
}

impl CConstants {
    /// `c11 = 0`, `c12 = 8(α² - αβ + β²) + 18`, all others zero.
    pub fn for_params(p: &SystemParams) -> Self {
        CConstants {
            c10: Rational::zero(),
            c11: Rational::zero(),
            c12: p.sigma() * int(8) + int(18),
            c21: Rational::zero(),
            c22: Rational::zero(),
            c30: Rational::zero(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IntegralBundle {
    pub params: SystemParams,
    pub h: Op2D,
    pub l1: Op2D,
    pub l2: Op2D,
    pub c: CConstants,
    pub g1: LaurentR,
    pub g2: LaurentR,
    pub g3: LaurentR,
    pub g0: LaurentR,
    /// `T` used for the construction.
    pub t: TrigRat,
}

/// The three second-order coefficient functions.
#[derive(Clone, Debug)]
pub struct GFunctions {
    pub g1: LaurentR,
    pub g2: LaurentR,
    pub g3: LaurentR,
}

fn cos2() -> TrigRat {
    TrigRat::cos2phi()
}

fn s() -> TrigRat {
    TrigRat::s()
}

fn k(q: &Rational) -> TrigRat {
    TrigRat::constant(q.clone())
}

/// `G1`, `G2`, `G3` for a given `T`, constants and `Ω`, the coefficient of
/// `r²` in the potential. The `cos φ`, `sin φ` terms carried by `c21`, `c22`
/// lie outside the coefficient ring and must vanish.
pub fn g_functions(t: &TrigRat, c: &CConstants, big_omega: &Rational) -> Result<GFunctions> {
    if !c.c21.is_zero() || !c.c22.is_zero() {
        return Err(Error::InvalidParams(
            "c21, c22 multiply half-angle terms that the coefficient ring cannot hold".into(),
        ));
    }
    let tp = t.dphi();
    let quarter = rat(1, 4);
    let g1 = &(&(&cos2() * &tp).scale(&int(2)) - &(&s() * t).scale(&int(2)))
        + &(&(&cos2().scale(&(-&c.c12 * &quarter)) + &s().scale(&(&c.c11 * &quarter))) + &k(&c.c10));
    let g2_in = &(&(&s() * &tp).scale(&int(12)) + &(&cos2() * t).scale(&int(8)))
        - &(&s().scale(&c.c12) + &cos2().scale(&c.c11));
    let g3_in = &(&(&cos2() * &tp).scale(&int(16)) - &(&s() * t).scale(&int(8)))
        + &(&(&cos2().scale(&-c.c12.clone()) + &s().scale(&c.c11)) + &k(&(&c.c10 * int(-2))));
    let g3 = LaurentR::from_trig(-2, g3_in.scale(&rat(-1, 4)))
        .add(&LaurentR::from_trig(2, cos2().scale(big_omega)))
        .add(&LaurentR::from_rational(0, &c.c30 / int(2)));
    Ok(GFunctions {
        g1: LaurentR::from_trig(0, g1),
        g2: LaurentR::from_trig(-1, g2_in.scale(&rat(-1, 2))),
        g3,
    })
}

/// `{∂x² - ∂y², ∂φ²}` in polar form, using
/// `∂x² - ∂y² = cos 2φ (∂r² - r⁻¹∂r - r⁻²∂φ²) - sin 2φ (2r⁻¹∂r∂φ - 2r⁻²∂φ)`.
pub fn leading_part() -> Op2D {
    let p = Op2D::term(2, 0, LaurentR::one())
        .add(&Op2D::term(1, 0, LaurentR::from_rational(-1, int(-1))))
        .add(&Op2D::term(0, 2, LaurentR::from_rational(-2, int(-1))));
    let q = Op2D::term(1, 1, LaurentR::from_rational(-1, int(-2)))
        .add(&Op2D::term(0, 1, LaurentR::from_rational(-2, int(2))));
    let d = op_compose(&Op2D::trig(0, cos2()), &p).add(&op_compose(&Op2D::trig(0, s()), &q));
    let phi2 = Op2D::term(0, 2, LaurentR::one());
    d.anticommutator(&phi2)
}

/// Divergence-form second-order part `S`.
pub fn second_order_part(g: &GFunctions) -> Op2D {
    let inv_r = Op2D::multiplication(LaurentR::from_rational(-1, int(1)));
    let dr = Op2D::dr();
    let dphi = Op2D::dphi();
    let mul = |f: &LaurentR| Op2D::multiplication(f.clone());
    let r_times = |f: &LaurentR| laurent_scale_shift(f, 1);

    let t1 = inv_r
        .compose(&dr)
        .compose(&mul(&r_times(&g.g1).scale(&int(2))))
        .compose(&dr);
    let t2 = inv_r.compose(&dr).compose(&mul(&r_times(&g.g2))).compose(&dphi);
    let t3 = dphi.compose(&mul(&g.g2)).compose(&dr);
    let t4 = dphi.compose(&mul(&g.g3.scale(&int(2)))).compose(&dphi);
    t1.add(&t2).add(&t3).add(&t4).neg()
}

/// Outcome of integrating the two `G0` equations.
#[derive(Clone, Debug)]
pub struct G0Integration {
    /// `ρ_r / 2`
    pub g0_r: LaurentR,
    /// `r² ρ_φ / 2`
    pub g0_phi: LaurentR,
    /// `∫ g0_r dr` with zero constant.
    pub g0: LaurentR,
    /// `g0_phi - ∂φ g0`; zero when the system is compatible.
    pub cross_residual: LaurentR,
}

/// Read off `∂r G0`, `∂φ G0` from `[H, L2']` and integrate.
pub fn integrate_g0(h: &Op2D, l2_prime: &Op2D) -> Result<G0Integration> {
    let comm = op_commutator(h, l2_prime);
    if let Some(order) = comm.order() {
        if order > 1 {
            return Err(Error::Residual(format!(
                "[H, L2'] has order {order}; leading term {}",
                comm.leading_term().unwrap_or_default()
            )));
        }
    }
    let half = rat(1, 2);
    let g0_r = comm.coeff(1, 0).scale(&half);
    let g0_phi = laurent_scale_shift(&comm.coeff(0, 1), 2).scale(&half);
    let g0 = g0_r.integrate_r()?;
    let cross_residual = g0_phi.sub(&g0.dphi());
    Ok(G0Integration {
        g0_r,
        g0_phi,
        g0,
        cross_residual,
    })
}

/// `L2` for the model's `T` and constants.
pub fn build_l2(p: &SystemParams) -> Result<IntegralBundle> {
    build_l2_with(p, &CConstants::for_params(p), &t_function(p))
}

/// `L2` for arbitrary `T` and constants. Fails when the `G0` equations are
/// incompatible, carrying the cross-derivative residual.
pub fn build_l2_with(p: &SystemParams, c: &CConstants, t: &TrigRat) -> Result<IntegralBundle> {
    let (bundle, integ) = assemble(p, c, t)?;
    if !integ.cross_residual.is_zero() {
        return Err(Error::Integration(format!(
            "cross-derivative mismatch dphi(G0) - r^2 rho_phi/2 = {:?}",
            integ.cross_residual
        )));
    }
    Ok(bundle)
}

/// Like [`build_l2_with`] but keeps the radial integral even when the
/// angular equation disagrees. Used for negative controls.
pub fn build_l2_unchecked(p: &SystemParams, c: &CConstants, t: &TrigRat) -> Result<(IntegralBundle, G0Integration)> {
    assemble(p, c, t)
}

fn assemble(p: &SystemParams, c: &CConstants, t: &TrigRat) -> Result<(IntegralBundle, G0Integration)> {
    let omega2 = &p.omega * &p.omega;
    let g = g_functions(t, c, &omega2)?;
    let h = build_hamiltonian(p);
    let l2_prime = leading_part().add(&second_order_part(&g));
    let integ = integrate_g0(&h, &l2_prime)?;
    let l2 = l2_prime.add(&Op2D::multiplication(integ.g0.clone()));
    let bundle = IntegralBundle {
        params: p.clone(),
        l1: build_l1(p),
        h,
        l2,
        c: c.clone(),
        g1: g.g1,
        g2: g.g2,
        g3: g.g3,
        g0: integ.g0.clone(),
        t: t.clone(),
    };
    Ok((bundle, integ))
}

/// Residuals of the four first-order determining equations, in the form
/// valid for a potential `Ω r² + 2T'/r²`:
///
/// ```text
/// ∂r G1 = 0
/// r² ∂r G2 + ∂φ G1 = 2 cos 2φ T''
/// r³ ∂r G3 + r ∂φ G2 + 2 G1 = -6 sin 2φ T'' - 4 cos 2φ T' + 2Ω cos 2φ r⁴ + c10
/// r² ∂φ G3 + r G2 = -4 cos 2φ T'' + 4 sin 2φ T' - 2Ω sin 2φ r⁴
/// ```
pub fn determining_residuals(g: &GFunctions, t: &TrigRat, c: &CConstants, big_omega: &Rational) -> [LaurentR; 4] {
    let tp = t.dphi();
    let tpp = tp.dphi();
    let at = |k: i32, f: TrigRat| LaurentR::from_trig(k, f);
    let shift = |f: &LaurentR, n: i32| laurent_scale_shift(f, n);

    let e1 = g.g1.dr();
    let e2 = shift(&g.g2.dr(), 2)
        .add(&g.g1.dphi())
        .sub(&at(0, (&cos2() * &tpp).scale(&int(2))));
    let rhs3 = at(0, &(&(&s() * &tpp).scale(&int(-6)) - &(&cos2() * &tp).scale(&int(4))) + &k(&c.c10))
        .add(&at(4, cos2().scale(&(big_omega * int(2)))));
    let e3 = shift(&g.g3.dr(), 3)
        .add(&shift(&g.g2.dphi(), 1))
        .add(&g.g1.scale(&int(2)))
        .sub(&rhs3);
    let rhs4 = at(0, &(&cos2() * &tpp).scale(&int(-4)) + &(&s() * &tp).scale(&int(4)))
        .add(&at(4, s().scale(&(big_omega * int(-2)))));
    let e4 = shift(&g.g3.dphi(), 2).add(&shift(&g.g2, 1)).sub(&rhs4);
    [e1, e2, e3, e4]
}

/// The determining equations with the `ω²` terms exactly as first written:
/// `+4 cos 2φ ω² r⁴` in the third and `-4 sin 2φ ω² r³` in the fourth.
pub fn determining_residuals_printed(g: &GFunctions, t: &TrigRat, c: &CConstants, omega2: &Rational) -> [LaurentR; 4] {
    let mut out = determining_residuals(g, t, c, omega2);
    // undo the Ω terms and put the literal ones back
    let at = |k: i32, f: TrigRat| LaurentR::from_trig(k, f);
    out[2] = out[2]
        .sub(&at(4, cos2().scale(&(omega2 * int(2)))))
        .sub(&at(4, cos2().scale(&(omega2 * int(-4)))))
        .add(&at(0, k(&c.c10)));
    out[3] = out[3]
        .sub(&at(4, s().scale(&(omega2 * int(2)))))
        .add(&at(3, s().scale(&(omega2 * int(-4)))));
    out
}

/// Closed form of `∂r G0` for general `T` (with `c21 = c22 = 0`).
pub fn g0_r_closed(t: &TrigRat, c: &CConstants, omega2: &Rational) -> LaurentR {
    let d1 = t.dphi();
    let d2 = d1.dphi();
    let d4 = d2.dphi().dphi();
    let cs = cos2();
    let sn = s();
    let sum = |v: Vec<TrigRat>| v.iter().fold(TrigRat::zero(), |a, b| &a + b);

    let r1 = sum(vec![
        k(&(&c.c10 * int(4))),
        sn.scale(&c.c11),
        cs.scale(&-c.c12.clone()),
        (&sn * t).scale(&int(-8)),
        (&cs * &d1).scale(&int(8)),
        cs.scale(&int(8)),
    ])
    .scale(omega2);
    let rm3 = sum(vec![
        d1.scale(&(&c.c10 * int(-8))),
        (&sn * &d1).scale(&(&c.c11 * int(-2))),
        (&cs * &d2).scale(&c.c11),
        (&sn * &d2).scale(&c.c12),
        (&cs * &d1).scale(&(&c.c12 * int(2))),
        (&(&sn * t) * &d1).scale(&int(16)),
        (&(&cs * t) * &d2).scale(&int(-8)),
        (&(&sn * &d1) * &d2).scale(&int(-12)),
        (&sn * &d2).scale(&int(4)),
        &sn * &d4,
        (&(&cs * &d1) * &d1).scale(&int(-16)),
    ]);
    LaurentR::from_trig(1, r1).add(&LaurentR::from_trig(-3, rm3))
}

/// Closed form of `∂φ G0` for general `T` (with `c21 = c22 = 0`).
pub fn g0_phi_closed(t: &TrigRat, c: &CConstants, omega2: &Rational) -> LaurentR {
    let d1 = t.dphi();
    let d2 = d1.dphi();
    let d3 = d2.dphi();
    let d4 = d3.dphi();
    let cs = cos2();
    let sn = s();
    let sum = |v: Vec<TrigRat>| v.iter().fold(TrigRat::zero(), |a, b| &a + b);

    let r0 = d2.scale(&(&c.c30 * int(2)));
    let r2 = sum(vec![
        cs.scale(&c.c11),
        sn.scale(&c.c12),
        (&cs * t).scale(&int(-8)),
        (&sn * &d1).scale(&int(-12)),
        sn.scale(&int(-8)),
        (&cs * &d2).scale(&int(4)),
    ])
    .scale(omega2);
    let rm2 = sum(vec![
        d2.scale(&(&c.c10 * int(2))),
        (&sn * &d2).scale(&-c.c11.clone()),
        (&cs * &d1).scale(&(&c.c11 * int(-2))),
        (&sn * &d1).scale(&(&c.c12 * int(-2))),
        (&cs * &d2).scale(&c.c12),
        (&(&sn * t) * &d2).scale(&int(8)),
        (&(&cs * t) * &d1).scale(&int(16)),
        (&(&sn * &d1) * &d1).scale(&int(24)),
        (&sn * &d1).scale(&int(32)),
        (&sn * &d3).scale(&int(-22)),
        (&(&cs * &d1) * &d2).scale(&int(-16)),
        (&cs * &d2).scale(&int(-44)),
        (&cs * &d4).scale(&int(4)),
    ]);
    LaurentR::from_trig(0, r0)
        .add(&LaurentR::from_trig(2, r2))
        .add(&LaurentR::from_trig(-2, rm2))
}

/// Which sign the `tan 2φ (T'')²` term carries in the nonlinear equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TEquationForm {
    /// `-12 tan 2φ (T'')²`, the form that follows from the compatibility of
    /// the `G0` equations.
    Derived,
    /// `+12 tan 2φ (T'')²`
    Printed,
}

/// Residual of the nonlinear equation for `T` (with `c10 = 0`).
pub fn t_equation_residual(t: &TrigRat, c11: &Rational, c12: &Rational, form: TEquationForm) -> Result<TrigRat> {
    let d1 = t.dphi();
    let d2 = d1.dphi();
    let d3 = d2.dphi();
    let d4 = d3.dphi();
    let d5 = d4.dphi();
    let tan2 = TrigRat::tan2phi();
    let sq = match form {
        TEquationForm::Derived => int(-12),
        TEquationForm::Printed => int(12),
    };
    let mut acc = (&(&tan2 * &d2) * &d2).scale(&sq);
    acc = &acc + &(&tan2 * &d5);
    acc = &acc + &d4.scale(&int(10));
    let f3 = &(&(&(&tan2 * &d1).scale(&int(-12)) - &t.scale(&int(8))) + &tan2.scale(&(c12 - int(40))))
        + &k(c11);
    acc = &acc + &(&f3 * &d3);
    let f2 = &(&(&(&tan2 * t).scale(&int(48)) - &d1.scale(&int(96))) - &tan2.scale(&(c11 * int(6))))
        + &k(&(c12 * int(6) - int(80)));
    acc = &acc + &(&f2 * &d2);
    acc = &acc + &(&(&tan2 * &d1) * &d1).scale(&int(96));
    let f1 = &(&(&t.scale(&int(64)) + &tan2.scale(&int(64))) - &k(&(c11 * int(8)))) - &tan2.scale(&(c12 * int(8)));
    acc = &acc + &(&f1 * &d1);
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::hamiltonian::t_printed;

    #[test]
    fn reference_constants() {
        let c = CConstants::for_params(&SystemParams::reference());
        assert_eq!(c.c12, int(42));
        assert!(c.c11.is_zero());
    }

    #[test]
    fn determining_equations_hold() {
        let p = SystemParams::reference();
        let c = CConstants::for_params(&p);
        let t = t_function(&p);
        let g = g_functions(&t, &c, &int(1)).unwrap();
        for (i, e) in determining_residuals(&g, &t, &c, &int(1)).iter().enumerate() {
            assert!(e.is_zero(), "equation {} residual {:?}", i + 1, e);
        }
        let printed = determining_residuals_printed(&g, &t, &c, &int(1));
        assert!(printed[0].is_zero() && printed[1].is_zero());
        assert!(!printed[2].is_zero() && !printed[3].is_zero());
    }

    #[test]
    fn t_equation() {
        let p = SystemParams::reference();
        let c = CConstants::for_params(&p);
        let t = t_function(&p);
        assert!(t_equation_residual(&t, &c.c11, &c.c12, TEquationForm::Derived).unwrap().is_zero());
        assert!(!t_equation_residual(&t, &c.c11, &c.c12, TEquationForm::Printed).unwrap().is_zero());
        assert!(!t_equation_residual(&t, &c.c11, &(&c.c12 + int(1)), TEquationForm::Derived).unwrap().is_zero());
        assert!(!t_equation_residual(&t_printed(&p), &c.c11, &c.c12, TEquationForm::Derived).unwrap().is_zero());
    }

    #[test]
    fn half_angle_constants_rejected() {
        let p = SystemParams::reference();
        let mut c = CConstants::for_params(&p);
        c.c21 = int(1);
        assert!(g_functions(&t_function(&p), &c, &int(1)).is_err());
    }
}

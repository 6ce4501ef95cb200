//! The second-degree equation satisfied by `W` and its Painlevé VI data.
//!
//! `T` and `W` are related by
//! `T = -2W / (sin φ cos φ) - (α² - αβ + β² + 7/4) / tan 2φ` with
//! `y = (1 + cos 2φ)/2 = (1 - x)/2`, so in ring terms `W = (K x - T s) / 4`.
//! `W(y)` then solves
//!
//! ```text
//! y²(1-y)²(W'')² + 4W'(yW'-W)² - 4(W')²(yW'-W) + 4q7(W')² + 4q9 W' + 4q8(yW'-W) + 4q10 = 0
//! ```
//!
//! [`SdForm::AsPrinted`] swaps the `q8`, `q9` slots; it is kept so reports
//! can show which reading closes.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::exact::rational::{fmt_rational, int, rat, to_f64};
use crate::exact::{Poly, RatFn, Rational, TrigRat};
use crate::model::hamiltonian::t_function;
use crate::model::params::{ser_rational, SystemParams};

/// Cosgrove constants; `q1..q6` are fixed at `0, 1, -1, 0, 0, 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QConstants {
    #[serde(serialize_with = "ser_rational")]
    pub q7: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub q8: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub q9: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub q10: Rational,
}

impl QConstants {
    pub const Q1_TO_Q6: [i64; 6] = [0, 1, -1, 0, 0, 0];

    pub fn zero() -> Self {
        QConstants {
            q7: Rational::zero(),
            q8: Rational::zero(),
            q9: Rational::zero(),
            q10: Rational::zero(),
        }
    }
}

/// Which closed forms to use for `W` and the `q`'s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Forms that make the equations close.
    Derived,
    /// Forms exactly as first written.
    AsPrinted,
}

/// Slot layout of the `q8`, `q9` terms in the second-degree equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SdForm {
    /// `4q9 W' + 4q8 (yW' - W)`
    Derived,
    /// `4q8 W' + 4q9 (yW' - W)`
    AsPrinted,
}

fn sq(q: &Rational) -> Rational {
    q * q
}

/// `K = α² - αβ + β² + 7/4`
pub fn k_constant(p: &SystemParams) -> Rational {
    p.sigma() + rat(7, 4)
}

/// `q7..q10`.
///
/// Derived: `4q9 = -¼(2α²+β²)(α-β)² - αβ - β² - 1` and
/// `4q10 = -(1/16)(α²+αβ+β²-2)(α-β)⁴ - ½(α²+β²)`. As printed the first
/// term of `4q9` has a plus sign and `4q10` carries `(α-β)²`.
pub fn q_constants(p: &SystemParams, v: Variant) -> QConstants {
    let (a, b) = (&p.alpha, &p.beta);
    let d = p.delta();
    let d2 = sq(&d);
    let quarter = rat(1, 4);
    let q7 = -(p.sigma() + int(2)) / int(4);
    let q8 = (a + b) * &d * (&d + int(2)) * (&d - int(2)) / int(16);
    let first = (sq(a) * int(2) + sq(b)) * &d2 * &quarter;
    let rest = -(a * b) - sq(b) - int(1);
    let four_q9 = match v {
        Variant::Derived => -first + rest,
        Variant::AsPrinted => first + rest,
    };
    let power = match v {
        Variant::Derived => sq(&d2),
        Variant::AsPrinted => d2.clone(),
    };
    let four_q10 = -(sq(a) + a * b + sq(b) - int(2)) * power / int(16) - (sq(a) + sq(b)) / int(2);
    QConstants {
        q7,
        q8,
        q9: four_q9 / int(4),
        q10: four_q10 / int(4),
    }
}

/// `P_1^{-α-1, β-1}(1 - 2y) = -α - (β - α) y`
pub fn seed_polynomial(p: &SystemParams) -> Poly {
    Poly::new(vec![-p.alpha.clone(), -(&p.beta - &p.alpha)])
}

/// Explicit rational `W(y)`.
///
/// Derived: `(α-β)²(1-2y)/8 + (α+β)((α-β)²-4)/(8(β-α)) + αβ/(α-β)² ∂y log P1`.
/// As printed the constant has `α-β` in the denominator and the last
/// coefficient is `1/(α-β)²`.
pub fn w_explicit(p: &SystemParams, v: Variant) -> RatFn {
    let d = p.delta();
    let d2 = sq(&d);
    let linear = RatFn::from_poly(Poly::new(vec![d2.clone() / int(8), -d2.clone() / int(4)]));
    let num = (&p.alpha + &p.beta) * (&d2 - int(4));
    let (constant, log_coeff) = match v {
        Variant::Derived => (num / (-&d * int(8)), &p.alpha * &p.beta / &d2),
        Variant::AsPrinted => (num / (&d * int(8)), Rational::one() / &d2),
    };
    let seed = seed_polynomial(p);
    let log_der = RatFn::new(seed.derivative(), seed).expect("nonzero seed");
    &(&linear + &RatFn::constant(constant)) + &log_der.scale(&log_coeff)
}

/// Second-degree equation residual as a single reduced rational function.
pub fn sd1_residual(w: &RatFn, q: &QConstants, form: SdForm) -> RatFn {
    let w1 = w.derivative();
    let w2 = w1.derivative();
    let y = RatFn::x();
    let y1 = RatFn::from_poly(Poly::from_ints(&[1, -1]));
    let u = &(&y * &w1) - w; // yW' - W
    let four = int(4);
    let mut acc = &(&(&(&y * &y) * &(&y1 * &y1)) * &w2) * &w2;
    acc = &acc + &(&(&w1 * &u) * &u).scale(&four);
    acc = &acc - &(&(&w1 * &w1) * &u).scale(&four);
    acc = &acc + &(&w1 * &w1).scale(&(&q.q7 * &four));
    let (on_w1, on_u) = match form {
        SdForm::Derived => (&q.q9, &q.q8),
        SdForm::AsPrinted => (&q.q8, &q.q9),
    };
    acc = &acc + &w1.scale(&(on_w1 * &four));
    acc = &acc + &u.scale(&(on_u * &four));
    &acc + &RatFn::constant(&q.q10 * &four)
}

/// `W` as a function of `x` recovered from `T`: `W = (K x - T s)/4`.
pub fn w_from_t(t: &TrigRat, k: &Rational) -> Option<RatFn> {
    let ts = t * &TrigRat::s();
    if !ts.odd.is_zero() {
        return None;
    }
    let kx = RatFn::from_poly(Poly::new(vec![Rational::zero(), k.clone()]));
    Some((&kx - &ts.even).scale(&rat(1, 4)))
}

/// `W(y)` pulled back to `x` through `y = (1 - x)/2`.
pub fn w_in_x(w_y: &RatFn) -> RatFn {
    w_y.compose_affine(&rat(-1, 2), &rat(1, 2))
}

/// `-2W/(sin φ cos φ) - K/tan 2φ = (K x - 4W)/s` in the ring.
pub fn t_from_w(w_x: &RatFn, k: &Rational) -> TrigRat {
    let kx = RatFn::from_poly(Poly::new(vec![Rational::zero(), k.clone()]));
    // (Kx - 4W)/s = (Kx - 4W) s / (1 - x²)
    let one_minus_x2 = RatFn::from_poly(Poly::from_ints(&[1, 0, -1]));
    let num = &kx - &w_x.scale(&int(4));
    TrigRat::odd(num.checked_div(&one_minus_x2).expect("nonzero"))
}

/// `T` from the integral equals the transform of the explicit `W`, exactly.
pub fn t_w_consistency(p: &SystemParams) -> bool {
    t_w_consistency_with(p, &k_constant(p), Variant::Derived)
}

pub fn t_w_consistency_with(p: &SystemParams, k: &Rational, v: Variant) -> bool {
    t_from_w(&w_in_x(&w_explicit(p, v)), k) == t_function(p)
}

/// Numeric spot check of the same identity at an angle.
pub fn t_w_gap_at(p: &SystemParams, k: &Rational, v: Variant, phi: f64) -> f64 {
    let w = w_explicit(p, v);
    let y = 0.5 * (1.0 + (2.0 * phi).cos());
    let rhs = -2.0 * w.eval_f64(y) / (phi.sin() * phi.cos()) - to_f64(k) / (2.0 * phi).tan();
    t_function(p).eval_phi(phi) - rhs
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaSet {
    #[serde(serialize_with = "ser_rational")]
    pub gamma1: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub gamma2: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub gamma3: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub gamma4: Rational,
    /// `+1` for `(α-β+1)²/2`, `-1` for `(α-β-1)²/2`.
    pub sign: i8,
    /// `√(2γ1) = |α - β ± 1|`, never a floating root.
    #[serde(serialize_with = "ser_rational")]
    pub sqrt_two_gamma1: Rational,
}

pub fn gamma_set(p: &SystemParams, sign: i8) -> GammaSet {
    let root = p.delta() + int(sign as i64);
    GammaSet {
        gamma1: sq(&root) / int(2),
        gamma2: -sq(&p.alpha) / int(2),
        gamma3: sq(&p.beta) / int(2),
        gamma4: rat(-3, 2),
        sign,
        sqrt_two_gamma1: root.abs(),
    }
}

/// Sign of `γ1` in the relation for `-4q7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Q7Relation {
    /// `-4q7 = γ1 - γ2 + γ3 - γ4 - √(2γ1) + 1`
    Derived,
    /// `-4q7 = -γ1 - γ2 + γ3 - γ4 - √(2γ1) + 1`
    AsPrinted,
}

/// Right-hand sides of the four Painlevé VI parameter relations, i.e. the
/// predicted `(-4q7, -4q8, -4q9, -4q10)`.
pub fn pvi_rhs(g: &GammaSet, form: Q7Relation) -> [Rational; 4] {
    let (g1, g2, g3, g4, r) = (&g.gamma1, &g.gamma2, &g.gamma3, &g.gamma4, &g.sqrt_two_gamma1);
    let first = match form {
        Q7Relation::Derived => g1.clone(),
        Q7Relation::AsPrinted => -g1.clone(),
    };
    let quarter = rat(1, 4);
    let r7 = first - g2 + g3 - g4 - r + int(1);
    let r8 = (g2 + g3) * (g1 + g4 - r);
    let r9 = (g3 - g2) * (g1 - g4 - r + int(1)) + sq(&(g1 - g2 - g3 + g4 - r)) * &quarter;
    let r10 = (g3 - g2) * sq(&(g1 + g4 - r)) * &quarter + sq(&(g2 + g3)) * (g1 - g4 - r + int(1)) * &quarter;
    [r7, r8, r9, r10]
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchResult {
    pub sign: i8,
    pub gammas: GammaSet,
    pub satisfied: [bool; 4],
    pub residuals: [String; 4],
    pub all: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PviCheck {
    pub plus_branch: bool,
    pub minus_branch: bool,
    pub branches: Vec<BranchResult>,
}

/// Substitute both `γ1` branches into the relations and compare with `q`.
pub fn pvi_parameter_check(p: &SystemParams, q: &QConstants, form: Q7Relation) -> PviCheck {
    let target = [&q.q7, &q.q8, &q.q9, &q.q10].map(|x| x * int(-4));
    let branches: Vec<BranchResult> = [1i8, -1]
        .iter()
        .map(|&sign| {
            let g = gamma_set(p, sign);
            let rhs = pvi_rhs(&g, form);
            let diff: Vec<Rational> = rhs.iter().zip(&target).map(|(a, b)| a - b).collect();
            let satisfied = [0, 1, 2, 3].map(|i| diff[i].is_zero());
            BranchResult {
                sign,
                gammas: g,
                satisfied,
                residuals: [0, 1, 2, 3].map(|i| fmt_rational(&diff[i])),
                all: satisfied.iter().all(|&b| b),
            }
        })
        .collect();
    PviCheck {
        plus_branch: branches[0].all,
        minus_branch: branches[1].all,
        branches,
    }
}

/// Machine-readable summary for one parameter set.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PainleveReport {
    pub params: SystemParams,
    pub q: QConstants,
    pub q_as_printed: QConstants,
    pub gamma_branches: PviCheck,
    pub gamma_branches_as_printed: PviCheck,
    pub residual_zero: bool,
    pub residual_zero_as_printed: bool,
    pub t_w_consistent: bool,
    pub t_w_consistent_as_printed: bool,
    /// Location of the single simple pole of `W` in `y`.
    #[serde(serialize_with = "ser_rational")]
    pub w_pole: Rational,
}

pub fn painleve_report(p: &SystemParams) -> Result<PainleveReport> {
    let q = q_constants(p, Variant::Derived);
    let qp = q_constants(p, Variant::AsPrinted);
    let w = w_explicit(p, Variant::Derived);
    let wp = w_explicit(p, Variant::AsPrinted);
    Ok(PainleveReport {
        params: p.clone(),
        gamma_branches: pvi_parameter_check(p, &q, Q7Relation::Derived),
        gamma_branches_as_printed: pvi_parameter_check(p, &qp, Q7Relation::AsPrinted),
        residual_zero: sd1_residual(&w, &q, SdForm::Derived).is_zero(),
        residual_zero_as_printed: sd1_residual(&wp, &qp, SdForm::AsPrinted).is_zero(),
        t_w_consistent: t_w_consistency(p),
        t_w_consistent_as_printed: t_w_consistency_with(p, &k_constant(p), Variant::AsPrinted),
        w_pole: &p.alpha / p.delta(),
        q,
        q_as_printed: qp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference() -> SystemParams {
        SystemParams::reference()
    }

    #[test]
    fn q_values_at_reference() {
        let q = q_constants(&reference(), Variant::AsPrinted);
        assert_eq!(q.q7, rat(-5, 4));
        assert_eq!(q.q8, rat(9, 16));
        assert_eq!(q.q9, rat(-11, 8));
        assert_eq!(q.q10, rat(-45, 64));
        let d = q_constants(&reference(), Variant::Derived);
        assert_eq!(d.q9, rat(-17, 8));
        assert_eq!(d.q10, rat(-45, 64));
    }

    #[test]
    fn w_pieces() {
        let p = reference();
        let d = w_explicit(&p, Variant::Derived);
        assert_eq!(d.den(), &Poly::from_ints(&[1, 1]));
        assert_eq!(d.eval(&int(0)).unwrap(), int(1));
        let w = w_explicit(&p, Variant::AsPrinted);
        assert_eq!(w.eval(&int(0)).unwrap(), rat(9, 4));
    }

    #[test]
    fn sd1_closes_with_derived_forms() {
        let p = reference();
        let w = w_explicit(&p, Variant::Derived);
        assert!(sd1_residual(&w, &q_constants(&p, Variant::Derived), SdForm::Derived).is_zero());
        let wp = w_explicit(&p, Variant::AsPrinted);
        assert!(!sd1_residual(&wp, &q_constants(&p, Variant::AsPrinted), SdForm::AsPrinted).is_zero());
        assert!(sd1_residual(&RatFn::zero(), &QConstants::zero(), SdForm::Derived).is_zero());
        let shifted = &w + &RatFn::one();
        let r = sd1_residual(&shifted, &q_constants(&p, Variant::Derived), SdForm::Derived);
        assert!(r.eval_f64(1.0 / 3.0).abs() > 1e-6);
    }

    #[test]
    fn t_and_w_agree() {
        let p = reference();
        assert!(t_w_consistency(&p));
        assert!(!t_w_consistency_with(&p, &(p.sigma() + rat(3, 4)), Variant::Derived));
        assert!(t_w_gap_at(&p, &k_constant(&p), Variant::Derived, std::f64::consts::PI / 5.0).abs() < 1e-12);
        assert!(t_w_gap_at(&p, &(p.sigma() + rat(3, 4)), Variant::Derived, std::f64::consts::PI / 5.0).abs() > 1e-3);
        let w = w_from_t(&t_function(&p), &k_constant(&p)).unwrap();
        assert_eq!(w, w_in_x(&w_explicit(&p, Variant::Derived)));
    }

    #[test]
    fn gamma_values() {
        let p = reference();
        let plus = gamma_set(&p, 1);
        let minus = gamma_set(&p, -1);
        assert_eq!(plus.gamma1, int(0));
        assert_eq!(minus.gamma1, int(2));
        assert_eq!(plus.gamma2, rat(-1, 2));
        assert_eq!(plus.gamma3, int(2));
        assert_eq!(plus.gamma4, rat(-3, 2));
    }

    #[test]
    fn minus_branch_closes() {
        let p = reference();
        let check = pvi_parameter_check(&p, &q_constants(&p, Variant::Derived), Q7Relation::Derived);
        assert!(check.minus_branch);
        // with β - α ≤ 1 the two roots give the same relations
        assert!(check.plus_branch);
        let p = SystemParams::from_ints(1, 3, 1);
        let check = pvi_parameter_check(&p, &q_constants(&p, Variant::Derived), Q7Relation::Derived);
        assert!(check.minus_branch && !check.plus_branch);
        let printed = pvi_parameter_check(&p, &q_constants(&p, Variant::AsPrinted), Q7Relation::AsPrinted);
        assert!(!printed.minus_branch && !printed.plus_branch);
    }
}

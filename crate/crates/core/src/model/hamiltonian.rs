//! The Hamiltonian, the separated angular operator `L1` and the
//! factorization `L1 = A A† + (α - β - 1)²`.

use crate::diffop::Op2D;
use crate::exact::rational::{int, rat};
use crate::exact::{LaurentR, RatFn, Rational, TrigRat};

use super::params::SystemParams;

fn quarter_shift(a: &Rational) -> Rational {
    a * a - rat(1, 4)
}

/// `(α²-1/4)/cos²φ + (β²-1/4)/sin²φ + 8(1 + b cos 2φ)/(b + cos 2φ)²`
/// written as `2(α²-1/4)/(1-x) + 2(β²-1/4)/(1+x) + 8(1-bx)/(b-x)²`.
pub fn angular_potential(p: &SystemParams) -> TrigRat {
    let a = RatFn::pole(-quarter_shift(&p.alpha) * int(2), &int(1), 1);
    let c = RatFn::pole(quarter_shift(&p.beta) * int(2), &int(-1), 1);
    // 8(1 - bx)/(x - b)² = -8b/(x-b) + 8(1 - b²)/(x-b)²
    let d1 = RatFn::pole(&p.b * int(-8), &p.b, 1);
    let d2 = RatFn::pole((int(1) - &p.b * &p.b) * int(8), &p.b, 2);
    TrigRat::even(&(&(&a + &c) + &d1) + &d2)
}

/// Angular potential with `α → α+1`, `β → β-1` and no rational term.
pub fn partner_potential(p: &SystemParams) -> TrigRat {
    let a1 = &p.alpha + int(1);
    let b1 = &p.beta - int(1);
    let a = RatFn::pole(-quarter_shift(&a1) * int(2), &int(1), 1);
    let c = RatFn::pole(quarter_shift(&b1) * int(2), &int(-1), 1);
    TrigRat::even(&a + &c)
}

/// The function `T(φ)` with `V_ang = 2 T'`:
/// `T = ½(α²-¼) tan φ - ½(β²-¼) cot φ + 2 sin 2φ / (b + cos 2φ)`.
pub fn t_function(p: &SystemParams) -> TrigRat {
    t_with(p, rat(1, 2), int(2))
}

/// `T` with `¼` and `4` in place of `½` and `2`; its derivative is not half
/// the angular potential.
pub fn t_printed(p: &SystemParams) -> TrigRat {
    t_with(p, rat(1, 4), int(4))
}

fn t_with(p: &SystemParams, half: Rational, two: Rational) -> TrigRat {
    let tan = TrigRat::tan_phi().scale(&(quarter_shift(&p.alpha) * &half));
    let cot = TrigRat::cot_phi().scale(&(-quarter_shift(&p.beta) * &half));
    // sin 2φ / (b + cos 2φ) = s / (b - x) = -s / (x - b)
    let rational = TrigRat::odd(RatFn::pole(-two, &p.b, 1));
    &(&tan + &cot) + &rational
}

/// `ξ'/ξ` for `ξ = cos^{-α-½}φ sin^{β-½}φ (b + cos 2φ)`.
pub fn superpotential(p: &SystemParams) -> TrigRat {
    let a = RatFn::pole(-(&p.alpha + rat(1, 2)), &int(1), 1);
    let b = RatFn::pole(&p.beta - rat(1, 2), &int(-1), 1);
    let c = RatFn::pole(int(2), &p.b, 1);
    TrigRat::odd(&(&a + &b) + &c)
}

/// `A = ∂φ - ξ'/ξ`
pub fn a_operator(p: &SystemParams) -> Op2D {
    Op2D::dphi().sub(&Op2D::trig(0, superpotential(p)))
}

/// `A† = -∂φ - ξ'/ξ`
pub fn a_dagger(p: &SystemParams) -> Op2D {
    Op2D::dphi().neg().sub(&Op2D::trig(0, superpotential(p)))
}

/// `-∂r² - r⁻¹∂r - r⁻²∂φ²`
pub fn minus_laplacian() -> Op2D {
    Op2D::term(2, 0, LaurentR::from_rational(0, int(-1)))
        .add(&Op2D::term(1, 0, LaurentR::from_rational(-1, int(-1))))
        .add(&Op2D::term(0, 2, LaurentR::from_rational(-2, int(-1))))
}

/// `H = -Δ + ω² r² + r⁻² V_ang`
pub fn build_hamiltonian(p: &SystemParams) -> Op2D {
    minus_laplacian()
        .add(&Op2D::multiplication(LaurentR::from_rational(2, &p.omega * &p.omega)))
        .add(&Op2D::trig(-2, angular_potential(p)))
}

/// `L1 = -∂φ² + V_ang`
pub fn build_l1(p: &SystemParams) -> Op2D {
    Op2D::term(0, 2, LaurentR::from_rational(0, int(-1))).add(&Op2D::trig(0, angular_potential(p)))
}

/// `-∂φ² + V_partner + ...`, the reversed factorization `A†A + (α-β-1)²`.
pub fn build_partner(p: &SystemParams) -> Op2D {
    Op2D::term(0, 2, LaurentR::from_rational(0, int(-1))).add(&Op2D::trig(0, partner_potential(p)))
}

/// `(α - β - 1)²`
pub fn factorization_shift(p: &SystemParams) -> Rational {
    let d = p.delta() - int(1);
    &d * &d
}

//! Laguerre, Jacobi and exceptional Jacobi polynomials.
//!
//! Normalizations: `L_m^C(0) = C(m+C, m)` and `P_n^{a,b}(1) = C(n+a, n)`,
//! both with generalized binomials. Every eigenvalue check below is
//! insensitive to them.

use num_traits::{One, Zero};

use crate::diffop::QuasiPoly;
use crate::error::{Error, Result};
use crate::exact::rational::{int, rat, rising_binomial};
use crate::exact::{Poly, RatFn, Rational, TrigRat};
use crate::model::hamiltonian::a_operator;
use crate::model::params::SystemParams;

/// `L_m^C(y)`, from `c_{k+1} = -c_k (m-k) / ((k+1)(C+k+1))`.
pub fn laguerre(m: u32, c: &Rational) -> Poly {
    let mut coeffs = Vec::with_capacity(m as usize + 1);
    let mut ck = rising_binomial(c, m);
    for k in 0..=m {
        coeffs.push(ck.clone());
        if k < m {
            let k1 = int(k as i64 + 1);
            ck = -ck * int((m - k) as i64) / (&k1 * (c + &k1));
        }
    }
    Poly::new(coeffs)
}

/// `yF'' + (C+1-y)F' + mF`
pub fn laguerre_residual(f: &Poly, m: u32, c: &Rational) -> Poly {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let y = Poly::x();
    let a = &y * &d2;
    let b = &Poly::new(vec![c + int(1), int(-1)]) * &d1;
    &(&a + &b) + &f.scale(&int(m as i64))
}

/// `P_n^{a,b}(z) = Σ_s C(n+a, n-s) C(n+b, s) ((z-1)/2)^s ((z+1)/2)^{n-s}`
pub fn jacobi(n: u32, a: &Rational, b: &Rational) -> Poly {
    let zm = Poly::new(vec![rat(-1, 2), rat(1, 2)]);
    let zp = Poly::new(vec![rat(1, 2), rat(1, 2)]);
    let mut out = Poly::zero();
    for s in 0..=n {
        // C(n+a, n-s) = C((a+s) + (n-s), n-s)
        let c1 = rising_binomial(&(a + int(s as i64)), n - s);
        let c2 = rising_binomial(&(b + int((n - s) as i64)), s);
        let term = &zm.pow(s) * &zp.pow(n - s);
        out = &out + &term.scale(&(c1 * c2));
    }
    out
}

/// `(1-z²)P'' + (b-a-(a+b+2)z)P' + n(n+a+b+1)P`
pub fn jacobi_residual(f: &Poly, n: u32, a: &Rational, b: &Rational) -> Poly {
    let d1 = f.derivative();
    let d2 = d1.derivative();
    let one_minus_z2 = Poly::from_ints(&[1, 0, -1]);
    let lin = Poly::new(vec![b - a, -(a + b + int(2))]);
    let nn = int(n as i64);
    let ev = &nn * (&nn + a + b + int(1));
    &(&(&one_minus_z2 * &d2) + &(&lin * &d1)) + &f.scale(&ev)
}

/// Gauge exponents of `G_x = (1-x)^{α/2+1/4} (1+x)^{β/2+1/4} / (x-b)`.
pub fn gauge_exponents(p: &SystemParams) -> (Rational, Rational) {
    (&p.alpha / int(2) + rat(1, 4), &p.beta / int(2) + rat(1, 4))
}

/// `Ψ_n = cos^{α+3/2}φ sin^{β-1/2}φ P_n^{α+1,β-1}(x)` up to a constant,
/// using `cos²φ = (1-x)/2`, `sin²φ = (1+x)/2`.
pub fn psi_state(n: u32, p: &SystemParams) -> QuasiPoly {
    let jac = jacobi(n, &(&p.alpha + int(1)), &(&p.beta - int(1)));
    QuasiPoly::angular(
        (&p.alpha + rat(3, 2)) / int(2),
        (&p.beta - rat(1, 2)) / int(2),
        0,
        Some(p.b.clone()),
        TrigRat::even(RatFn::from_poly(jac)),
    )
}

/// `Φ_n = A Ψ_n`.
pub fn phi_state(n: u32, p: &SystemParams) -> Result<QuasiPoly> {
    psi_state(n, p).apply(&a_operator(p))
}

/// `X_n = Φ_n / G_x` as a polynomial in `x` (up to a constant).
pub fn xjacobi(n: u32, p: &SystemParams) -> Result<Poly> {
    strip_gauge(&phi_state(n, p)?, p)
}

/// Divide an angular [`QuasiPoly`] by `G_x`, folding `s = (1-x)^{1/2}(1+x)^{1/2}`.
pub fn strip_gauge(phi: &QuasiPoly, p: &SystemParams) -> Result<Poly> {
    let body = phi.body.coeff(0);
    if phi.body.len() != 1 || !phi.c.is_zero() || !phi.gauss.is_zero() {
        return Err(Error::NonClosure("state depends on r".into()));
    }
    let (g, half) = if body.even.is_zero() {
        (body.odd.clone(), rat(1, 2))
    } else if body.odd.is_zero() {
        (body.even.clone(), Rational::zero())
    } else {
        return Err(Error::NonClosure("mixed s-parity".into()));
    };
    let (gp, gq) = gauge_exponents(p);
    let ep = &phi.p + &half - gp;
    let eq = &phi.q + &half - gq;
    let ek = phi.k + 1;
    let as_power = |e: &Rational, what: &str| -> Result<u32> {
        if e.is_integer() && *e >= Rational::zero() {
            Ok(e.to_integer().try_into().unwrap_or(u32::MAX))
        } else {
            Err(Error::NonClosure(format!("{what} exponent {e} left after removing the gauge")))
        }
    };
    let mut out = g;
    out = &out * &RatFn::from_poly(Poly::from_ints(&[1, -1]).pow(as_power(&ep, "(1-x)")?));
    out = &out * &RatFn::from_poly(Poly::from_ints(&[1, 1]).pow(as_power(&eq, "(1+x)")?));
    if ek != 0 {
        let lin = Poly::linear_root(&p.b);
        let f = RatFn::from_poly(lin.pow(ek.unsigned_abs()));
        out = if ek > 0 { &out * &f } else { out.checked_div(&f)? };
    }
    if !out.is_polynomial() {
        return Err(Error::NonClosure(format!("X has denominator {}", out.den())));
    }
    Ok(out.num().scale(&(Rational::one() / out.den().leading())))
}

/// `T^{α,β} X = 4(x²-1)X'' + 4(β-α)(1-bx)/(b-x)((x-b+2/(α-β))X' - X) + (α+β+1)²X`
pub fn t_operator_apply(p: &SystemParams, f: &Poly) -> RatFn {
    let d1 = RatFn::from_poly(f.derivative());
    let d2 = RatFn::from_poly(f.derivative().derivative());
    let fr = RatFn::from_poly(f.clone());
    let lead = RatFn::from_poly(Poly::from_ints(&[-4, 0, 4]));
    let num = Poly::new(vec![int(1), -p.b.clone()]).scale(&((&p.beta - &p.alpha) * int(4)));
    let den = Poly::new(vec![p.b.clone(), int(-1)]);
    let coef = RatFn::new(num, den).expect("b-x is nonzero");
    let shift = Poly::new(vec![-&p.b + int(2) / p.delta(), int(1)]);
    let inner = &(&RatFn::from_poly(shift) * &d1) - &fr;
    let c0 = &p.alpha + &p.beta + int(1);
    &(&(&lead * &d2) + &(&coef * &inner)) + &fr.scale(&(&c0 * &c0))
}

/// `C_n² = (2n + α + β + 1)²`
pub fn c_squared(n: u32, p: &SystemParams) -> Rational {
    let c = p.c_n(n);
    &c * &c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_low_orders() {
        assert_eq!(laguerre(0, &int(6)), Poly::one());
        assert_eq!(laguerre(1, &int(6)), Poly::from_ints(&[7, -1]));
        for m in 0..6 {
            assert!(laguerre_residual(&laguerre(m, &rat(3, 2)), m, &rat(3, 2)).is_zero());
        }
        assert!(!laguerre_residual(&laguerre(3, &int(1)), 2, &int(1)).is_zero());
    }

    #[test]
    fn jacobi_normalization_and_ode() {
        assert_eq!(jacobi(0, &int(2), &int(1)), Poly::one());
        // P_1^{a,b}(z) = ((a+b+2)z + (a-b))/2
        assert_eq!(jacobi(1, &int(-2), &int(1)), Poly::new(vec![rat(-3, 2), rat(1, 2)]));
        assert!(jacobi_residual(&jacobi(3, &int(2), &int(1)), 3, &int(2), &int(1)).is_zero());
        let (a, b) = (rat(-7, 3), rat(5, 4));
        for n in 0..6 {
            let pn = jacobi(n, &a, &b);
            assert!(jacobi_residual(&pn, n, &a, &b).is_zero());
            assert_eq!(pn.eval(&int(1)), rising_binomial(&a, n));
        }
    }

    #[test]
    fn seed_factor_is_degree_one_jacobi() {
        // P_1^{-2,1}(x) at (α,β) = (1,2) is a multiple of x - 3 = x - b
        let p = SystemParams::reference();
        let p1 = jacobi(1, &(-&p.alpha - int(1)), &(&p.beta - int(1)));
        assert_eq!(p1.eval(&p.b), int(0));
    }

    #[test]
    fn exceptional_polynomials_are_t_eigenfunctions() {
        let p = SystemParams::reference();
        for n in 0..5 {
            let x = xjacobi(n, &p).unwrap();
            assert_eq!(x.degree(), Some(n as usize + 1));
            let tx = t_operator_apply(&p, &x);
            assert_eq!(tx, RatFn::from_poly(x.scale(&c_squared(n, &p))), "n = {n}");
        }
    }
}

//! Trigonometric functions of the polar angle as exact algebraic objects.
//!
//! With `x = -cos 2φ` and `s = sin 2φ`, every coefficient in the model lives in
//! the quadratic extension `Q(x)[s] / (s² - (1 - x²))`. An element is stored as
//! `even(x) + odd(x)·s`; that pair is unique. On the wedge `0 < φ < π/2` the
//! branch `s > 0` is fixed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::{forward_owned, Poly};
use super::ratfn::RatFn;
use super::rational::{int, rat, Rational};
use crate::error::Result;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TrigRat {
    pub even: RatFn,
    pub odd: RatFn,
}

/// `1 - x²`, the value of `s²`.
fn one_minus_x2() -> RatFn {
    RatFn::from_poly(Poly::from_ints(&[1, 0, -1]))
}

impl TrigRat {
    pub fn new(even: RatFn, odd: RatFn) -> Self {
        TrigRat { even, odd }
    }

    pub fn zero() -> Self {
        TrigRat::default()
    }

    pub fn one() -> Self {
        TrigRat::constant(Rational::from_integer(1.into()))
    }

    pub fn constant(c: Rational) -> Self {
        TrigRat::even(RatFn::constant(c))
    }

    pub fn even(f: RatFn) -> Self {
        TrigRat {
            even: f,
            odd: RatFn::zero(),
        }
    }

    pub fn odd(f: RatFn) -> Self {
        TrigRat {
            even: RatFn::zero(),
            odd: f,
        }
    }

    /// `x = -cos 2φ`
    pub fn x() -> Self {
        TrigRat::even(RatFn::x())
    }

    /// `s = sin 2φ`
    pub fn s() -> Self {
        TrigRat::odd(RatFn::one())
    }

    pub fn cos2phi() -> Self {
        TrigRat::even(RatFn::from_poly(Poly::from_ints(&[0, -1])))
    }

    pub fn sin2phi() -> Self {
        TrigRat::s()
    }

    /// `cos²φ = (1 - x)/2`
    pub fn cos_sq_phi() -> Self {
        TrigRat::even(RatFn::from_poly(Poly::new(vec![rat(1, 2), rat(-1, 2)])))
    }

    /// `sin²φ = (1 + x)/2`
    pub fn sin_sq_phi() -> Self {
        TrigRat::even(RatFn::from_poly(Poly::new(vec![rat(1, 2), rat(1, 2)])))
    }

    /// `tan φ = s / (1 - x)`
    pub fn tan_phi() -> Self {
        TrigRat::odd(RatFn::pole(int(-1), &int(1), 1))
    }

    /// `cot φ = s / (1 + x)`
    pub fn cot_phi() -> Self {
        TrigRat::odd(RatFn::pole(int(1), &int(-1), 1))
    }

    /// `tan 2φ = -s / x`
    pub fn tan2phi() -> Self {
        TrigRat::odd(RatFn::pole(int(-1), &int(0), 1))
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn is_even(&self) -> bool {
        self.odd.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.odd.is_zero() {
            self.even.as_constant()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> TrigRat {
        if c.is_zero() {
            return TrigRat::zero();
        }
        TrigRat {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
        }
    }

    pub fn mul_ratfn(&self, f: &RatFn) -> TrigRat {
        TrigRat {
            even: &self.even * f,
            odd: &self.odd * f,
        }
    }

    /// Derivative with respect to φ: `dx/dφ = 2s`, `ds/dφ = -2x`.
    pub fn dphi(&self) -> TrigRat {
        let two = int(2);
        let even = if self.odd.is_zero() {
            RatFn::zero()
        } else {
            let a = (&one_minus_x2() * &self.odd.derivative()).scale(&two);
            let b = self.odd.mul_poly(&Poly::from_ints(&[0, 2]));
            &a - &b
        };
        TrigRat {
            even,
            odd: self.even.derivative().scale(&two),
        }
    }

    /// Multiplicative inverse via the conjugate `even - odd·s`.
    pub fn inv(&self) -> Result<TrigRat> {
        if self.odd.is_zero() {
            return Ok(TrigRat::even(self.even.inv()?));
        }
        let norm = &(&self.even * &self.even) - &(&(&self.odd * &self.odd) * &one_minus_x2());
        let ninv = norm.inv()?;
        Ok(TrigRat {
            even: &self.even * &ninv,
            odd: -&(&self.odd * &ninv),
        })
    }

    pub fn checked_div(&self, rhs: &TrigRat) -> Result<TrigRat> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> TrigRat {
        let mut acc = TrigRat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a point `(x, s)` of the curve `s² = 1 - x²`.
    pub fn eval_xs(&self, x: f64, s: f64) -> f64 {
        let e = if self.even.is_zero() { 0.0 } else { self.even.eval_f64(x) };
        let o = if self.odd.is_zero() { 0.0 } else { self.odd.eval_f64(x) };
        e + o * s
    }

    /// Evaluate at the angle φ.
    pub fn eval_phi(&self, phi: f64) -> f64 {
        self.eval_xs(-(2.0 * phi).cos(), (2.0 * phi).sin())
    }

    pub fn size(&self) -> usize {
        self.even.size().max(self.odd.size())
    }
}

/// Multiplication in the extension ring, reducing `s²` to `1 - x²`.
pub fn trig_mul(a: &TrigRat, b: &TrigRat) -> TrigRat {
    a * b
}

/// Pushforward of `d/dφ` through `x = -cos 2φ`, `s = sin 2φ`.
pub fn trig_dphi(f: &TrigRat) -> TrigRat {
    f.dphi()
}

impl From<RatFn> for TrigRat {
    fn from(f: RatFn) -> Self {
        TrigRat::even(f)
    }
}

impl From<Rational> for TrigRat {
    fn from(c: Rational) -> Self {
        TrigRat::constant(c)
    }
}

impl Add for &TrigRat {
    type Output = TrigRat;
    fn add(self, rhs: &TrigRat) -> TrigRat {
        TrigRat {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl Sub for &TrigRat {
    type Output = TrigRat;
    fn sub(self, rhs: &TrigRat) -> TrigRat {
        TrigRat {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl Mul for &TrigRat {
    type Output = TrigRat;
    fn mul(self, rhs: &TrigRat) -> TrigRat {
        let a_even = !self.even.is_zero();
        let a_odd = !self.odd.is_zero();
        let b_even = !rhs.even.is_zero();
        let b_odd = !rhs.odd.is_zero();
        let mut even = if a_even && b_even {
            &self.even * &rhs.even
        } else {
            RatFn::zero()
        };
        if a_odd && b_odd {
            even = &even + &(&(&self.odd * &rhs.odd) * &one_minus_x2());
        }
        let mut odd = if a_even && b_odd {
            &self.even * &rhs.odd
        } else {
            RatFn::zero()
        };
        if a_odd && b_even {
            odd = &odd + &(&self.odd * &rhs.even);
        }
        TrigRat { even, odd }
    }
}

impl Neg for &TrigRat {
    type Output = TrigRat;
    fn neg(self) -> TrigRat {
        TrigRat {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

forward_owned!(Add, add, TrigRat);
forward_owned!(Sub, sub, TrigRat);
forward_owned!(Mul, mul, TrigRat);

impl fmt::Display for TrigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} s", self.even, self.odd)
    }
}

impl fmt::Debug for TrigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigRat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ANGLES: [f64; 10] = [0.05, 0.17, 0.31, 0.44, 0.58, 0.73, 0.91, 1.07, 1.29, 1.49];

    #[test]
    fn s_squared_reduces() {
        let s2 = &TrigRat::s() * &TrigRat::s();
        assert_eq!(s2, TrigRat::even(RatFn::from_poly(Poly::from_ints(&[1, 0, -1]))));
    }

    #[test]
    fn conjugate_product() {
        let a = &TrigRat::x() + &TrigRat::s();
        let b = &TrigRat::x() - &TrigRat::s();
        let p = trig_mul(&a, &b);
        assert_eq!(p, TrigRat::even(RatFn::from_poly(Poly::from_ints(&[-1, 0, 2]))));
        // numeric oracle: (−cos2φ + sin2φ)(−cos2φ − sin2φ) = cos²2φ − sin²2φ
        for &phi in &ANGLES {
            let c = (2.0 * phi).cos();
            let s = (2.0 * phi).sin();
            let want = (-c + s) * (-c - s);
            assert!((p.eval_phi(phi) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn identity_multiplication() {
        let f = &TrigRat::tan_phi() + &TrigRat::x();
        assert_eq!(&TrigRat::one() * &f, f);
    }

    #[test]
    fn derivative_of_generators() {
        assert_eq!(trig_dphi(&TrigRat::x()), TrigRat::s().scale(&int(2)));
        assert_eq!(trig_dphi(&TrigRat::s()), TrigRat::x().scale(&int(-2)));
        assert!(trig_dphi(&TrigRat::constant(rat(7, 3))).is_zero());
        // numeric oracle: central differences of −cos 2φ and sin 2φ
        let h = 1e-5;
        for &phi in &ANGLES {
            let dx = (-(2.0 * (phi + h)).cos() + (2.0 * (phi - h)).cos()) / (2.0 * h);
            assert!((trig_dphi(&TrigRat::x()).eval_phi(phi) - dx).abs() < 1e-8);
            let ds = ((2.0 * (phi + h)).sin() - (2.0 * (phi - h)).sin()) / (2.0 * h);
            assert!((trig_dphi(&TrigRat::s()).eval_phi(phi) - ds).abs() < 1e-8);
        }
    }

    #[test]
    fn half_angle_functions_evaluate() {
        for &phi in &ANGLES {
            assert!((TrigRat::tan_phi().eval_phi(phi) - phi.tan()).abs() < 1e-10 * phi.tan().max(1.0));
            assert!((TrigRat::cot_phi().eval_phi(phi) - 1.0 / phi.tan()).abs() < 1e-9 / phi.tan().min(1.0));
            assert!((TrigRat::cos_sq_phi().eval_phi(phi) - phi.cos().powi(2)).abs() < 1e-12);
            assert!((TrigRat::tan2phi().eval_phi(phi) - (2.0 * phi).tan()).abs() < 1e-9 * (2.0 * phi).tan().abs().max(1.0));
        }
    }

    #[test]
    fn inverse() {
        let f = &TrigRat::constant(int(3)) + &TrigRat::s();
        let g = f.inv().unwrap();
        assert_eq!(&f * &g, TrigRat::one());
    }
}

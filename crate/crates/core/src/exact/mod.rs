//! Exact arithmetic: rationals, polynomials, rational functions, the
//! trigonometric extension ring and radial Laurent polynomials.

pub mod laurent;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod trig;

use std::fmt::Debug;

pub use laurent::{laurent_scale_shift, Laurent, LaurentR};
pub use poly::Poly;
pub use ratfn::{ratfn_normalize, RatFn};
pub use rational::{int, parse_rational, rat, Rational};
pub use trig::{trig_dphi, trig_mul, TrigRat};

/// Minimal commutative-ring interface shared by the coefficient types.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
}

impl Ring for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn one() -> Self {
        RatFn::one()
    }
    fn is_zero(&self) -> bool {
        RatFn::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        RatFn::scale(self, q)
    }
}

impl Ring for TrigRat {
    fn zero() -> Self {
        TrigRat::zero()
    }
    fn one() -> Self {
        TrigRat::one()
    }
    fn is_zero(&self) -> bool {
        TrigRat::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        TrigRat::scale(self, q)
    }
}

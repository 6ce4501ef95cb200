//! Reduced rational functions `num(x) / den(x)` over the rationals.
//!
//! Canonical form: the denominator is monic and coprime to the numerator;
//! zero is `0 / 1`. Addition and multiplication use the Henrici reductions so
//! only gcds against denominator-sized polynomials are ever taken.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{forward_owned, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

/// Reduce `num / den` to canonical form.
pub fn ratfn_normalize(num: Poly, den: Poly) -> Result<RatFn> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(RatFn::reduce(num, den))
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        ratfn_normalize(num, den)
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFn::zero();
        }
        if den.is_constant() {
            let inv = Rational::one() / den.leading();
            return RatFn {
                num: num.scale(&inv),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Self::make_monic(num, den)
    }

    fn make_monic(num: Poly, den: Poly) -> Self {
        let lc = den.leading();
        if lc.is_one() {
            RatFn { num, den }
        } else {
            let inv = Rational::one() / lc;
            RatFn {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFn::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFn {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn x() -> Self {
        RatFn::from_poly(Poly::x())
    }

    /// `c / (x - root)^k`
    pub fn pole(c: Rational, root: &Rational, k: u32) -> Self {
        RatFn::make_monic(Poly::constant(c), Poly::linear_root(root).pow(k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFn {
        if c.is_zero() {
            return RatFn::zero();
        }
        RatFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFn {
        self * &RatFn::from_poly(p.clone())
    }

    pub fn inv(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFn::make_monic(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFn) -> Result<RatFn> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFn> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFn::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> RatFn {
        if self.den.is_one() {
            return RatFn::from_poly(self.num.derivative());
        }
        // (n/d)' = (n' d - n d') / d^2; any common factor with d^2 divides d.
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFn::reduce(num, den)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Substitute `x -> a*x + b`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> RatFn {
        RatFn::reduce(self.num.compose_affine(a, b), self.den.compose_affine(a, b))
    }

    /// Largest of numerator and denominator degree.
    pub fn size(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn display_var(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.display_var(var)
        } else {
            format!(
                "({})/({})",
                self.num.display_var(var),
                self.den.display_var(var)
            )
        }
    }
}

impl Default for RatFn {
    fn default() -> Self {
        RatFn::zero()
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::from_poly(p)
    }
}

impl From<Rational> for RatFn {
    fn from(c: Rational) -> Self {
        RatFn::constant(c)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFn({self})")
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFn::from_poly(&self.num + &rhs.num);
            }
            return RatFn::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFn::zero();
            }
            return RatFn {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RatFn::zero();
        }
        let g2 = Poly::gcd(&num, &g);
        let (num, g) = if g2.is_one() {
            (num, g)
        } else {
            (
                num.div_exact(&g2).expect("gcd divides"),
                g.div_exact(&g2).expect("gcd divides"),
            )
        };
        RatFn::make_monic(num, &(&b1 * &d1) * &g)
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFn::from_poly(&self.num * &rhs.num);
        }
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = Poly::gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (
                    n.div_exact(&g).expect("gcd divides"),
                    d.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RatFn::make_monic(&a * &c, &b * &d)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(Add, add, RatFn);
forward_owned!(Sub, sub, RatFn);
forward_owned!(Mul, mul, RatFn);

/// Sanity helper used by tests that bridge exact and floating evaluation.
pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn common_factor_cancels() {
        let f = ratfn_normalize(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(f.num(), &Poly::from_ints(&[1, 1]));
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn zero_numerator_is_canonical_zero() {
        let f = ratfn_normalize(Poly::zero(), Poly::from_ints(&[2, 0, 0, 1])).unwrap();
        assert_eq!(f, RatFn::zero());
        assert_eq!(f.den(), &Poly::one());
    }

    #[test]
    fn constant_denominator_folds_into_numerator() {
        // (2x + 2) / 4 = x/2 + 1/2 over the monic denominator 1
        let f = ratfn_normalize(Poly::from_ints(&[2, 2]), Poly::from_ints(&[4])).unwrap();
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert!(f.den().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            ratfn_normalize(Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn denominators_are_monic() {
        let f = ratfn_normalize(Poly::from_ints(&[1]), Poly::from_ints(&[3, 6])).unwrap();
        assert_eq!(f.den(), &Poly::new(vec![rat(1, 2), int(1)]));
        assert_eq!(f.num(), &Poly::constant(rat(1, 6)));
    }

    #[test]
    fn partial_fraction_sum() {
        // 1/(x-1) - 1/(x+1) = 2/(x^2-1)
        let a = RatFn::pole(int(1), &int(1), 1);
        let b = RatFn::pole(int(1), &int(-1), 1);
        let d = &a - &b;
        assert_eq!(d.num(), &Poly::constant(int(2)));
        assert_eq!(d.den(), &Poly::from_ints(&[-1, 0, 1]));
        // shared factor path: 1/(x-1)^2 + 1/((x-1)(x+1))
        let c = RatFn::new(Poly::one(), Poly::from_ints(&[-1, 0, 1])).unwrap();
        let e = &RatFn::pole(int(1), &int(1), 2) + &c;
        let expect = RatFn::new(
            Poly::from_ints(&[0, 2]),
            &Poly::linear_root(&int(1)).pow(2) * &Poly::from_ints(&[1, 1]),
        )
        .unwrap();
        assert_eq!(e, expect);
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/(x-2) = -1/(x-2)^2
        let f = RatFn::pole(int(1), &int(2), 1);
        assert_eq!(f.derivative(), RatFn::pole(int(-1), &int(2), 2));
    }
}

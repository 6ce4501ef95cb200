//! Finite Laurent polynomials in the radial variable `r`.

use std::collections::BTreeMap;
use std::fmt;

use super::rational::{int, Rational};
use super::trig::TrigRat;
use super::Ring;
use crate::error::{Error, Result};

/// `Σ c_k r^k` over finitely many integer `k`, zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent<T: Ring> {
    terms: BTreeMap<i32, T>,
}

/// Laurent polynomial in `r` whose coefficients are trigonometric functions of φ.
pub type LaurentR = Laurent<TrigRat>;

impl<T: Ring> Laurent<T> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn one() -> Self {
        Laurent::constant(T::one())
    }

    /// `c · r^k`
    pub fn monomial(k: i32, c: T) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i32, T> {
        &self.terms
    }

    pub fn coeff(&self, k: i32) -> T {
        self.terms.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `c · r^k` in place.
    pub fn add_term(&mut self, k: i32, c: &T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                let sum = v.add(c);
                if sum.is_zero() {
                    self.terms.remove(&k);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.scale(q)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Laurent::zero();
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                out.add_term(i + j, &a.mul(b));
            }
        }
        out
    }

    /// Multiply every coefficient by a ring element.
    pub fn mul_coeff(&self, c: &T) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (*k, a.mul(c)))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    /// `d/dr`
    pub fn dr(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| **k != 0)
                .map(|(k, c)| (k - 1, c.scale(&int(*k as i64))))
                .collect(),
        }
    }

    /// Antiderivative in `r` with zero constant of integration. An `r^-1`
    /// term has no Laurent antiderivative and is reported as an error.
    pub fn integrate_r(&self) -> Result<Self> {
        if let Some(c) = self.terms.get(&-1) {
            return Err(Error::Integration(format!(
                "r^-1 coefficient {c:?} would integrate to a logarithm"
            )));
        }
        Ok(Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k + 1, c.scale(&(Rational::from_integer(1.into()) / int(*k as i64 + 1)))))
                .collect(),
        })
    }

    pub fn map<F: Fn(&T) -> T>(&self, f: F) -> Self {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

/// Multiply by `r^k`: every exponent moves by `k`, coefficients unchanged.
pub fn laurent_scale_shift<T: Ring>(f: &Laurent<T>, k: i32) -> Laurent<T> {
    Laurent {
        terms: f.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
    }
}

impl LaurentR {
    /// `d/dφ` applied coefficientwise.
    pub fn dphi(&self) -> Self {
        self.map(TrigRat::dphi)
    }

    pub fn eval(&self, r: f64, phi: f64) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| c.eval_phi(phi) * r.powi(*k))
            .sum()
    }

    pub fn from_trig(k: i32, c: TrigRat) -> Self {
        Laurent::monomial(k, c)
    }

    pub fn from_rational(k: i32, c: Rational) -> Self {
        Laurent::monomial(k, TrigRat::constant(c))
    }

    /// Largest rational-function degree among the coefficients.
    pub fn max_size(&self) -> usize {
        self.terms.values().map(TrigRat::size).max().unwrap_or(0)
    }
}

impl Laurent<Rational> {
    pub fn eval_f64(&self, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|(k, c)| super::rational::to_f64(c) * r.powi(*k))
            .sum()
    }
}

impl<T: Ring> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("r^{k}*[{c:?}]"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn r(k: i32, c: i64) -> Laurent<Rational> {
        Laurent::monomial(k, int(c))
    }

    #[test]
    fn shift_moves_exponents() {
        assert_eq!(laurent_scale_shift(&r(2, 1), -4), r(-2, 1));
        assert!(laurent_scale_shift(&Laurent::<Rational>::zero(), 3).is_zero());
        // (r^-2 + r^2) · r^2 = 1 + r^4
        let f = r(-2, 1).add(&r(2, 1));
        assert_eq!(laurent_scale_shift(&f, 2), r(0, 1).add(&r(4, 1)));
    }

    #[test]
    fn radial_calculus() {
        let f = r(3, 2).add(&r(-2, 5));
        assert_eq!(f.dr(), r(2, 6).add(&r(-3, -10)));
        assert_eq!(f.dr().integrate_r().unwrap(), f);
        assert!(r(-1, 1).integrate_r().is_err());
        assert!(r(0, 7).dr().is_zero());
    }

    #[test]
    fn products_cancel() {
        let a = r(1, 1).add(&r(-1, 1));
        let b = r(1, 1).sub(&r(-1, 1));
        assert_eq!(a.mul(&b), r(2, 1).sub(&r(-2, 1)));
        assert_eq!(a.scale(&rat(1, 2)).coeff(1), rat(1, 2));
    }
}

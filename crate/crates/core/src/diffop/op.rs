//! Normal-ordered differential operators in `(r, φ)`.
//!
//! An [`Op2D`] is a finite sum `Σ c_ij(r, φ) ∂r^i ∂φ^j` with every coefficient
//! to the left of every derivative. Coefficients are Laurent polynomials in
//! `r` over [`TrigRat`]. The map is keyed by `(i, j)` and never stores a zero
//! coefficient, so two operators are equal exactly when their maps are.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::rational::{binomial, fmt_rational};
use crate::exact::{LaurentR, Rational, TrigRat};

#[derive(Clone, PartialEq, Default)]
pub struct Op2D {
    terms: BTreeMap<(u32, u32), LaurentR>,
}

impl std::fmt::Debug for Op2D {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.dump())
    }
}

impl Op2D {
    pub fn zero() -> Self {
        Op2D::default()
    }

    pub fn identity() -> Self {
        Op2D::scalar(Rational::from_integer(1.into()))
    }

    pub fn scalar(c: Rational) -> Self {
        Op2D::multiplication(LaurentR::from_rational(0, c))
    }

    /// Multiplication by a function of `(r, φ)`.
    pub fn multiplication(f: LaurentR) -> Self {
        Op2D::term(0, 0, f)
    }

    /// Multiplication by `c(φ) · r^k`.
    pub fn trig(k: i32, c: TrigRat) -> Self {
        Op2D::multiplication(LaurentR::from_trig(k, c))
    }

    pub fn term(i: u32, j: u32, c: LaurentR) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Op2D { terms }
    }

    /// `∂r`
    pub fn dr() -> Self {
        Op2D::term(1, 0, LaurentR::one())
    }

    /// `∂φ`
    pub fn dphi() -> Self {
        Op2D::term(0, 1, LaurentR::one())
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), LaurentR> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> LaurentR {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest total derivative order, `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.values().map(LaurentR::len).sum()
    }

    /// Largest coefficient degree, for blow-up diagnostics.
    pub fn max_coeff_size(&self) -> usize {
        self.terms.values().map(LaurentR::max_size).max().unwrap_or(0)
    }

    fn add_coeff(&mut self, key: (u32, u32), c: &LaurentR) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                let sum = v.add(c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add(&self, rhs: &Op2D) -> Op2D {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_coeff(*k, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Op2D) -> Op2D {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Op2D {
        Op2D {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Op2D {
        Op2D {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.scale(q)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Keep only the terms of total order `n`.
    pub fn homogeneous_part(&self, n: u32) -> Op2D {
        Op2D {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| i + j == n)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn compose(&self, rhs: &Op2D) -> Op2D {
        op_compose(self, rhs)
    }

    pub fn commutator(&self, rhs: &Op2D) -> Op2D {
        op_commutator(self, rhs)
    }

    /// `AB + BA`
    pub fn anticommutator(&self, rhs: &Op2D) -> Op2D {
        op_compose(self, rhs).add(&op_compose(rhs, self))
    }

    pub fn pow(&self, e: u32) -> Op2D {
        let mut acc = Op2D::identity();
        for _ in 0..e {
            acc = op_compose(&acc, self);
        }
        acc
    }

    /// Fail if the order exceeds `bound`.
    pub fn check_order(&self, bound: u32) -> Result<()> {
        match self.order() {
            Some(o) if o > bound => Err(Error::OrderBound { order: o, bound }),
            _ => Ok(()),
        }
    }

    /// The term of highest order (ties broken by `(i, j)` then the largest
    /// power of `r`), rendered for diagnostics.
    pub fn leading_term(&self) -> Option<String> {
        let order = self.order()?;
        let ((i, j), c) = self
            .terms
            .iter()
            .filter(|((i, j), _)| i + j == order)
            .next_back()?;
        let (k, t) = c.terms().iter().next_back()?;
        Some(format!("order {order}: r^{k} * ({t}) * dr^{i} dphi^{j}"))
    }

    /// Plain-text normal form, one term per line:
    /// `r^k * (even | odd s) * dr^i dphi^j`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for ((i, j), c) in &self.terms {
            for (k, t) in c.terms() {
                let _ = writeln!(out, "r^{k} * ({} | {} s) * dr^{i} dphi^{j}", t.even, t.odd);
            }
        }
        if out.is_empty() {
            out.push_str("0\n");
        }
        out
    }

    /// Apply to a smooth function given its partial derivatives
    /// `d(i, j) = ∂r^i ∂φ^j f (r, φ)` at a point.
    pub fn apply_numeric<F: Fn(u32, u32) -> f64>(&self, d: F, r: f64, phi: f64) -> f64 {
        self.terms
            .iter()
            .map(|((i, j), c)| c.eval(r, phi) * d(*i, *j))
            .sum()
    }
}

/// Derivatives `∂r^p ∂φ^q c` for `p ≤ pmax`, `q ≤ qmax`.
fn derivative_table(c: &LaurentR, pmax: u32, qmax: u32) -> Vec<Vec<LaurentR>> {
    let mut table = Vec::with_capacity(pmax as usize + 1);
    let mut by_r = c.clone();
    for _ in 0..=pmax {
        let mut row = Vec::with_capacity(qmax as usize + 1);
        let mut d = by_r.clone();
        for _ in 0..=qmax {
            let next = d.dphi();
            row.push(d);
            d = next;
        }
        table.push(row);
        by_r = by_r.dr();
    }
    table
}

/// Normal form of `A ∘ B` via the Leibniz rule
/// `∂^α c = Σ_{β ≤ α} C(α, β) (∂^β c) ∂^{α-β}`.
pub fn op_compose(a: &Op2D, b: &Op2D) -> Op2D {
    if a.is_zero() || b.is_zero() {
        return Op2D::zero();
    }
    let pmax = a.terms.keys().map(|k| k.0).max().unwrap_or(0);
    let qmax = a.terms.keys().map(|k| k.1).max().unwrap_or(0);
    let b_terms: Vec<((u32, u32), Vec<Vec<LaurentR>>)> = b
        .terms
        .par_iter()
        .map(|(k, c)| (*k, derivative_table(c, pmax, qmax)))
        .collect();

    let jobs: Vec<(&(u32, u32), &LaurentR, &(u32, u32), &Vec<Vec<LaurentR>>)> = a
        .terms
        .iter()
        .flat_map(|(ka, ca)| b_terms.iter().map(move |(kb, tb)| (ka, ca, kb, tb)))
        .collect();

    let partials: Vec<Op2D> = jobs
        .par_iter()
        .map(|&(&(i, j), ca, &(k, l), table)| {
            let mut out = Op2D::zero();
            for p in 0..=i {
                for q in 0..=j {
                    let d = &table[p as usize][q as usize];
                    if d.is_zero() {
                        continue;
                    }
                    let w = binomial(i, p) * binomial(j, q);
                    let prod = ca.mul(d).scale(&w);
                    out.add_coeff((i - p + k, j - q + l), &prod);
                }
            }
            out
        })
        .collect();

    // Exact arithmetic makes the sum independent of merge order.
    partials
        .into_par_iter()
        .reduce(Op2D::zero, |x, y| x.add(&y))
}

/// `AB - BA` in normal form.
pub fn op_commutator(a: &Op2D, b: &Op2D) -> Op2D {
    let (ab, ba) = rayon::join(|| op_compose(a, b), || op_compose(b, a));
    ab.sub(&ba)
}

/// True iff `A - B` normalizes to the empty term map.
pub fn op_equal(a: &Op2D, b: &Op2D) -> bool {
    a.sub(b).is_zero()
}

/// Render a rational for dumps.
pub fn fmt_q(q: &Rational) -> String {
    fmt_rational(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn r_pow(k: i32) -> Op2D {
        Op2D::multiplication(LaurentR::from_rational(k, int(1)))
    }

    #[test]
    fn leibniz_in_r() {
        // ∂r ∘ r = r ∂r + 1
        let lhs = op_compose(&Op2D::dr(), &r_pow(1));
        let rhs = op_compose(&r_pow(1), &Op2D::dr()).add(&Op2D::identity());
        assert!(op_equal(&lhs, &rhs));
    }

    #[test]
    fn leibniz_in_phi() {
        // ∂φ ∘ x = x ∂φ + 2s
        let x = Op2D::trig(0, TrigRat::x());
        let lhs = op_compose(&Op2D::dphi(), &x);
        let rhs = op_compose(&x, &Op2D::dphi()).add(&Op2D::trig(0, TrigRat::s().scale(&int(2))));
        assert_eq!(lhs, rhs);
        // numeric oracle on f = x^3 = (−cos 2φ)^3
        let phi = 0.37_f64;
        let xv = -(2.0 * phi).cos();
        let sv = (2.0 * phi).sin();
        let d = |_i: u32, j: u32| match j {
            0 => xv.powi(3),
            1 => 3.0 * xv * xv * 2.0 * sv,
            _ => unreachable!(),
        };
        let direct = {
            // ∂φ (x · x^3) = 4 x^3 · 2s
            4.0 * xv.powi(3) * 2.0 * sv
        };
        assert!((lhs.apply_numeric(d, 1.0, phi) - direct).abs() < 1e-12);
    }

    #[test]
    fn identity_is_neutral() {
        let a = Op2D::term(2, 1, LaurentR::from_trig(-1, TrigRat::tan_phi()))
            .add(&Op2D::trig(3, TrigRat::x()));
        assert_eq!(op_compose(&a, &Op2D::identity()), a);
        assert_eq!(op_compose(&Op2D::identity(), &a), a);
    }

    #[test]
    fn canonical_commutators() {
        assert_eq!(op_commutator(&Op2D::dr(), &r_pow(1)), Op2D::identity());
        let h = Op2D::term(2, 0, LaurentR::from_rational(0, int(-1))).add(&r_pow(2));
        assert!(op_commutator(&h, &h).is_zero());
    }

    #[test]
    fn mixed_partials_commute() {
        let a = op_compose(&Op2D::dr(), &Op2D::dphi());
        let b = op_compose(&Op2D::dphi(), &Op2D::dr());
        assert!(op_equal(&a, &b));
        assert!(!op_equal(&a, &a.add(&Op2D::identity())));
    }

    #[test]
    fn order_bound_on_commutator() {
        let a = Op2D::term(2, 0, LaurentR::from_trig(1, TrigRat::s()));
        let b = Op2D::term(0, 3, LaurentR::from_trig(-2, TrigRat::x()));
        let c = op_commutator(&a, &b);
        assert!(c.order().unwrap() <= 4);
        assert!(c.check_order(4).is_ok());
        assert!(c.check_order(2).is_err());
    }

    #[test]
    fn dump_format() {
        let a = Op2D::term(1, 2, LaurentR::from_trig(-2, TrigRat::constant(rat(3, 4))));
        assert_eq!(a.dump(), "r^-2 * (3/4 | 0 s) * dr^1 dphi^2\n");
        assert_eq!(Op2D::zero().dump(), "0\n");
    }
}

//! Gauged quasi-polynomial functions and the action of operators on them.
//!
//! A [`QuasiPoly`] is
//!
//! ```text
//! r^c · exp(-γ r²) · (1-x)^p · (1+x)^q · (x-b)^k · body(r, x, s)
//! ```
//!
//! where `body` is a Laurent polynomial in `r` over [`TrigRat`]. The radial
//! Laguerre states, the gauged Jacobi states `Ψ_n` and their partners `Φ_n`
//! are all of this shape. Derivatives only shift the exponents by integers,
//! so an operator whose coefficients have poles at `x = ±1, b` keeps the
//! family closed; anything else is reported as [`Error::NonClosure`].

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::op::Op2D;
use crate::error::{Error, Result};
use crate::exact::rational::{int, to_f64};
use crate::exact::{laurent_scale_shift, LaurentR, Poly, RatFn, Rational, TrigRat};

#[derive(Clone, PartialEq)]
pub struct QuasiPoly {
    /// Power of `r`.
    pub c: Rational,
    /// Gaussian rate `γ` in `exp(-γ r²)`; zero means no Gaussian.
    pub gauss: Rational,
    /// Power of `1 - x`.
    pub p: Rational,
    /// Power of `1 + x`.
    pub q: Rational,
    /// Power of `x - b`.
    pub k: i32,
    /// Location of the movable pole, required when `k ≠ 0` or when an
    /// operator with a pole there will be applied.
    pub b: Option<Rational>,
    pub body: LaurentR,
}

fn one_minus_x() -> Poly {
    Poly::from_ints(&[1, -1])
}

fn one_plus_x() -> Poly {
    Poly::from_ints(&[1, 1])
}

/// Order of vanishing of `f` at `root` (negative for a pole).
fn valuation(f: &RatFn, root: &Rational) -> i64 {
    let (a, _) = f.num().strip_root(root);
    let (d, _) = f.den().strip_root(root);
    a as i64 - d as i64
}

fn factor_power(base: Poly, e: i64) -> RatFn {
    let f = RatFn::from_poly(base.pow(e.unsigned_abs() as u32));
    if e >= 0 {
        f
    } else {
        f.inv().expect("nonzero linear factor")
    }
}

impl QuasiPoly {
    /// A bare Laurent-in-r, trigonometric body with trivial prefactor.
    pub fn from_body(body: LaurentR) -> Self {
        QuasiPoly {
            c: Rational::zero(),
            gauss: Rational::zero(),
            p: Rational::zero(),
            q: Rational::zero(),
            k: 0,
            b: None,
            body,
        }
    }

    /// `r^c · exp(-γ r²) · F(ω r²)` for a polynomial `F`.
    pub fn radial(c: Rational, gauss: Rational, poly_y: &Poly, omega: &Rational) -> Self {
        let mut body = LaurentR::zero();
        let mut w = Rational::one();
        for (i, a) in poly_y.coeffs().iter().enumerate() {
            body.add_term(2 * i as i32, &TrigRat::constant(a * &w));
            w *= omega;
        }
        QuasiPoly {
            c,
            gauss,
            ..QuasiPoly::from_body(body)
        }
    }

    /// `(1-x)^p (1+x)^q (x-b)^k · f(x, s)`.
    pub fn angular(p: Rational, q: Rational, k: i32, b: Option<Rational>, f: TrigRat) -> Self {
        QuasiPoly {
            p,
            q,
            k,
            b,
            ..QuasiPoly::from_body(LaurentR::from_trig(0, f))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        QuasiPoly {
            body: self.body.scale(q),
            ..self.clone()
        }
    }

    /// Overall `s` parity of the body: `Some(0)` even, `Some(1)` odd.
    pub fn s_parity(&self) -> Option<u8> {
        let even = self.body.terms().values().all(TrigRat::is_even);
        let odd = self.body.terms().values().all(|t| t.even.is_zero());
        match (even, odd) {
            (true, _) => Some(0),
            (_, true) => Some(1),
            _ => None,
        }
    }

    fn merge_b(a: &Option<Rational>, b: &Option<Rational>) -> Result<Option<Rational>> {
        match (a, b) {
            (Some(x), Some(y)) if x != y => Err(Error::NonClosure(format!(
                "pole locations {x} and {y} cannot be combined"
            ))),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x.clone())),
            _ => Ok(None),
        }
    }

    /// Pointwise product.
    pub fn mul(&self, rhs: &QuasiPoly) -> Result<QuasiPoly> {
        QuasiPoly {
            c: &self.c + &rhs.c,
            gauss: &self.gauss + &rhs.gauss,
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
            k: self.k + rhs.k,
            b: QuasiPoly::merge_b(&self.b, &rhs.b)?,
            body: self.body.mul(&rhs.body),
        }
        .canonical()
    }

    /// Rewrite with the exponents lowered to `(c, p, q, k)`; each shift must
    /// be a non-negative integer.
    fn lower_to(&self, c: &Rational, p: &Rational, q: &Rational, k: i32) -> Result<LaurentR> {
        let shift = |from: &Rational, to: &Rational, what: &str| -> Result<i64> {
            let d = from - to;
            if !d.is_integer() || d.is_negative() {
                return Err(Error::NonClosure(format!(
                    "{what} exponents {from} and {to} differ by a non-integer"
                )));
            }
            Ok(d.to_integer().try_into().unwrap_or(i64::MAX))
        };
        let dc = shift(&self.c, c, "radial")?;
        let dp = shift(&self.p, p, "(1-x)")?;
        let dq = shift(&self.q, q, "(1+x)")?;
        let dk = (self.k - k) as i64;
        let mut f = RatFn::from_poly(one_minus_x().pow(dp as u32));
        f = &f * &RatFn::from_poly(one_plus_x().pow(dq as u32));
        if dk != 0 {
            let b = self.b.clone().unwrap_or_default();
            f = &f * &factor_power(Poly::linear_root(&b), dk);
        }
        let body = self.body.map(|t| t.mul_ratfn(&f));
        Ok(laurent_scale_shift(&body, dc as i32))
    }

    /// `self - rhs`, aligning the prefactors first.
    pub fn sub(&self, rhs: &QuasiPoly) -> Result<QuasiPoly> {
        if self.is_zero() {
            return Ok(rhs.scale(&int(-1)));
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.gauss != rhs.gauss {
            return Err(Error::NonClosure("different Gaussian rates".into()));
        }
        let b = QuasiPoly::merge_b(&self.b, &rhs.b)?;
        let c = std::cmp::min(self.c.clone(), rhs.c.clone());
        let p = std::cmp::min(self.p.clone(), rhs.p.clone());
        let q = std::cmp::min(self.q.clone(), rhs.q.clone());
        let k = self.k.min(rhs.k);
        let mut l = self.clone();
        let mut r = rhs.clone();
        l.b = b.clone();
        r.b = b.clone();
        let body = l.lower_to(&c, &p, &q, k)?.sub(&r.lower_to(&c, &p, &q, k)?);
        QuasiPoly {
            c,
            gauss: self.gauss.clone(),
            p,
            q,
            k,
            b,
            body,
        }
        .canonical()
    }

    /// `λ` with `self = λ · other`, if one exists.
    pub fn ratio_to(&self, other: &QuasiPoly) -> Result<Option<Rational>> {
        if other.is_zero() {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(Rational::zero()));
        }
        if self.gauss != other.gauss {
            return Ok(None);
        }
        let b = QuasiPoly::merge_b(&self.b, &other.b)?;
        let c = std::cmp::min(self.c.clone(), other.c.clone());
        let p = std::cmp::min(self.p.clone(), other.p.clone());
        let q = std::cmp::min(self.q.clone(), other.q.clone());
        let k = self.k.min(other.k);
        let (mut l, mut r) = (self.clone(), other.clone());
        l.b = b.clone();
        r.b = b;
        let (lb, rb) = match (l.lower_to(&c, &p, &q, k), r.lower_to(&c, &p, &q, k)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Ok(None),
        };
        let (e, t) = rb.terms().iter().next_back().expect("nonzero");
        let (num, den) = if t.even.is_zero() {
            (lb.coeff(*e).odd, t.odd.clone())
        } else {
            (lb.coeff(*e).even, t.even.clone())
        };
        if num.is_zero() {
            return Ok(None);
        }
        let lead = |f: &RatFn| f.num().leading() / f.den().leading();
        let lambda = lead(&num) / lead(&den);
        Ok((lb == rb.scale(&lambda)).then_some(lambda))
    }

    /// Value equality regardless of how the prefactor is split.
    pub fn same_function(&self, rhs: &QuasiPoly) -> Result<bool> {
        Ok(self.sub(rhs)?.is_zero())
    }

    /// Absorb every factor of `r`, `1-x`, `1+x`, `x-b` from the body into the
    /// prefactor so that the body has no poles and no common such factor.
    pub fn canonical(mut self) -> Result<QuasiPoly> {
        if self.body.is_zero() {
            return Ok(QuasiPoly {
                b: None,
                ..QuasiPoly::from_body(LaurentR::zero())
            });
        }
        if let Some(m) = self.body.min_exp() {
            self.body = laurent_scale_shift(&self.body, -m);
            self.c += int(m as i64);
        }

        let parts: Vec<&RatFn> = self
            .body
            .terms()
            .values()
            .flat_map(|t| [&t.even, &t.odd])
            .filter(|f| !f.is_zero())
            .collect();
        let min_val = |root: &Rational| parts.iter().map(|f| valuation(f, root)).min().unwrap_or(0);
        let v1 = min_val(&int(1));
        let vm1 = min_val(&int(-1));
        let vb = self.b.as_ref().map(|b| min_val(b)).unwrap_or(0);

        let mut f = &factor_power(one_minus_x(), -v1) * &factor_power(one_plus_x(), -vm1);
        // (1-x)^{-v} against (x-1)^v differs by a sign; keep the (1-x) form.
        if let Some(b) = &self.b {
            f = &f * &factor_power(Poly::linear_root(b), -vb);
        }
        self.p += int(v1);
        self.q += int(vm1);
        self.k += vb as i32;
        self.body = self.body.map(|t| t.mul_ratfn(&f));

        for (e, t) in self.body.terms() {
            for f in [&t.even, &t.odd] {
                if !f.is_polynomial() {
                    return Err(Error::NonClosure(format!(
                        "term r^{e} * ({t}) has denominator {} outside the gauge family",
                        f.den()
                    )));
                }
            }
        }
        Ok(self)
    }

    /// `∂r` with the prefactor kept fixed.
    fn dr_body(&self, body: &LaurentR) -> LaurentR {
        let mut out = body.dr();
        if !self.c.is_zero() {
            out = out.add(&laurent_scale_shift(body, -1).scale(&self.c));
        }
        if !self.gauss.is_zero() {
            out = out.sub(&laurent_scale_shift(body, 1).scale(&(&self.gauss * int(2))));
        }
        out
    }

    /// Logarithmic φ-derivative of the angular prefactor.
    fn angular_log_derivative(&self) -> TrigRat {
        let mut g = RatFn::zero();
        if !self.p.is_zero() {
            g = &g + &RatFn::pole(self.p.clone(), &int(1), 1);
        }
        if !self.q.is_zero() {
            g = &g + &RatFn::pole(self.q.clone(), &int(-1), 1);
        }
        if self.k != 0 {
            let b = self.b.clone().unwrap_or_default();
            g = &g + &RatFn::pole(int(self.k as i64), &b, 1);
        }
        TrigRat::odd(g.scale(&int(2)))
    }

    /// Exact `A f`, re-expressed in canonical form.
    pub fn apply(&self, a: &Op2D) -> Result<QuasiPoly> {
        op_apply(a, self)
    }

    pub fn eval(&self, r: f64, phi: f64) -> f64 {
        let x = -(2.0 * phi).cos();
        let mut pre = r.powf(to_f64(&self.c)) * (-to_f64(&self.gauss) * r * r).exp();
        pre *= (1.0 - x).powf(to_f64(&self.p)) * (1.0 + x).powf(to_f64(&self.q));
        if self.k != 0 {
            let b = to_f64(self.b.as_ref().unwrap());
            pre *= (x - b).powi(self.k);
        }
        pre * self.body.eval(r, phi)
    }
}

/// Exact action of `A` on `f`. Coefficients with poles away from
/// `x = ±1, b` or a logarithm-free but non-Laurent result are rejected.
pub fn op_apply(a: &Op2D, f: &QuasiPoly) -> Result<QuasiPoly> {
    let imax = a.terms().keys().map(|k| k.0).max().unwrap_or(0) as usize;
    let jmax = a.terms().keys().map(|k| k.1).max().unwrap_or(0) as usize;
    let lphi = f.angular_log_derivative();

    // table[i][j] = body of ∂r^i ∂φ^j f
    let mut table: Vec<Vec<LaurentR>> = Vec::with_capacity(imax + 1);
    let mut row0 = Vec::with_capacity(jmax + 1);
    let mut cur = f.body.clone();
    for _ in 0..=jmax {
        let next = cur.mul_coeff(&lphi).add(&cur.dphi());
        row0.push(cur);
        cur = next;
    }
    table.push(row0);
    for i in 1..=imax {
        let row = table[i - 1].iter().map(|b| f.dr_body(b)).collect();
        table.push(row);
    }

    let mut body = LaurentR::zero();
    for ((i, j), c) in a.terms() {
        body = body.add(&c.mul(&table[*i as usize][*j as usize]));
    }
    QuasiPoly { body, ..f.clone() }.canonical()
}

impl fmt::Debug for QuasiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r^({}) e^(-{} r^2) (1-x)^({}) (1+x)^({})",
            self.c, self.gauss, self.p, self.q
        )?;
        if let Some(b) = &self.b {
            write!(f, " (x-{b})^({})", self.k)?;
        }
        write!(f, " * [{:?}]", self.body)
    }
}

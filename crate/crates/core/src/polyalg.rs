//! The cubic symmetry algebra generated by `X = (L1 - 1)/2`, `Y = L2/8`.
//!
//! ```text
//! [X, Y] = Z
//! [X, Z] = b {X, Y} + f
//! [Y, Z] = -b Y² + g X³ + h X² + i X + j
//! ```
//!
//! `f, h, i, j` are polynomials in the central `H`. Residuals are always
//! computed with `H` substituted as the concrete operator.
//!
//! Two sets of closed forms are kept. [`algebra_constants`] is the published
//! table (`b = 16`, `g = -1024ω²`, ...). [`realized_constants`] is what the
//! operators above actually satisfy: every constant is the published one
//! divided by `4, 2, 32, 16, 8, 4` for `b, f, g, h, i, j`. The published
//! table is realized instead by `X' = (L1 - 1)/4`, `Y' = L2/8` with
//! `Z' = 8[X', Y']`, see [`Normalization::Rescaled`].

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::diffop::{Op2D, QuasiPoly};
use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rational, int, rat};
use crate::exact::Rational;
use crate::model::params::{ser_rational, SystemParams};
use crate::model::IntegralBundle;
use crate::painleve::{q_constants, QConstants, Variant};

/// Polynomial in the central element `H`, coefficients in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CentralPoly {
    coeffs: Vec<Rational>,
}

impl CentralPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CentralPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        CentralPoly::new(vec![c])
    }

    /// `a2 H² + a0`
    pub fn even2(a2: Rational, a0: Rational) -> Self {
        CentralPoly::new(vec![a0, Rational::zero(), a2])
    }

    /// `a1 H`
    pub fn linear(a1: Rational) -> Self {
        CentralPoly::new(vec![Rational::zero(), a1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CentralPoly::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn add(&self, rhs: &CentralPoly) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CentralPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    /// Substitute `H` by an operator, given its powers `hp[k] = H^k`.
    pub fn to_op(&self, hp: &[Op2D]) -> Op2D {
        let mut out = Op2D::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&hp[k].scale(c));
            }
        }
        out
    }
}

impl std::fmt::Display for CentralPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("{}*H", fmt_rational(c)),
                _ => format!("{}*H^{k}", fmt_rational(c)),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

impl Serialize for CentralPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraConstants {
    #[serde(serialize_with = "ser_rational")]
    pub b: Rational,
    pub f: CentralPoly,
    #[serde(serialize_with = "ser_rational")]
    pub g: Rational,
    pub h: CentralPoly,
    pub i: CentralPoly,
    pub j: CentralPoly,
}

impl AlgebraConstants {
    /// Divide each constant by its own factor.
    pub fn rescale(&self, by: [i64; 6]) -> Self {
        let inv = |k: i64| Rational::one() / int(k);
        AlgebraConstants {
            b: &self.b * inv(by[0]),
            f: self.f.scale(&inv(by[1])),
            g: &self.g * inv(by[2]),
            h: self.h.scale(&inv(by[3])),
            i: self.i.scale(&inv(by[4])),
            j: self.j.scale(&inv(by[5])),
        }
    }
}

fn sq(q: &Rational) -> Rational {
    q * q
}

/// Published constants in terms of `(α, β, ω)`.
pub fn algebra_constants(p: &SystemParams) -> AlgebraConstants {
    let (a, b) = (&p.alpha, &p.beta);
    let d = p.delta();
    let d2 = sq(&d);
    let s = p.sigma();
    let w2 = sq(&p.omega);
    let a2b2 = sq(a) + sq(b);
    AlgebraConstants {
        b: int(16),
        f: CentralPoly::linear((a + b) * &d * (&d + int(2)) * (&d - int(2)) * int(2)),
        g: -&w2 * int(1024),
        h: CentralPoly::even2(int(48), &w2 * int(256) * (&s * int(3) - int(4))),
        i: CentralPoly::even2(-&s * int(32), -&w2 * int(192) * (&a2b2 - int(4)) * &d2),
        j: CentralPoly::even2(
            (&a2b2 - int(4)) * &d2 * int(6) + &s * int(16),
            &w2 * int(16) * (&d + int(2)) * (&d - int(2)) * &d2 * (sq(a) + a * b + sq(b) - int(4)),
        ),
    }
}

/// Constants satisfied by `X = (L1 - 1)/2`, `Y = L2/8`, `Z = [X, Y]`.
pub fn realized_constants(p: &SystemParams) -> AlgebraConstants {
    algebra_constants(p).rescale([4, 2, 32, 16, 8, 4])
}

/// The same table written through the Cosgrove constants.
pub fn q_form_constants(p: &SystemParams, q: &QConstants) -> AlgebraConstants {
    let w2 = sq(&p.omega);
    let (q7, q8, q9, q10) = (&q.q7, &q.q8, &q.q9, &q.q10);
    let m = int(1) + q7 * int(4) - q8 * int(2) - q9 * int(4);
    AlgebraConstants {
        b: int(16),
        f: CentralPoly::linear(q8 * int(32)),
        g: -&w2 * int(1024),
        h: CentralPoly::even2(int(48), -&w2 * int(512) * (q7 * int(6) + int(5))),
        i: CentralPoly::even2(
            (q7 * int(2) + int(1)) * int(64),
            -&w2 * int(512) * (int(3) + q7 * int(8) - q8 * int(2) - q9 * int(4)),
        ),
        j: CentralPoly::even2(&m * int(16), -&w2 * int(256) * (&m + q10 * int(4))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QFormCheck {
    /// With `q` from [`Variant::Derived`].
    pub holds: bool,
    /// With `q` exactly as printed.
    pub holds_as_printed: bool,
    pub mismatched_as_printed: Vec<&'static str>,
}

fn mismatches(a: &AlgebraConstants, b: &AlgebraConstants) -> Vec<&'static str> {
    let mut out = Vec::new();
    if a.b != b.b {
        out.push("b");
    }
    if a.f != b.f {
        out.push("f");
    }
    if a.g != b.g {
        out.push("g");
    }
    if a.h != b.h {
        out.push("h");
    }
    if a.i != b.i {
        out.push("i");
    }
    if a.j != b.j {
        out.push("j");
    }
    out
}

pub fn q_form_crosscheck(p: &SystemParams) -> QFormCheck {
    let direct = algebra_constants(p);
    let derived = q_form_constants(p, &q_constants(p, Variant::Derived));
    let printed = q_form_constants(p, &q_constants(p, Variant::AsPrinted));
    let bad = mismatches(&direct, &printed);
    QFormCheck {
        holds: mismatches(&direct, &derived).is_empty(),
        holds_as_printed: bad.is_empty(),
        mismatched_as_printed: bad,
    }
}

/// Choice of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// `X = (L1 - 1)/2`, `Y = L2/8`, `Z = [X, Y]`.
    Standard,
    /// `X = (L1 - 1)/4`, `Y = L2/8`, `Z = 8[X, Y]`.
    Rescaled,
}

/// Concrete generators together with the powers of `H` needed to
/// substitute central polynomials.
#[derive(Clone, Debug)]
pub struct Generators {
    pub x: Op2D,
    pub y: Op2D,
    pub z: Op2D,
    /// `[X, Y] = Z / kappa`
    pub kappa: Rational,
    /// `H^0 .. H^2`
    pub hp: Vec<Op2D>,
}

impl Generators {
    pub fn new(bundle: &IntegralBundle, norm: Normalization) -> Self {
        let (xs, kappa) = match norm {
            Normalization::Standard => (rat(1, 2), int(1)),
            Normalization::Rescaled => (rat(1, 4), int(8)),
        };
        let x = bundle.l1.sub(&Op2D::identity()).scale(&xs);
        let y = bundle.l2.scale(&rat(1, 8));
        Generators::from_xy(x, y, kappa, &bundle.h)
    }

    pub fn from_xy(x: Op2D, y: Op2D, kappa: Rational, h: &Op2D) -> Self {
        let z = x.commutator(&y).scale(&kappa);
        let hp = vec![Op2D::identity(), h.clone(), h.compose(h)];
        Generators { x, y, z, kappa, hp }
    }

    /// Same `X`, `Z`, `H` with `Y` replaced.
    pub fn with_y(&self, y: Op2D) -> Self {
        Generators { y, ..self.clone() }
    }

    pub fn h(&self) -> &Op2D {
        &self.hp[1]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub name: &'static str,
    pub zero: bool,
    pub order: Option<u32>,
    pub leading: Option<String>,
    pub seconds: f64,
}

impl Residual {
    fn from_op(name: &'static str, r: &Op2D, t0: Instant) -> Self {
        Residual {
            name,
            zero: r.is_zero(),
            order: r.order(),
            leading: r.leading_term(),
            seconds: t0.elapsed().as_secs_f64(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub xy: Residual,
    pub xz: Residual,
    pub yz: Residual,
    pub z_order: Option<u32>,
    pub yz_order: Option<u32>,
    pub all_zero: bool,
}

/// Bound on the order of `[Y, Z]`.
pub const YZ_ORDER_BOUND: u32 = 8;

/// The three relation residuals, exactly.
pub fn verify_cubic_relations(gens: &Generators, c: &AlgebraConstants) -> Result<RelationReport> {
    let (x, y, z) = (&gens.x, &gens.y, &gens.z);
    let ((xy, xz), yz) = rayon::join(
        || {
            rayon::join(
                || {
                    let t0 = Instant::now();
                    let r = x.commutator(y).scale(&gens.kappa).sub(z);
                    Residual::from_op("[X,Y] - Z", &r, t0)
                },
                || {
                    let t0 = Instant::now();
                    let rhs = x.anticommutator(y).scale(&c.b).add(&c.f.to_op(&gens.hp));
                    let r = x.commutator(z).sub(&rhs);
                    Residual::from_op("[X,Z] - b{X,Y} - f", &r, t0)
                },
            )
        },
        || -> Result<(Residual, Option<u32>)> {
            let t0 = Instant::now();
            let yz = y.commutator(z);
            yz.check_order(YZ_ORDER_BOUND)?;
            let rhs = cubic_rhs(gens, c);
            let r = yz.sub(&rhs);
            Ok((Residual::from_op("[Y,Z] + bY^2 - gX^3 - hX^2 - iX - j", &r, t0), yz.order()))
        },
    );
    let (yz, yz_order) = yz?;
    Ok(RelationReport {
        all_zero: xy.zero && xz.zero && yz.zero,
        z_order: z.order(),
        yz_order,
        xy,
        xz,
        yz,
    })
}

/// `-b Y² + g X³ + h X² + i X + j`
fn cubic_rhs(gens: &Generators, c: &AlgebraConstants) -> Op2D {
    let (x, y) = (&gens.x, &gens.y);
    let x2 = x.compose(x);
    let x3 = x2.compose(x);
    let y2 = y.compose(y);
    let parts = [
        y2.scale(&-&c.b),
        x3.scale(&c.g),
        c.h.to_op(&gens.hp).compose(&x2),
        c.i.to_op(&gens.hp).compose(x),
        c.j.to_op(&gens.hp),
    ];
    parts.iter().fold(Op2D::zero(), |acc, p| acc.add(p))
}

/// Coefficient of `fY` in the Casimir.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CasimirForm {
    /// `-2 f Y`, central.
    Derived,
    /// `-f Y`
    AsPrinted,
}

/// `K = Z² - b{X,Y²} + b²Y² - κ fY + (g/2)X⁴ + (2/3)(h+gb)X³
/// + (-gb²/6 + bh/3 + i)X² + 2jX`
pub fn casimir_operator(gens: &Generators, c: &AlgebraConstants, form: CasimirForm) -> Op2D {
    let (x, y, z) = (&gens.x, &gens.y, &gens.z);
    let hp = &gens.hp;
    let ((z2, y2), (x2, x3, x4)) = rayon::join(
        || rayon::join(|| z.compose(z), || y.compose(y)),
        || {
            let x2 = x.compose(x);
            let x3 = x2.compose(x);
            let x4 = x3.compose(x);
            (x2, x3, x4)
        },
    );
    let b = &c.b;
    let kf = match form {
        CasimirForm::Derived => int(2),
        CasimirForm::AsPrinted => int(1),
    };
    let gb = &c.g * b;
    let c3 = c.h.add(&CentralPoly::constant(gb.clone())).scale(&rat(2, 3));
    let c2 = c
        .h
        .scale(&(b / int(3)))
        .add(&c.i)
        .add(&CentralPoly::constant(-&gb * b / int(6)));
    let parts = [
        z2,
        x.anticommutator(&y2).scale(&-b),
        y2.scale(&(b * b)),
        c.f.to_op(hp).compose(y).scale(&-kf),
        x4.scale(&(&c.g / int(2))),
        c3.to_op(hp).compose(&x3),
        c2.to_op(hp).compose(&x2),
        c.j.scale(&int(2)).to_op(hp).compose(x),
    ];
    parts.iter().fold(Op2D::zero(), |acc, p| acc.add(p))
}

/// `K2 = 64((α²+αβ+β²-2)(α-β)⁴ + 8α² + 8β²)`,
/// `K0 = 2ω²(α-β-2)²(α-β+2)²(α+β)²(α-β)²`
pub fn casimir_printed_values(p: &SystemParams) -> (Rational, Rational) {
    let (a, b) = (&p.alpha, &p.beta);
    let d = p.delta();
    let k2 = ((sq(a) + a * b + sq(b) - int(2)) * sq(&sq(&d)) + sq(a) * int(8) + sq(b) * int(8)) * int(64);
    let k0 = sq(&p.omega) * int(2) * sq(&(&d - int(2))) * sq(&(&d + int(2))) * sq(&(a + b)) * sq(&d);
    (k2, k0)
}

/// Casimir values for the standard generators: `K2/64` and `K0/2`.
pub fn casimir_realized_values(p: &SystemParams) -> (Rational, Rational) {
    let (k2, k0) = casimir_printed_values(p);
    (k2 / int(64), k0 / int(2))
}

#[derive(Clone, Debug, Serialize)]
pub struct CasimirReport {
    pub form: CasimirForm,
    /// `K = k2 H² + k0` for some rationals.
    pub central: bool,
    #[serde(serialize_with = "ser_opt_pair")]
    pub fitted: Option<(Rational, Rational)>,
    #[serde(serialize_with = "ser_pair")]
    pub expected: (Rational, Rational),
    pub k2_matches: bool,
    pub k0_matches: bool,
    /// Order of `K - fitted` when not central.
    pub remainder_order: Option<u32>,
    pub seconds: f64,
}

fn ser_pair<S: serde::Serializer>(v: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&fmt_rational(&v.0))?;
    t.serialize_element(&fmt_rational(&v.1))?;
    t.end()
}

fn ser_opt_pair<S: serde::Serializer>(
    v: &Option<(Rational, Rational)>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(p) => ser_pair(p, s),
        None => s.serialize_none(),
    }
}

/// Build `K`, decide whether it is `k2 H² + k0` and compare with `expected`.
pub fn casimir_check(
    gens: &Generators,
    c: &AlgebraConstants,
    form: CasimirForm,
    expected: (Rational, Rational),
) -> CasimirReport {
    let t0 = Instant::now();
    let k = casimir_operator(gens, c, form);
    let basis = [gens.hp[2].clone(), gens.hp[0].clone()];
    let fit = fit_in_span(&k, &basis);
    let (fitted, remainder_order) = match &fit {
        Ok(v) => (Some((v[0].clone(), v[1].clone())), None),
        Err(_) => (None, k.order()),
    };
    let (k2_matches, k0_matches) = match &fitted {
        Some((k2, k0)) => (*k2 == expected.0, *k0 == expected.1),
        None => (false, false),
    };
    CasimirReport {
        form,
        central: fitted.is_some(),
        fitted,
        expected,
        k2_matches,
        k0_matches,
        remainder_order,
        seconds: t0.elapsed().as_secs_f64(),
    }
}

const SAMPLE_POINTS: [(i64, i64); 10] = [
    (1, 3),
    (-2, 7),
    (3, 5),
    (-5, 11),
    (7, 13),
    (1, 17),
    (-9, 19),
    (11, 23),
    (-13, 29),
    (5, 31),
];

type Functional = (u32, u32, i32, u8, usize);

fn functionals(o: &Op2D, pts: &[Rational]) -> Option<BTreeMap<Functional, Rational>> {
    let mut m = BTreeMap::new();
    for ((i, j), c) in o.terms() {
        for (k, t) in c.terms() {
            for (a, x) in pts.iter().enumerate() {
                m.insert((*i, *j, *k, 0, a), t.even.eval(x)?);
                m.insert((*i, *j, *k, 1, a), t.odd.eval(x)?);
            }
        }
    }
    Some(m)
}

/// Exact coefficients `c` with `target = Σ c_k basis_k`.
///
/// Candidates come from evaluating every coefficient at a few sample points
/// and solving the resulting linear system; the answer is then checked as
/// an operator identity, so a lucky sample can never produce a false fit.
pub fn fit_in_span(target: &Op2D, basis: &[Op2D]) -> Result<Vec<Rational>> {
    let all: Vec<&Op2D> = std::iter::once(target).chain(basis.iter()).collect();
    let pts: Vec<Rational> = SAMPLE_POINTS
        .iter()
        .map(|&(n, d)| rat(n, d))
        .filter(|x| all.iter().all(|o| functionals(o, std::slice::from_ref(x)).is_some()))
        .take(6)
        .collect();
    let ft = functionals(target, &pts).ok_or_else(|| Error::Numeric("sample hit a pole".into()))?;
    let fb: Vec<_> = basis
        .par_iter()
        .map(|b| functionals(b, &pts).expect("filtered points"))
        .collect();
    let mut keys: Vec<Functional> = ft.keys().cloned().collect();
    for f in &fb {
        keys.extend(f.keys().cloned());
    }
    keys.sort();
    keys.dedup();
    let n = basis.len();
    let get = |m: &BTreeMap<Functional, Rational>, k: &Functional| m.get(k).cloned().unwrap_or_else(Rational::zero);
    let mut rows: Vec<Vec<Rational>> = keys
        .iter()
        .map(|k| {
            let mut r: Vec<Rational> = fb.iter().map(|f| get(f, k)).collect();
            r.push(get(&ft, k));
            r
        })
        .collect();
    let x = solve_exact(&mut rows, n).ok_or_else(|| Error::Residual("target is not in the span".into()))?;
    let combo = basis
        .iter()
        .zip(&x)
        .fold(Op2D::zero(), |acc, (b, c)| acc.add(&b.scale(c)));
    if target.sub(&combo).is_zero() {
        Ok(x)
    } else {
        Err(Error::Residual("sampled fit failed the exact check".into()))
    }
}

/// Gauss-Jordan on an augmented matrix with `n` unknowns; free unknowns are
/// set to zero. `None` if inconsistent.
fn solve_exact(rows: &mut [Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, p);
        let inv = Rational::one() / &rows[row][col];
        for v in rows[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[row].clone();
        for (r, other) in rows.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (v, pv) in other.iter_mut().zip(&pivot_row) {
                    *v -= pv * &f;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if rows[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

/// Fit `b, f, g, h, i, j` from the operators alone, allowing `f` up to `H²`
/// and `h, i, j` to carry `H` and `H²`.
pub fn fit_algebra_constants(gens: &Generators) -> Result<AlgebraConstants> {
    let (x, y, z) = (&gens.x, &gens.y, &gens.z);
    let hp = &gens.hp;
    let xz = x.commutator(z);
    let f_basis = [x.anticommutator(y), hp[0].clone(), hp[1].clone(), hp[2].clone()];
    let fx = fit_in_span(&xz, &f_basis)?;
    let yz = y.commutator(z);
    let x2 = x.compose(x);
    let x3 = x2.compose(x);
    let mut basis = vec![y.compose(y), x3];
    for xk in [&x2, x, &hp[0]] {
        for h in hp {
            basis.push(h.compose(xk));
        }
    }
    let fy = fit_in_span(&yz, &basis)?;
    let poly = |k: usize| CentralPoly::new(fy[k..k + 3].to_vec());
    let b = fx[0].clone();
    if -&fy[0] != b {
        return Err(Error::Residual(format!(
            "Y² coefficient {} does not match b = {}",
            fmt_rational(&-&fy[0]),
            fmt_rational(&b)
        )));
    }
    Ok(AlgebraConstants {
        b,
        f: CentralPoly::new(fx[1..].to_vec()),
        g: fy[1].clone(),
        h: poly(2),
        i: poly(5),
        j: poly(8),
    })
}

/// Matrix-element check of the three relations on one function. `Z` and
/// the commutators act through repeated application; only `gens.z` is used
/// as a formed operator, to test the first relation.
pub fn shadow_check(gens: &Generators, c: &AlgebraConstants, f: &QuasiPoly) -> Result<[bool; 3]> {
    let (x, y, z) = (&gens.x, &gens.y, &gens.z);
    let h = gens.h();
    let ap = |o: &Op2D, g: &QuasiPoly| g.apply(o);
    let add = |a: &QuasiPoly, b: &QuasiPoly| a.sub(&b.scale(&int(-1)));
    let poly_h = |p: &CentralPoly, g: &QuasiPoly| -> Result<QuasiPoly> {
        let mut acc = g.scale(&p.coeff(0));
        let mut cur = g.clone();
        for k in 1..p.coeffs().len() {
            cur = ap(h, &cur)?;
            acc = add(&acc, &cur.scale(&p.coeff(k)))?;
        }
        Ok(acc)
    };
    let zf = |g: &QuasiPoly| ap(z, g);
    let chain = ap(x, &ap(y, f)?)?.sub(&ap(y, &ap(x, f)?)?)?.scale(&gens.kappa);
    let xy_ok = chain.same_function(&zf(f)?)?;
    let xz = ap(x, &zf(f)?)?.sub(&zf(&ap(x, f)?)?)?;
    let xy_f = add(&ap(x, &ap(y, f)?)?, &ap(y, &ap(x, f)?)?)?;
    let rhs = add(&xy_f.scale(&c.b), &poly_h(&c.f, f)?)?;
    let xz_ok = xz.same_function(&rhs)?;
    let yz = ap(y, &zf(f)?)?.sub(&zf(&ap(y, f)?)?)?;
    let xf = ap(x, f)?;
    let x2f = ap(x, &xf)?;
    let x3f = ap(x, &x2f)?;
    let mut rhs = ap(y, &ap(y, f)?)?.scale(&-&c.b);
    rhs = add(&rhs, &x3f.scale(&c.g))?;
    rhs = add(&rhs, &poly_h(&c.h, &x2f)?)?;
    rhs = add(&rhs, &poly_h(&c.i, &xf)?)?;
    rhs = add(&rhs, &poly_h(&c.j, f)?)?;
    let yz_ok = yz.same_function(&rhs)?;
    Ok([xy_ok, xz_ok, yz_ok])
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraReport {
    pub params: SystemParams,
    pub normalization: Normalization,
    pub constants: AlgebraConstants,
    pub relations: RelationReport,
    pub casimir: CasimirReport,
    /// Same check with the published table on the standard generators.
    pub as_printed_relations: Option<RelationReport>,
    pub as_printed_casimir: Option<CasimirReport>,
    pub q_form: QFormCheck,
}

/// Full exact verification at one parameter set. `with_printed` adds the
/// published constants and Casimir on the standard generators.
pub fn algebra_report(bundle: &IntegralBundle, with_printed: bool) -> Result<AlgebraReport> {
    let p = &bundle.params;
    let gens = Generators::new(bundle, Normalization::Standard);
    let c = realized_constants(p);
    let relations = verify_cubic_relations(&gens, &c)?;
    let casimir = casimir_check(&gens, &c, CasimirForm::Derived, casimir_realized_values(p));
    let (as_printed_relations, as_printed_casimir) = if with_printed {
        let printed = algebra_constants(p);
        (
            Some(verify_cubic_relations(&gens, &printed)?),
            Some(casimir_check(&gens, &printed, CasimirForm::AsPrinted, casimir_printed_values(p))),
        )
    } else {
        (None, None)
    };
    Ok(AlgebraReport {
        params: p.clone(),
        normalization: Normalization::Standard,
        constants: c,
        relations,
        casimir,
        as_printed_relations,
        as_printed_casimir,
        q_form: q_form_crosscheck(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop::op_equal;

    #[test]
    fn published_table_at_reference() {
        let c = algebra_constants(&SystemParams::reference());
        assert_eq!(c.b, int(16));
        assert_eq!(c.f, CentralPoly::linear(int(18)));
        assert_eq!(c.g, int(-1024));
        assert_eq!(c.h, CentralPoly::even2(int(48), int(1280)));
        assert_eq!(c.i, CentralPoly::even2(int(-96), int(-192)));
        assert_eq!(c.j, CentralPoly::even2(int(54), int(-144)));
        let (k2, k0) = casimir_printed_values(&SystemParams::reference());
        assert_eq!((k2, k0), (int(2880), int(162)));
    }

    #[test]
    fn realized_table_at_reference() {
        let c = realized_constants(&SystemParams::reference());
        assert_eq!(c.b, int(4));
        assert_eq!(c.f, CentralPoly::linear(int(9)));
        assert_eq!(c.g, int(-32));
        assert_eq!(c.h, CentralPoly::even2(int(3), int(80)));
        assert_eq!(c.i, CentralPoly::even2(int(-12), int(-24)));
        assert_eq!(c.j, CentralPoly::even2(rat(27, 2), int(-36)));
        assert_eq!(casimir_realized_values(&SystemParams::reference()), (int(45), int(81)));
    }

    #[test]
    fn q_form_needs_derived_q() {
        for (a, b, w) in [(1, 2, 1), (1, 3, 2), (2, 5, 3)] {
            let check = q_form_crosscheck(&SystemParams::from_ints(a, b, w));
            assert!(check.holds);
            assert!(!check.holds_as_printed);
            assert_eq!(check.mismatched_as_printed, vec!["i", "j"]);
        }
    }

    #[test]
    fn central_poly_display_and_ops() {
        let p = CentralPoly::even2(int(3), int(-1));
        assert_eq!(p.to_string(), "3*H^2 + -1");
        assert_eq!(p.add(&p.scale(&int(-1))), CentralPoly::default());
        assert_eq!(CentralPoly::new(vec![int(0), int(0)]).coeffs().len(), 0);
    }

    #[test]
    fn exact_fit_recovers_combination() {
        let a = Op2D::dphi().compose(&Op2D::dphi());
        let b = Op2D::dr();
        let target = a.scale(&rat(3, 7)).sub(&b.scale(&int(2)));
        let c = fit_in_span(&target, &[a.clone(), b.clone()]).unwrap();
        assert_eq!(c, vec![rat(3, 7), int(-2)]);
        assert!(fit_in_span(&Op2D::identity(), &[a, b]).is_err());
        assert!(op_equal(&target, &target));
    }

    #[test]
    fn gauss_jordan_free_and_inconsistent() {
        let mut rows = vec![vec![int(1), int(1), int(2)], vec![int(2), int(2), int(4)]];
        assert_eq!(solve_exact(&mut rows, 2).unwrap(), vec![int(2), int(0)]);
        let mut rows = vec![vec![int(1), int(3)], vec![int(1), int(4)]];
        assert!(solve_exact(&mut rows, 1).is_none());
    }
}

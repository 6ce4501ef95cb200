//! Deformed-oscillator representations of the cubic algebra.
//!
//! With `N` acting as `n + u`, the structure function is
//!
//! ```text
//! Φ(u, E, n) = -3·2³⁹ ω² ∏_{k=1}^{8} (n + u - c_k) · ((n + u - ½)² - E² / (κ ω²))
//! ```
//!
//! where `c_k` runs over `½(±1 ± α ± β)`-type shifts. The literal pair
//! `(n + u - (∓√2 E + 2ω)/(4ω))` gives `κ = 8`; closing at the listed
//! energies `E₁, E₂, E₃` needs `κ = 4`, and the operator energies (twice
//! those) need `κ = 16`. One literal factor also lacks the `u` shift.
//! Both readings are available through [`PhiForm`].

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{fmt_rational, int, rat};
use crate::exact::{Poly, Rational};
use crate::model::params::{ser_rational, SystemParams};

/// `3·2³⁹`
pub fn prefactor_magnitude() -> Rational {
    int(3 * (1_i64 << 39))
}

/// Reading of the sixth linear factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorForm {
    /// `n + u - ½(1 - α + β)`
    Shifted,
    /// `n - ½(1 - α + β)`
    AsPrinted,
}

/// Denominator `κ` of the energy pair `(n + u - ½)² - E²/(κω²)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EPair {
    /// `κ = 8`, from the `√2` in the literal roots.
    AsPrinted,
    /// `κ = 4`, closes at `E₁, E₂, E₃`.
    Listed,
    /// `κ = 16`, closes at the operator energies `2E₁, 2E₂, 2E₃`.
    Operator,
}

impl EPair {
    pub fn kappa(self) -> i64 {
        match self {
            EPair::AsPrinted => 8,
            EPair::Listed => 4,
            EPair::Operator => 16,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PhiForm {
    pub factors: FactorForm,
    pub pair: EPair,
}

impl PhiForm {
    pub const DERIVED: PhiForm = PhiForm {
        factors: FactorForm::Shifted,
        pair: EPair::Listed,
    };
    pub const AS_PRINTED: PhiForm = PhiForm {
        factors: FactorForm::AsPrinted,
        pair: EPair::AsPrinted,
    };
}

/// `coeff·n + constant`
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearFactor {
    #[serde(serialize_with = "ser_rational")]
    pub coeff: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub constant: Rational,
}

impl LinearFactor {
    fn eval(&self, n: &Rational) -> Rational {
        &self.coeff * n + &self.constant
    }

    /// Root in `n`, if the factor depends on `n`.
    pub fn root(&self) -> Option<Rational> {
        (!self.coeff.is_zero()).then(|| -&self.constant / &self.coeff)
    }

    fn poly(&self) -> Poly {
        Poly::new(vec![self.constant.clone(), self.coeff.clone()])
    }
}

/// `Φ(u, E, ·)` at fixed `u`, `E`, kept factored.
#[derive(Clone, Debug, Serialize)]
pub struct StructureFn {
    #[serde(serialize_with = "ser_rational")]
    pub prefactor: Rational,
    pub linear: Vec<LinearFactor>,
    /// `(n + shift)² - c`
    #[serde(serialize_with = "ser_rational")]
    pub pair_shift: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub pair_c: Rational,
}

/// The eight shifts `c_k` in factor order.
pub fn factor_shifts(p: &SystemParams) -> [Rational; 8] {
    let (a, b) = (&p.alpha, &p.beta);
    let h = |x: Rational| x / int(2);
    [
        h(int(1) - a - b),
        h(int(-1) + a - b),
        h(int(3) + a - b),
        h(int(1) + a - b),
        h(int(-1) - a + b),
        h(int(1) - a + b),
        h(int(1) + a + b),
        h(int(3) - a + b),
    ]
}

impl StructureFn {
    pub fn new(p: &SystemParams, u: &Rational, e: &Rational, form: PhiForm) -> Self {
        let linear = factor_shifts(p)
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                let shift = if k == 5 && form.factors == FactorForm::AsPrinted {
                    Rational::zero()
                } else {
                    u.clone()
                };
                LinearFactor {
                    coeff: Rational::one(),
                    constant: shift - c,
                }
            })
            .collect();
        let w2 = &p.omega * &p.omega;
        StructureFn {
            prefactor: -prefactor_magnitude() * &w2,
            linear,
            pair_shift: u - rat(1, 2),
            pair_c: e * e / (w2 * int(form.pair.kappa())),
        }
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        let s = n + &self.pair_shift;
        let pair = &s * &s - &self.pair_c;
        self.linear.iter().fold(&self.prefactor * pair, |acc, f| acc * f.eval(n))
    }

    pub fn eval_at(&self, n: i64) -> Rational {
        self.eval(&int(n))
    }

    /// Degree-10 polynomial in `n`.
    pub fn expand(&self) -> Poly {
        let pair = Poly::new(vec![
            &self.pair_shift * &self.pair_shift - &self.pair_c,
            &self.pair_shift * int(2),
            Rational::one(),
        ]);
        self.linear
            .iter()
            .fold(pair.scale(&self.prefactor), |acc, f| &acc * &f.poly())
    }

    /// Factored and expanded forms agree at `n = 0..=10`.
    pub fn interpolation_certificate(&self) -> bool {
        let e = self.expand();
        e.degree() == Some(10) && (0..=10).all(|n| e.eval(&int(n)) == self.eval_at(n))
    }

    /// Rational roots in `n`, with repetition.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut roots: Vec<Rational> = self.linear.iter().filter_map(LinearFactor::root).collect();
        if let Some(r) = crate::exact::rational::sqrt_exact(&self.pair_c) {
            roots.push(-&self.pair_shift + &r);
            roots.push(-&self.pair_shift - r);
        }
        roots.sort();
        roots
    }
}

/// `Φ(u, E, n)`
pub fn phi_eval(u: &Rational, e: &Rational, n: i64, p: &SystemParams, form: PhiForm) -> Rational {
    StructureFn::new(p, u, e, form).eval_at(n)
}

/// The first literal form
/// `3·2³⁹ ∏(α-β∓2N∓2u+…)(H² - 2(1-2N-2u)²ω²)` at `N = n`.
pub fn phi_first_form(u: &Rational, h: &Rational, n: i64, p: &SystemParams) -> Rational {
    let (a, b) = (&p.alpha, &p.beta);
    let d = a - b;
    let s = a + b;
    let t = (int(n) + u) * int(2);
    let f = [
        &d - &t - int(1),
        &d - &t + int(1),
        &d - &t + int(3),
        &d + &t - int(3),
        &d + &t - int(1),
        &d + &t + int(1),
        &s - &t + int(1),
        &s + &t - int(1),
    ];
    let one_m = int(1) - &t;
    let pair = h * h - one_m.clone() * one_m * &p.omega * &p.omega * int(2);
    f.into_iter().fold(prefactor_magnitude() * pair, |acc, x| acc * x)
}

/// `first / rewritten` if it is the same constant at every sample, else `None`.
pub fn first_form_ratio(p: &SystemParams, u: &Rational, e: &Rational) -> Option<Rational> {
    let sf = StructureFn::new(p, u, e, PhiForm { factors: FactorForm::Shifted, pair: EPair::AsPrinted });
    let mut ratio = None;
    for n in 0..=12 {
        let lhs = phi_first_form(u, e, n, p);
        let rhs = sf.eval_at(n);
        match (lhs.is_zero(), rhs.is_zero()) {
            (true, true) => continue,
            (false, false) => {}
            _ => return None,
        }
        let q = lhs / rhs;
        match &ratio {
            None => ratio = Some(q),
            Some(r) if *r == q => {}
            Some(_) => return None,
        }
    }
    ratio
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signs {
    pub eps1: i8,
    pub eps2: i8,
}

impl Signs {
    fn e1(self) -> Rational {
        int(self.eps1 as i64)
    }
    fn e2(self) -> Rational {
        int(self.eps2 as i64)
    }
}

/// The sign choices a family depends on (`ε₂` is pinned to `+1` for
/// families 2 and 3).
pub fn family_signs(family: u8) -> Vec<Signs> {
    let e2s: &[i8] = if family == 1 { &[1, -1] } else { &[1] };
    [1i8, -1]
        .iter()
        .flat_map(|&eps1| e2s.iter().map(move |&eps2| Signs { eps1, eps2 }))
        .collect()
}

/// `u₁ = ½(ε₁ + ε₂(α-β))`, `u₂ = ½(3 + ε₁(α-β))`, `u₃ = ½(1 + ε₁(α+β))`.
pub fn u_root(family: u8, s: Signs, p: &SystemParams) -> Result<Rational> {
    let d = p.delta();
    let sum = &p.alpha + &p.beta;
    let twice = match family {
        1 => s.e1() + s.e2() * d,
        2 => int(3) + s.e1() * d,
        3 => int(1) + s.e1() * sum,
        _ => return Err(Error::InvalidParams(format!("family {family} is not 1, 2 or 3"))),
    };
    Ok(twice / int(2))
}

/// `E₁ = ω(1 + 2p + ε₁ + ε₂(α-β))`, `E₂ = ω(4 + 2p + ε₁(α-β))`,
/// `E₃ = ω(2 + 2p + ε₁(α+β))`.
pub fn family_energy(family: u8, s: Signs, level: u32, p: &SystemParams) -> Result<Rational> {
    let d = p.delta();
    let sum = &p.alpha + &p.beta;
    let tp = int(2 * level as i64);
    let inner = match family {
        1 => int(1) + tp + s.e1() + s.e2() * d,
        2 => int(4) + tp + s.e1() * d,
        3 => int(2) + tp + s.e1() * sum,
        _ => return Err(Error::InvalidParams(format!("family {family} is not 1, 2 or 3"))),
    };
    Ok(&p.omega * inner)
}

#[derive(Clone, Debug, Serialize)]
pub struct Positivity {
    pub admissible: bool,
    pub failures: Vec<i64>,
}

/// `Φ(u, E, n) > 0` for `n = 1..=level`.
pub fn positivity_scan(sf: &StructureFn, level: u32) -> Positivity {
    let failures: Vec<i64> = (1..=level as i64).filter(|&n| !sf.eval_at(n).is_positive()).collect();
    Positivity {
        admissible: failures.is_empty(),
        failures,
    }
}

/// `k ≥ 0` with `E = ω(2 + 2k + σ_α α + σ_β β)`, for the given sign flips.
pub fn level_index(e: &Rational, p: &SystemParams, sa: i8, sb: i8) -> Option<u32> {
    let k2 = e / &p.omega - int(2) - &p.alpha * int(sa as i64) - &p.beta * int(sb as i64);
    let k = k2 / int(2);
    (k.is_integer() && !k.is_negative()).then(|| k.to_integer().try_into().ok()).flatten()
}

/// Sign flips of `(α, β)` whose ladder a family's energies sit on.
pub fn family_flips(family: u8, s: Signs) -> (i8, i8) {
    match family {
        1 => (s.eps2, -s.eps2),
        2 => (s.eps1, -s.eps1),
        _ => (s.eps1, s.eps1),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Representation {
    pub family: u8,
    pub eps1: i8,
    pub eps2: i8,
    #[serde(serialize_with = "ser_rational")]
    pub u: Rational,
    pub p: u32,
    #[serde(serialize_with = "ser_rational")]
    pub energy: Rational,
    pub vanishes_at_0: bool,
    pub vanishes_at_p1: bool,
    pub positivity: Positivity,
    pub admissible: bool,
    /// `m + n` on the `ω(2 + 2(m+n) ± α ± β)` ladder with the family's flips.
    pub level: Option<u32>,
}

/// One representation: closure at both ends and interior positivity.
pub fn representation(family: u8, s: Signs, level: u32, p: &SystemParams, form: PhiForm) -> Result<Representation> {
    let u = u_root(family, s, p)?;
    let energy = family_energy(family, s, level, p)?;
    let sf = StructureFn::new(p, &u, &energy, form);
    let vanishes_at_0 = sf.eval_at(0).is_zero();
    let vanishes_at_p1 = sf.eval_at(level as i64 + 1).is_zero();
    let positivity = positivity_scan(&sf, level);
    let (sa, sb) = family_flips(family, s);
    Ok(Representation {
        family,
        eps1: s.eps1,
        eps2: s.eps2,
        admissible: vanishes_at_0 && vanishes_at_p1 && positivity.admissible,
        level: level_index(&energy, p, sa, sb),
        u,
        p: level,
        energy,
        vanishes_at_0,
        vanishes_at_p1,
        positivity,
    })
}

/// Every family, sign choice and `p ≤ max_p`.
pub fn spectrum_table(p: &SystemParams, max_p: u32, form: PhiForm) -> Result<Vec<Representation>> {
    let jobs: Vec<(u8, Signs, u32)> = (1..=3u8)
        .flat_map(|f| family_signs(f).into_iter().map(move |s| (f, s)))
        .flat_map(|(f, s)| (0..=max_p).map(move |l| (f, s, l)))
        .collect();
    jobs.par_iter().map(|&(f, s, l)| representation(f, s, l, p, form)).collect()
}

/// Appendix product for a family, transcribed with `β₁ → β`, bare `ε → ε₁`
/// and the stray parenthesis dropped.
pub fn appendix_phi(family: u8, s: Signs, level: u32, n: i64, p: &SystemParams) -> Result<Rational> {
    let (a, b) = (&p.alpha, &p.beta);
    let (e1, e2) = (s.e1(), s.e2());
    let nn = int(n);
    let pp = int(level as i64);
    let w2 = &p.omega * &p.omega;
    let h = |x: Rational| x / int(2);
    let head = prefactor_magnitude() * &w2 * (&pp + int(1) - &nn);
    let factors: Vec<Rational> = match family {
        1 => vec![
            &w2 * int(1),
            &nn + &pp + &e1 + a * &e2 - b * &e2,
            h(a * &e2 + a - b * &e2 + b + &nn * int(2) + &e1 - int(1)),
            h(a * (&e2 - int(1)) - b * &e2 + b + &nn * int(2) + &e1 + int(1)),
            h(a * (&e2 - int(1)) - b * &e2 + b + &nn * int(2) + &e1 - int(3)),
            h(a * (&e2 - int(1)) - b * &e2 + b + &nn * int(2) + &e1 - int(1)),
            h(a * (&e2 + int(1)) - b * (&e2 + int(1)) + &nn * int(2) + &e1 + int(1)),
            h(a * (&e2 + int(1)) - b * (&e2 + int(1)) + &nn * int(2) + &e1 - int(1)),
            h(a * (&e2 - int(1)) - b * (&e2 + int(1)) + &nn * int(2) + &e1 - int(1)),
            h(a * (&e2 + int(1)) - b * (&e2 + int(1)) + &nn * int(2) + &e1 - int(3)),
        ],
        2 => vec![
            a * &e1 - b * &e1 + &nn + &pp + int(3),
            h(a * &e1 + a - b * &e1 + b + &nn * int(2) + int(2)),
            h(a * (&e1 - int(1)) - b * &e1 + b + &nn * int(2) + int(4)),
            h((&e1 - int(1)) * (a - b)) + &nn,
            h(a * (&e1 - int(1)) - b * &e1 + b + &nn * int(2) + int(2)),
            h(a * (&e1 + int(1)) - b * (&e1 + int(1)) + int(4)) + &nn,
            h(a * (&e1 + int(1)) - b * (&e1 + int(1)) + int(2)) + &nn,
            h(a * (&e1 - int(1)) - b * (&e1 + int(1)) + int(2)) + &nn,
            h((&e1 + int(1)) * (a - b)) + &nn,
        ],
        3 => vec![
            &e1 * (a + b) + &nn + &pp + int(1),
            h((&e1 + int(1)) * (a + b)) + &nn,
            h(a * (&e1 - int(1)) + b * &e1 + b + &nn * int(2) + int(2)),
            h(a * (&e1 - int(1)) + b * &e1 + b + &nn * int(2) - int(2)),
            h(&e1 * (a + b) - a + b + &nn * int(2)),
            h(&e1 * (a + b) + a - b + &nn * int(2) + int(2)),
            h(&e1 * (a + b) + a - b + &nn * int(2)),
        ],
        _ => return Err(Error::InvalidParams(format!("family {family} is not 1, 2 or 3"))),
    };
    Ok(factors.into_iter().fold(head, |acc, f| acc * f))
}

/// How the appendix product relates to [`phi_eval`] along `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AppendixRelation {
    Equal,
    ConstantRatio { ratio: String },
    /// Ratio varies with `n`; samples of `derived / appendix`.
    Varying { ratios: Vec<(i64, String)> },
    /// One side vanishes where the other does not.
    ZeroMismatch { at: Vec<i64> },
}

#[derive(Clone, Debug, Serialize)]
pub struct AppendixCheck {
    pub family: u8,
    pub eps1: i8,
    pub eps2: i8,
    pub p: u32,
    pub relation: AppendixRelation,
    pub both_vanish_at_p1: bool,
}

/// Compare the appendix product with the derived `Φ(u_f, E_f, n)` for
/// `n = 0..=level+4`.
pub fn appendix_crosscheck(family: u8, s: Signs, level: u32, p: &SystemParams) -> Result<AppendixCheck> {
    let u = u_root(family, s, p)?;
    let e = family_energy(family, s, level, p)?;
    let sf = StructureFn::new(p, &u, &e, PhiForm::DERIVED);
    let top = level as i64 + 4;
    let mut zero_mismatch = Vec::new();
    let mut ratios = Vec::new();
    for n in 0..=top {
        let ours = sf.eval_at(n);
        let theirs = appendix_phi(family, s, level, n, p)?;
        match (ours.is_zero(), theirs.is_zero()) {
            (true, true) => {}
            (false, false) => ratios.push((n, ours / theirs)),
            _ => zero_mismatch.push(n),
        }
    }
    let p1 = level as i64 + 1;
    let both_vanish_at_p1 = sf.eval_at(p1).is_zero() && appendix_phi(family, s, level, p1, p)?.is_zero();
    let relation = if !zero_mismatch.is_empty() {
        AppendixRelation::ZeroMismatch { at: zero_mismatch }
    } else if ratios.windows(2).all(|w| w[0].1 == w[1].1) {
        match ratios.first() {
            Some((_, r)) if !r.is_one() => AppendixRelation::ConstantRatio { ratio: fmt_rational(r) },
            _ => AppendixRelation::Equal,
        }
    } else {
        AppendixRelation::Varying {
            ratios: ratios.into_iter().map(|(n, r)| (n, fmt_rational(&r))).collect(),
        }
    };
    Ok(AppendixCheck {
        family,
        eps1: s.eps1,
        eps2: s.eps2,
        p: level,
        relation,
        both_vanish_at_p1,
    })
}

/// Appendix comparison for every family and sign choice at one `p`.
pub fn appendix_report(p: &SystemParams, level: u32) -> Result<Vec<AppendixCheck>> {
    (1..=3u8)
        .flat_map(|f| family_signs(f).into_iter().map(move |s| (f, s)))
        .map(|(f, s)| appendix_crosscheck(f, s, level, p))
        .collect()
}

//! Separated eigenstates `R_m ⊗ Φ_n`, their energies and exact eigenvalue
//! extraction.
//!
//! With `H = -Δ + ω²r² + r⁻²V` the radial equation in `y = ωr²` carries a
//! factor `4ω`, so `H (R_m ⊗ Φ_n) = 2ω(2 + 2m + 2n + α + β)(R_m ⊗ Φ_n)`.
//! [`energy_as_printed`] keeps the form without the 2.

use serde::Serialize;

use crate::diffop::{Op2D, QuasiPoly};
use crate::error::Result;
use crate::exact::rational::int;
use crate::exact::Rational;
use crate::model::hamiltonian::{build_hamiltonian, build_l1};
use crate::model::params::{ser_rational, SystemParams};
use crate::model::polys::{c_squared, laguerre, phi_state};

/// `R_m^C = y^{C/2} e^{-y/2} L_m^C(y)`, `y = ωr²`, up to a constant.
pub fn radial_state(m: u32, c: &Rational, omega: &Rational) -> QuasiPoly {
    QuasiPoly::radial(c.clone(), omega / int(2), &laguerre(m, c), omega)
}

/// `R_m^{C_n} ⊗ Φ_n`
pub fn product_state(m: u32, n: u32, p: &SystemParams) -> Result<QuasiPoly> {
    let c = p.c_n(n);
    radial_state(m, &c, &p.omega).mul(&phi_state(n, p)?)
}

/// `2ω(2 + 2m + 2n + α + β)`
pub fn energy(m: u32, n: u32, p: &SystemParams) -> Rational {
    energy_as_printed(m, n, p) * int(2)
}

/// `ω(2 + 2m + 2n + α + β)`
pub fn energy_as_printed(m: u32, n: u32, p: &SystemParams) -> Rational {
    &p.omega * (int(2 + 2 * m as i64 + 2 * n as i64) + &p.alpha + &p.beta)
}

/// Radial eigenvalue `2ω(2m + C + 1)` of `-∂r² - r⁻¹∂r + ω²r² + C²r⁻²`.
pub fn radial_eigenvalue(m: u32, c: &Rational, omega: &Rational) -> Rational {
    radial_eigenvalue_as_printed(m, c, omega) * int(2)
}

/// `ω(2m + C + 1)`
pub fn radial_eigenvalue_as_printed(m: u32, c: &Rational, omega: &Rational) -> Rational {
    omega * (int(2 * m as i64 + 1) + c)
}

/// `-∂r² - r⁻¹∂r + ω²r² + C²r⁻²`
pub fn radial_operator(c: &Rational, omega: &Rational) -> Op2D {
    use crate::exact::LaurentR;
    Op2D::term(2, 0, LaurentR::from_rational(0, int(-1)))
        .add(&Op2D::term(1, 0, LaurentR::from_rational(-1, int(-1))))
        .add(&Op2D::multiplication(
            LaurentR::from_rational(2, omega * omega).add(&LaurentR::from_rational(-2, c * c)),
        ))
}

/// `λ` with `A f = λ f` exactly, or `None` if `f` is not an eigenfunction.
pub fn eigenvalue_of(a: &Op2D, f: &QuasiPoly) -> Result<Option<Rational>> {
    f.apply(a)?.ratio_to(f)
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenCheck {
    pub m: u32,
    pub n: u32,
    #[serde(serialize_with = "ser_rational")]
    pub l1_expected: Rational,
    pub l1_holds: bool,
    #[serde(serialize_with = "ser_rational")]
    pub energy: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub energy_as_printed: Rational,
    /// `H ψ = energy · ψ`
    pub h_holds: bool,
    /// `H ψ = energy_as_printed · ψ`
    pub h_holds_as_printed: bool,
}

/// `L1 Φ_n = C_n² Φ_n` and `H (R_m ⊗ Φ_n) = E ψ` for both energy forms.
pub fn eigen_check(m: u32, n: u32, p: &SystemParams, h: &Op2D, l1: &Op2D) -> Result<EigenCheck> {
    let phi = phi_state(n, p)?;
    let l1_expected = c_squared(n, p);
    let l1_holds = phi.apply(l1)?.same_function(&phi.scale(&l1_expected))?;
    let psi = product_state(m, n, p)?;
    let hpsi = psi.apply(h)?;
    let e = energy(m, n, p);
    let ep = energy_as_printed(m, n, p);
    Ok(EigenCheck {
        m,
        n,
        l1_holds,
        h_holds: hpsi.same_function(&psi.scale(&e))?,
        h_holds_as_printed: hpsi.same_function(&psi.scale(&ep))?,
        l1_expected,
        energy: e,
        energy_as_printed: ep,
    })
}

/// Checks for every `m, n ≤ max`.
pub fn eigen_grid(p: &SystemParams, max: u32) -> Result<Vec<EigenCheck>> {
    use rayon::prelude::*;
    let h = build_hamiltonian(p);
    let l1 = build_l1(p);
    let pairs: Vec<(u32, u32)> = (0..=max).flat_map(|m| (0..=max).map(move |n| (m, n))).collect();
    pairs.par_iter().map(|&(m, n)| eigen_check(m, n, p, &h, &l1)).collect()
}

/// `∫_0^{π/2} Φ_m Φ_n dφ`, numerically.
pub fn angular_overlap(m: u32, n: u32, p: &SystemParams) -> Result<f64> {
    let a = phi_state(m, p)?;
    let b = phi_state(n, p)?;
    let f = |phi: f64| a.eval(1.0, phi) * b.eval(1.0, phi);
    Ok(quadrature::double_exponential::integrate(f, 0.0, std::f64::consts::FRAC_PI_2, 1e-14).integral)
}

/// Overlap divided by the geometric mean of the norms.
pub fn angular_overlap_normalized(m: u32, n: u32, p: &SystemParams) -> Result<f64> {
    let mn = angular_overlap(m, n, p)?;
    let mm = angular_overlap(m, m, p)?;
    let nn = angular_overlap(n, n, p)?;
    Ok(mn / (mm * nn).sqrt())
}

/// Sample `ψ(r, φ)` of `R_m ⊗ Φ_n`.
pub fn sample_state(m: u32, n: u32, p: &SystemParams, r: f64, phi: f64) -> Result<f64> {
    Ok(product_state(m, n, p)?.eval(r, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn energies_at_reference() {
        let p = SystemParams::reference();
        assert_eq!(energy_as_printed(0, 0, &p), int(5));
        assert_eq!(energy_as_printed(1, 1, &p), int(9));
        assert_eq!(radial_eigenvalue_as_printed(0, &int(6), &p.omega), int(7));
        assert_eq!(energy(0, 0, &p), int(10));
    }

    #[test]
    fn radial_eigenvalue_has_factor_two() {
        let omega = rat(3, 2);
        let c = rat(7, 3);
        let op = radial_operator(&c, &omega);
        for m in 0..4 {
            let f = radial_state(m, &c, &omega);
            assert_eq!(eigenvalue_of(&op, &f).unwrap(), Some(radial_eigenvalue(m, &c, &omega)));
        }
    }

    #[test]
    fn l1_eigenvalues() {
        let p = SystemParams::reference();
        let l1 = build_l1(&p);
        assert_eq!(eigenvalue_of(&l1, &phi_state(0, &p).unwrap()).unwrap(), Some(int(16)));
        assert_eq!(eigenvalue_of(&l1, &phi_state(1, &p).unwrap()).unwrap(), Some(int(36)));
    }

    #[test]
    fn product_states_are_h_eigenfunctions() {
        let p = SystemParams::reference();
        let h = build_hamiltonian(&p);
        let psi = product_state(1, 2, &p).unwrap();
        assert_eq!(eigenvalue_of(&h, &psi).unwrap(), Some(energy(1, 2, &p)));
        let not_eigen = psi.sub(&product_state(0, 0, &p).unwrap()).unwrap();
        assert_eq!(eigenvalue_of(&h, &not_eigen).unwrap(), None);
    }

    #[test]
    fn distinct_states_are_orthogonal() {
        let p = SystemParams::reference();
        assert!(angular_overlap_normalized(1, 2, &p).unwrap().abs() < 1e-10);
        assert!(angular_overlap_normalized(0, 3, &p).unwrap().abs() < 1e-10);
        assert!((angular_overlap_normalized(2, 2, &p).unwrap() - 1.0).abs() < 1e-12);
        let q = SystemParams::new(rat(3, 4), rat(5, 3), int(1)).unwrap();
        assert!(angular_overlap_normalized(0, 1, &q).unwrap().abs() < 1e-10);
    }
}

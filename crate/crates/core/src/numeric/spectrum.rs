//! Angular and radial spectra and the reconstructed `E(m, n)`.

use std::io::Write;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::model::params::SystemParams;
use crate::model::states::{energy, energy_as_printed};

use super::EigResult;

#[derive(Clone, Debug, Serialize)]
pub struct NumericConfig {
    /// Interior nodes on the coarsest angular mesh.
    pub angular_nodes: usize,
    /// Interior nodes on the coarsest radial mesh.
    pub radial_nodes: usize,
    pub tol_angular: f64,
    pub tol_radial: f64,
    pub tol_combined: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            angular_nodes: 799,
            radial_nodes: 799,
            tol_angular: 1e-3,
            tol_radial: 1e-4,
            tol_combined: 2e-3,
        }
    }
}

/// The finite-difference suite needs both end exponents above `1/2`.
pub fn check_boundary_exponents(p: &SystemParams) -> Result<()> {
    let half = crate::exact::rational::rat(1, 2);
    if p.alpha <= half || p.beta <= half {
        return Err(Error::InvalidParams(format!(
            "finite differences need α, β > 1/2 (got {p}); use the exact checks"
        )));
    }
    Ok(())
}

/// `(α²-¼)/cos²φ + (β²-¼)/sin²φ + 8(1 + b cos 2φ)/(b + cos 2φ)²`
pub fn angular_potential_f64(p: &SystemParams) -> impl Fn(f64) -> f64 + Sync {
    let a = to_f64(&p.alpha);
    let b = to_f64(&p.beta);
    let bb = to_f64(&p.b);
    move |phi: f64| {
        let c = phi.cos();
        let s = phi.sin();
        let c2 = (2.0 * phi).cos();
        (a * a - 0.25) / (c * c) + (b * b - 0.25) / (s * s) + 8.0 * (1.0 + bb * c2) / ((bb + c2) * (bb + c2))
    }
}

/// Lowest `k` eigenvalues of `-∂φ² + V` on `(0, π/2)`; they approximate `C_n²`.
pub fn angular_eigenvalues(p: &SystemParams, k: usize, cfg: &NumericConfig) -> Result<EigResult> {
    check_boundary_exponents(p)?;
    EigResult::solve(0.0, std::f64::consts::FRAC_PI_2, cfg.angular_nodes, k, angular_potential_f64(p))
}

/// Truncation radius: `(2√(E/ω) + 6)/√ω`.
pub fn radial_cutoff(e_guess: f64, omega: f64) -> f64 {
    (2.0 * (e_guess / omega).sqrt() + 6.0) / omega.sqrt()
}

/// Radial eigenvalues for `C²` and `ω`, with the relative drift of the
/// extrapolated values between `rmax` and `1.25 rmax`.
#[derive(Clone, Debug)]
pub struct RadialResult {
    pub eig: EigResult,
    pub rmax: f64,
    pub drift: f64,
}

/// Lowest `k` eigenvalues of `-∂r² - r⁻¹∂r + ω²r² + C²r⁻²` on `(0, rmax)`.
///
/// With `u = √r R` this is `-u'' + (ω²r² + (C² - ¼)/r²) u`.
pub fn radial_eigenvalues(c_sq: f64, omega: f64, k: usize, cfg: &NumericConfig) -> Result<RadialResult> {
    let e_guess = 2.0 * omega * (2.0 * k as f64 + c_sq.sqrt() + 1.0);
    let rmax = radial_cutoff(e_guess, omega);
    let v = move |r: f64| omega * omega * r * r + (c_sq - 0.25) / (r * r);
    let eig = EigResult::solve(0.0, rmax, cfg.radial_nodes, k, v)?;
    let wide = EigResult::solve(0.0, 1.25 * rmax, cfg.radial_nodes * 5 / 4, k, v)?;
    let drift = eig
        .extrapolated
        .iter()
        .zip(&wide.extrapolated)
        .map(|(a, b)| ((a - b) / a).abs())
        .fold(0.0, f64::max);
    Ok(RadialResult { eig, rmax, drift })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumRow {
    pub m: u32,
    pub n: u32,
    #[serde(rename = "E_exact")]
    pub e_exact: f64,
    #[serde(rename = "E_numeric")]
    pub e_numeric: f64,
    pub rel_error: f64,
    pub mesh_levels: String,
    #[serde(skip)]
    pub e_as_printed: f64,
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// `E(m, n)` from the angular eigenvalue `λ_n ≈ C_n²` and the radial
/// eigenvalue `m` at that `C²`, for every `m + n ≤ max_level`.
pub fn compare_spectrum(p: &SystemParams, max_level: u32, cfg: &NumericConfig) -> Result<Vec<SpectrumRow>> {
    let k = max_level as usize + 1;
    let ang = angular_eigenvalues(p, k, cfg)?;
    let omega = to_f64(&p.omega);
    let mut rows = Vec::new();
    for n in 0..=max_level {
        let c_sq = ang.extrapolated[n as usize];
        let kr = (max_level - n) as usize + 1;
        let rad = radial_eigenvalues(c_sq, omega, kr, cfg)?;
        let mesh = ang
            .mesh_levels
            .iter()
            .zip(&rad.eig.mesh_levels)
            .map(|(a, r)| format!("{a}/{r}"))
            .collect::<Vec<_>>()
            .join(";");
        for m in 0..kr as u32 {
            let e_exact = energy(m, n, p).to_f64().unwrap_or(f64::NAN);
            let e_numeric = rad.eig.extrapolated[m as usize];
            rows.push(SpectrumRow {
                m,
                n,
                e_exact,
                e_numeric,
                rel_error: rel(e_numeric, e_exact),
                mesh_levels: mesh.clone(),
                e_as_printed: to_f64(&energy_as_printed(m, n, p)),
            });
        }
    }
    rows.sort_by_key(|r| (r.m + r.n, r.m));
    Ok(rows)
}

/// CSV with columns `m,n,E_exact,E_numeric,rel_error,mesh_levels`.
pub fn write_spectrum_csv<W: Write>(out: W, rows: &[SpectrumRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(std::io::Error::from)?;
    }
    Ok(w.flush()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn angular_matches_separation_constants() {
        let p = SystemParams::reference();
        let cfg = NumericConfig::default();
        let r = angular_eigenvalues(&p, 3, &cfg).unwrap();
        for (n, exact) in [16.0, 36.0, 64.0].into_iter().enumerate() {
            let e = r.extrapolated[n];
            assert!(rel(e, exact) < cfg.tol_angular, "n = {n}: {e}");
            assert!(rel(e, exact) * 2.0 <= rel(r.finest()[n], exact), "extrapolation gain at n = {n}");
        }
    }

    #[test]
    fn radial_levels_carry_factor_two() {
        let cfg = NumericConfig::default();
        let r = radial_eigenvalues(16.0, 1.0, 3, &cfg).unwrap();
        for (m, exact) in [10.0, 14.0, 18.0].into_iter().enumerate() {
            assert!(rel(r.eig.extrapolated[m], exact) < cfg.tol_radial, "m = {m}");
        }
        assert!(r.drift < 1e-10);
        let s = radial_eigenvalues(16.0, 4.0, 1, &cfg).unwrap();
        assert!(rel(s.eig.extrapolated[0] / r.eig.extrapolated[0], 4.0) < 1e-6);
    }

    #[test]
    fn guard_rejects_small_exponents() {
        let p = SystemParams::new(rat(1, 4), int_(2), int_(1)).unwrap();
        assert!(angular_eigenvalues(&p, 1, &NumericConfig::default()).is_err());
    }

    fn int_(n: i64) -> crate::exact::Rational {
        crate::exact::rational::int(n)
    }

    #[test]
    fn combined_spectrum_and_csv() {
        let p = SystemParams::reference();
        let cfg = NumericConfig::default();
        let rows = compare_spectrum(&p, 2, &cfg).unwrap();
        assert_eq!(rows.len(), 6);
        for r in &rows {
            assert!(r.rel_error < cfg.tol_combined, "{r:?}");
        }
        let e10 = rows.iter().find(|r| (r.m, r.n) == (1, 0)).unwrap().e_numeric;
        let e01 = rows.iter().find(|r| (r.m, r.n) == (0, 1)).unwrap().e_numeric;
        assert!(rel(e10, e01) < cfg.tol_combined);
        let mut buf = Vec::new();
        write_spectrum_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("m,n,E_exact,E_numeric,rel_error,mesh_levels\n"));
    }
}

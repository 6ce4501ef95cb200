//! Finite-difference Sturm–Liouville solvers, independent of the exact layer.
//!
//! Both separated equations are put in Schrödinger form `-u'' + V u = λ u`
//! on an open interval with Dirichlet ends, discretized by second-order
//! central differences, and solved by Sturm-sequence bisection. Three mesh
//! levels `h, h/2, h/4` are combined by Richardson extrapolation.

pub mod spectrum;

use crate::error::{Error, Result};

pub use spectrum::{
    angular_eigenvalues, compare_spectrum, radial_eigenvalues, write_spectrum_csv, NumericConfig, SpectrumRow,
};

/// Uniform interior grid of `(lo, hi)`.
#[derive(Clone, Debug)]
pub struct Grid1D {
    pub nodes: Vec<f64>,
    pub spacing: f64,
    pub domain: (f64, f64),
}

impl Grid1D {
    /// `n` interior nodes, so `h = (hi - lo)/(n + 1)`.
    pub fn interior(lo: f64, hi: f64, n: usize) -> Self {
        let spacing = (hi - lo) / (n as f64 + 1.0);
        Grid1D {
            nodes: (1..=n).map(|i| lo + spacing * i as f64).collect(),
            spacing,
            domain: (lo, hi),
        }
    }

    /// The grid with half the spacing.
    pub fn refined(&self) -> Self {
        Grid1D::interior(self.domain.0, self.domain.1, 2 * self.nodes.len() + 1)
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Clone, Debug)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if off.len() + 1 != diag.len() {
            return Err(Error::Numeric(format!(
                "off-diagonal has {} entries for dimension {}",
                off.len(),
                diag.len()
            )));
        }
        Ok(SymTridiag { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// `-d²/dx² + V` with Dirichlet ends on `grid`.
    pub fn schrodinger<V: Fn(f64) -> f64>(grid: &Grid1D, v: V) -> Self {
        let h2 = grid.spacing * grid.spacing;
        let diag = grid.nodes.iter().map(|&x| 2.0 / h2 + v(x)).collect();
        let off = vec![-1.0 / h2; grid.nodes.len().saturating_sub(1)];
        SymTridiag { diag, off }
    }

    /// Number of eigenvalues strictly below `x`.
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.dim() {
            let e2 = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = self.diag[i] - x - if i == 0 { 0.0 } else { e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (self.diag[i].abs() + x.abs() + 1.0);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval.
    pub fn bounds(&self) -> (f64, f64) {
        let n = self.dim();
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            (lo.min(self.diag[i] - r), hi.max(self.diag[i] + r))
        })
    }
}

/// The `k` smallest eigenvalues, ascending, each bisected to an absolute
/// bracket of `1e-12` (or to floating-point resolution).
pub fn eig_tridiagonal(m: &SymTridiag, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > m.dim() {
        return Err(Error::Numeric(format!("asked for {k} eigenvalues of a {0}x{0} matrix", m.dim())));
    }
    let (lo0, hi0) = m.bounds();
    Ok((0..k)
        .map(|j| {
            let (mut lo, mut hi) = (lo0, hi0);
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if m.count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect())
}

/// Romberg extrapolation of values at `h, h/2, h/4` assuming an error
/// expansion in `h²`, `h⁴`.
pub fn richardson3(coarse: f64, mid: f64, fine: f64) -> f64 {
    let r1 = (4.0 * mid - coarse) / 3.0;
    let r2 = (4.0 * fine - mid) / 3.0;
    (16.0 * r2 - r1) / 15.0
}

/// Eigenvalues at three mesh levels and their extrapolation.
#[derive(Clone, Debug)]
pub struct EigResult {
    /// `levels[l][j]` is eigenvalue `j` on mesh level `l`.
    pub levels: Vec<Vec<f64>>,
    pub mesh_levels: Vec<usize>,
    pub extrapolated: Vec<f64>,
}

impl EigResult {
    /// Solve `-u'' + V u = λ u` on three nested meshes starting at `n` nodes.
    pub fn solve<V: Fn(f64) -> f64 + Sync>(lo: f64, hi: f64, n: usize, k: usize, v: V) -> Result<Self> {
        let g0 = Grid1D::interior(lo, hi, n);
        let g1 = g0.refined();
        let g2 = g1.refined();
        let grids = [g0, g1, g2];
        let mesh_levels = grids.iter().map(|g| g.nodes.len()).collect();
        let levels: Vec<Vec<f64>> = {
            use rayon::prelude::*;
            grids
                .par_iter()
                .map(|g| eig_tridiagonal(&SymTridiag::schrodinger(g, &v), k))
                .collect::<Result<_>>()?
        };
        let extrapolated = (0..k).map(|j| richardson3(levels[0][j], levels[1][j], levels[2][j])).collect();
        Ok(EigResult {
            levels,
            mesh_levels,
            extrapolated,
        })
    }

    pub fn finest(&self) -> &[f64] {
        &self.levels[2]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_two_by_two() {
        let d = SymTridiag::new(vec![3.0, 1.0, 2.0], vec![0.0, 0.0]).unwrap();
        let ev = eig_tridiagonal(&d, 3).unwrap();
        for (a, b) in ev.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-11);
        }
        let m = SymTridiag::new(vec![2.0, 2.0], vec![1.0]).unwrap();
        let ev = eig_tridiagonal(&m, 2).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-11 && (ev[1] - 3.0).abs() < 1e-11);
        assert!(eig_tridiagonal(&m, 3).is_err());
    }

    #[test]
    fn discrete_laplacian_dispersion() {
        let g = Grid1D::interior(0.0, std::f64::consts::PI, 100);
        let m = SymTridiag::schrodinger(&g, |_| 0.0);
        assert!((m.off[0] + 1.0 / (g.spacing * g.spacing)).abs() < 1e-9);
        let h = g.spacing;
        let ev = eig_tridiagonal(&m, 2).unwrap();
        for (j, e) in ev.iter().enumerate() {
            let k = (j + 1) as f64;
            let exact = 4.0 * (k * h / 2.0).sin().powi(2) / (h * h);
            assert!((e - exact).abs() < 1e-9, "{e} vs {exact}");
        }
        assert!((ev[0] - 1.0).abs() < 2.0 * h * h);
    }

    #[test]
    fn richardson_removes_h2_and_h4() {
        let f = |h: f64| 7.0 + 3.0 * h * h - 5.0 * h.powi(4);
        assert!((richardson3(f(0.1), f(0.05), f(0.025)) - 7.0).abs() < 1e-12);
    }
}

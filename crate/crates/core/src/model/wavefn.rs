//! Plot-ready samples of `R_m ⊗ Φ_n`.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::model::params::SystemParams;
use crate::model::states::product_state;

#[derive(Serialize)]
struct Row {
    r: f64,
    phi: f64,
    psi: f64,
}

/// `n` equally spaced points strictly inside `(lo, hi)`.
pub fn interior_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let h = (hi - lo) / (n as f64 + 1.0);
    (1..=n).map(|k| lo + h * k as f64).collect()
}

/// Write `r,phi,psi` rows for the product grid.
pub fn write_wavefunction_csv<W: Write>(
    out: W,
    m: u32,
    n: u32,
    p: &SystemParams,
    rs: &[f64],
    phis: &[f64],
) -> Result<()> {
    let psi = product_state(m, n, p)?;
    let mut w = csv::Writer::from_writer(out);
    for &r in rs {
        for &phi in phis {
            w.serialize(Row {
                r,
                phi,
                psi: psi.eval(r, phi),
            })
            .map_err(std::io::Error::from)?;
        }
    }
    Ok(w.flush()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_row_count() {
        let p = SystemParams::reference();
        let mut buf = Vec::new();
        let rs = interior_grid(0.0, 3.0, 4);
        let phis = interior_grid(0.0, std::f64::consts::FRAC_PI_2, 5);
        write_wavefunction_csv(&mut buf, 1, 1, &p, &rs, &phis).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("r,phi,psi"));
        assert_eq!(lines.count(), 20);
    }
}

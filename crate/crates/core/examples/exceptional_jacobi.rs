//! Exceptional Jacobi polynomials, the separated eigenstates and their
//! energies, plus a plot-ready wavefunction sample.
//!
//! ```sh
//! cargo run --release --example exceptional_jacobi > psi.csv
//! ```

use superint::model::polys::{c_squared, t_operator_apply, xjacobi};
use superint::model::states::{angular_overlap_normalized, eigen_grid};
use superint::model::wavefn::{interior_grid, write_wavefunction_csv};
use superint::model::SystemParams;
use superint::exact::RatFn;

fn main() -> superint::Result<()> {
    let p = SystemParams::reference();
    for n in 0..4 {
        let x = xjacobi(n, &p)?;
        let eigen = t_operator_apply(&p, &x) == RatFn::from_poly(x.scale(&c_squared(n, &p)));
        eprintln!("X_{n}(x) = {}   T X = C²X: {eigen}", x.display_var("x"));
    }
    eprintln!("<Φ1, Φ2> / |Φ1||Φ2| = {:.2e}", angular_overlap_normalized(1, 2, &p)?);

    eprintln!("\n m n  C_n²   E      E (without the factor 2)");
    for c in eigen_grid(&p, 2)? {
        eprintln!(
            " {} {}  {:>4}  {:>4}   {:>4}   L1:{} H:{} H(without 2):{}",
            c.m, c.n, c.l1_expected, c.energy, c.energy_as_printed, c.l1_holds, c.h_holds, c.h_holds_as_printed
        );
    }

    let rs = interior_grid(0.0, 4.0, 60);
    let phis = interior_grid(0.0, std::f64::consts::FRAC_PI_2, 60);
    write_wavefunction_csv(std::io::stdout().lock(), 1, 1, &p, &rs, &phis)
}

//! Finite-difference confirmation of the spectrum, as CSV.
//!
//! ```sh
//! cargo run --release --example numeric_spectrum -- 1 2 1
//! ```

use superint::exact::parse_rational;
use superint::model::SystemParams;
use superint::numeric::{angular_eigenvalues, compare_spectrum, write_spectrum_csv, NumericConfig};

fn main() -> superint::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p = if args.len() == 3 {
        SystemParams::new(parse_rational(&args[0])?, parse_rational(&args[1])?, parse_rational(&args[2])?)?
    } else {
        SystemParams::reference()
    };
    let cfg = NumericConfig::default();
    let ang = angular_eigenvalues(&p, 3, &cfg)?;
    for (n, lam) in ang.extrapolated.iter().enumerate() {
        eprintln!("λ_{n}: {:.10}  (finest mesh {:.10})", lam, ang.finest()[n]);
    }
    let rows = compare_spectrum(&p, 3, &cfg)?;
    write_spectrum_csv(std::io::stdout().lock(), &rows)
}

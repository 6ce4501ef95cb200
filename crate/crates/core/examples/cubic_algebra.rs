//! The cubic algebra generated by `X = (L1 - 1)/2`, `Y = L2/8`, `Z = [X, Y]`
//! and its Casimir. Takes about a minute at `(1, 2, 1)`.

use std::time::Instant;

use superint::exact::rational::fmt_rational;
use superint::model::{build_l2, SystemParams};
use superint::polyalg::{
    algebra_constants, casimir_check, casimir_printed_values, casimir_realized_values, fit_algebra_constants,
    realized_constants, verify_cubic_relations, CasimirForm, Generators, Normalization,
};

fn main() -> superint::Result<()> {
    let p = SystemParams::reference();
    let t0 = Instant::now();
    let bundle = build_l2(&p)?;
    let gens = Generators::new(&bundle, Normalization::Standard);

    let fitted = fit_algebra_constants(&gens)?;
    let derived = realized_constants(&p);
    println!("fitted constants equal the closed forms: {}", fitted == derived);
    println!("{}", serde_json::to_string_pretty(&derived)?);
    println!("published table: {}", serde_json::to_string(&algebra_constants(&p))?);

    let rel = verify_cubic_relations(&gens, &derived)?;
    println!("relations all zero: {} ({:.1?})", rel.all_zero, t0.elapsed());

    let k = casimir_check(&gens, &derived, CasimirForm::Derived, casimir_realized_values(&p));
    if let Some((k2, k0)) = &k.fitted {
        println!("Casimir with -2fY: central {}, K = {}H² + {}", k.central, fmt_rational(k2), fmt_rational(k0));
    }
    let kp = casimir_check(&gens, &derived, CasimirForm::AsPrinted, casimir_printed_values(&p));
    println!("Casimir with -fY: central {}, leftover order {:?}", kp.central, kp.remainder_order);

    let rescaled = Generators::new(&bundle, Normalization::Rescaled);
    let rel = verify_cubic_relations(&rescaled, &algebra_constants(&p))?;
    println!("X = (L1-1)/4, Z = 8[X,Y] realizes the published table: {}", rel.all_zero);
    println!("total {:.1?}", t0.elapsed());
    Ok(())
}

//! Deformed-oscillator representations: structure function, the three
//! families of `u`, and the spectrum they produce.

use superint::exact::int;
use superint::model::SystemParams;
use superint::oscillator::{appendix_report, phi_eval, spectrum_table, StructureFn, PhiForm};

fn main() -> superint::Result<()> {
    let p = SystemParams::reference();
    let sf = StructureFn::new(&p, &int(2), &int(9), PhiForm::DERIVED);
    println!("Φ(2, 9, n) = {}", sf.expand().display_var("n"));
    println!("roots in n: {:?}", sf.rational_roots().iter().map(|r| r.to_string()).collect::<Vec<_>>());
    println!("Φ(2, 9, 3) with the literal √2 pair: {}", phi_eval(&int(2), &int(9), 3, &p, PhiForm::AS_PRINTED));

    println!("\nadmissible representations, p ≤ 3:");
    for r in spectrum_table(&p, 3, PhiForm::DERIVED)?.iter().filter(|r| r.admissible) {
        println!(
            "  family {} ε=({:+},{:+}) u={} p={} E={} ladder index {:?}",
            r.family, r.eps1, r.eps2, r.u, r.p, r.energy, r.level
        );
    }

    println!("\nappendix products against Φ(u_i, E_i, N):");
    for c in appendix_report(&p, 1)? {
        println!("  family {} ε=({:+},{:+}): {}", c.family, c.eps1, c.eps2, serde_json::to_string(&c.relation)?);
    }
    Ok(())
}

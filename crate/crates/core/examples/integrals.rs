//! Build `H`, `L1`, `L2` with exact coefficients and check they commute.
//!
//! ```sh
//! cargo run --release --example integrals -- 3/2 7/3 1/2
//! ```

use superint::diffop::op_commutator;
use superint::exact::parse_rational;
use superint::model::appendix::appendix_diff;
use superint::model::{build_l2, SystemParams};

fn params() -> superint::Result<SystemParams> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() != 3 {
        return Ok(SystemParams::reference());
    }
    SystemParams::new(parse_rational(&args[0])?, parse_rational(&args[1])?, parse_rational(&args[2])?)
}

fn main() -> superint::Result<()> {
    let p = params()?;
    println!("{p}, b = {}", p.b);
    let bundle = build_l2(&p)?;
    println!("c12 = {}", bundle.c.c12);
    println!("L2: order {:?}, {} terms", bundle.l2.order(), bundle.l2.num_terms());
    println!("[H, L1] = 0: {}", op_commutator(&bundle.h, &bundle.l1).is_zero());
    println!("[H, L2] = 0: {}", op_commutator(&bundle.h, &bundle.l2).is_zero());

    println!("\nH in normal form:\n{}", bundle.h.dump());

    let diff = appendix_diff(&p, &bundle.g0)?;
    println!("G0 against the tabulated closed form:");
    println!("{}", serde_json::to_string_pretty(&diff)?);
    Ok(())
}

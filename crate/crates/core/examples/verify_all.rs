//! Every suite at the reference point and two random instances, skipping
//! the slow algebra suite on the random ones.

use superint::model::SystemParams;
use superint::verify::{random_instances, run_instances, run_suite, Suite, SuiteOptions, VerificationReport};

fn main() -> superint::Result<()> {
    let opts = SuiteOptions {
        algebra_printed: false,
        ..SuiteOptions::default()
    };
    let fast = [Suite::Commutator, Suite::Eigen, Suite::Painleve, Suite::Oscillator, Suite::Numeric];
    let mut instances = vec![(SystemParams::reference(), "fixed".to_string())];
    instances.extend(random_instances(1, 2).into_iter().map(|p| (p, "random".to_string())));
    let mut reports = run_instances(&instances, &fast, &opts);
    reports[0].suites.push(run_suite(Suite::Algebra, &instances[0].0, &opts));

    let report = VerificationReport::new(serde_json::json!({ "example": "verify_all" }), reports);
    for inst in &report.instances {
        println!("{}", inst.params);
        for s in &inst.suites {
            println!("  {:<10} {:?}  {}", s.name, s.status, s.summary);
        }
    }
    std::process::exit(report.exit_code());
}

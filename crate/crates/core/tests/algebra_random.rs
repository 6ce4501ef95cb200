//! Cubic relations and the Casimir at random instances. Slow: up to two
//! minutes per instance.

use superint::verify::{random_instances, run_suite, Status, Suite, SuiteOptions};

#[test]
fn cubic_algebra_at_three_random_instances() {
    let opts = SuiteOptions {
        algebra_printed: false,
        ..SuiteOptions::default()
    };
    for p in random_instances(5, 3) {
        let r = run_suite(Suite::Algebra, &p, &opts);
        assert_eq!(r.status, Status::Pass, "{p}: {}", r.summary);
    }
}

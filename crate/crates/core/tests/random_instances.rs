//! Exact identities at seeded random parameters (`β > α > 1/2`).

use superint::model::SystemParams;
use superint::polyalg::q_form_crosscheck;
use superint::verify::{random_instances, run_suite, Status, Suite, SuiteOptions};

fn five() -> Vec<SystemParams> {
    random_instances(20260101, 5)
}

fn all_pass(suite: Suite) {
    let opts = SuiteOptions::default();
    for p in five() {
        let r = run_suite(suite, &p, &opts);
        assert_eq!(r.status, Status::Pass, "{p}: {}", r.summary);
    }
}

#[test]
fn commutators_and_determining_equations() {
    all_pass(Suite::Commutator);
}

#[test]
fn eigenstates() {
    all_pass(Suite::Eigen);
}

#[test]
fn painleve_block() {
    all_pass(Suite::Painleve);
}

#[test]
fn oscillator_family_three() {
    all_pass(Suite::Oscillator);
}

#[test]
fn q_form_constants() {
    for p in five() {
        let c = q_form_crosscheck(&p);
        assert!(c.holds, "{p}");
    }
}

mod props {
    use proptest::prelude::*;
    use superint::exact::rational::rat;
    use superint::model::SystemParams;
    use superint::painleve::painleve_report;

    fn params() -> impl Strategy<Value = SystemParams> {
        (1i64..=40, 1i64..=40, 1i64..=40, 1i64..=40, 1i64..=40, 1i64..=40).prop_filter_map(
            "β > α > 1/2",
            |(an, ad, bn, bd, wn, wd)| {
                let (a, b) = (rat(an, ad), rat(bn, bd));
                if a > rat(1, 2) && b > a {
                    SystemParams::new(a, b, rat(wn, wd)).ok()
                } else {
                    None
                }
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn second_degree_equation_closes(p in params()) {
            let r = painleve_report(&p).unwrap();
            prop_assert!(r.residual_zero);
            prop_assert!(r.t_w_consistent);
            prop_assert!(r.gamma_branches.minus_branch);
        }
    }
}

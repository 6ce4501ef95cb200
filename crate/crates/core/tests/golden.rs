use superint::exact::rational::{int, rat};
use superint::exact::{Poly, RatFn};
use superint::model::{build_hamiltonian, build_l1, SystemParams};
use superint::oscillator::{phi_eval, PhiForm};
use superint::painleve::{q_constants, Variant};

#[test]
fn operator_dumps() {
    let p = SystemParams::reference();
    assert_eq!(build_hamiltonian(&p).dump(), include_str!("golden/h_1_2_1.txt"));
    assert_eq!(build_l1(&p).dump(), include_str!("golden/l1_1_2_1.txt"));
}

#[test]
fn angular_potential_by_hand() {
    // (α²-¼)/cos²φ + (β²-¼)/sin²φ + 8(1 + b cos2φ)/(b + cos2φ)² at cos2φ = 0
    let v = RatFn::new(
        Poly::new(vec![int(-89), int(132), int(-37), int(-18)]),
        Poly::new(vec![int(-9), int(6), int(8), int(-6), int(1)]),
    )
    .unwrap();
    assert_eq!(v.eval(&int(0)).unwrap(), rat(3, 2) + rat(15, 2) + rat(8, 9));
    // cos2φ = -1/2, so x = 1/2, cos²φ = 1/4, sin²φ = 3/4
    let expect = rat(3, 1) + rat(5, 1) + int(8) * (int(1) - rat(3, 2)) / (rat(5, 2) * rat(5, 2));
    assert_eq!(v.eval(&rat(1, 2)).unwrap(), expect);
}

#[test]
fn q_constants_at_reference() {
    let q = q_constants(&SystemParams::reference(), Variant::Derived);
    assert_eq!((q.q7, q.q8, q.q9, q.q10), (rat(-5, 4), rat(9, 16), rat(-17, 8), rat(-45, 64)));
}

#[test]
fn structure_function_value() {
    let p = SystemParams::reference();
    assert_eq!(phi_eval(&int(2), &int(9), 1, &p, PhiForm::DERIVED), int(13_299_692_649_578_496));
}

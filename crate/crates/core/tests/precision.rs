//! Constants recomputed at twice the working precision must agree with
//! themselves to nearly the full original precision.

use wedgewalk::asymptotics::{
    constant_a0, constant_halfplane, constant_theta, constants_a1a2, doubling_agreement, A1A2Method,
};

const DIGITS: usize = 30;

fn stable(name: &str, agreeing: f64) {
    assert!(
        agreeing >= (DIGITS - 2) as f64,
        "{name}: {agreeing:.1} digits stable"
    );
}

#[test]
fn a0_is_stable() {
    stable(
        "A0",
        doubling_agreement(DIGITS, |d| constant_a0(d).unwrap().value),
    );
}

#[test]
fn a1_a2_are_stable() {
    for i in 0..2 {
        stable(
            ["A1", "A2"][i],
            doubling_agreement(DIGITS, |d| {
                constants_a1a2(A1A2Method::Analytic, d, 0).unwrap()[i]
                    .value
                    .clone()
            }),
        );
    }
}

#[test]
fn theta_is_stable() {
    stable(
        "theta",
        doubling_agreement(DIGITS, |d| constant_theta(d).unwrap().value),
    );
}

#[test]
fn halfplane_is_stable() {
    stable(
        "halfplane",
        doubling_agreement(DIGITS, |d| constant_halfplane(10, d).unwrap()[0].value.clone()),
    );
}

#[test]
fn a1_a2_fit_does_not_depend_on_precision() {
    let lo = constants_a1a2(A1A2Method::Fit, DIGITS, 120).unwrap();
    let hi = constants_a1a2(A1A2Method::Fit, 2 * DIGITS, 120).unwrap();
    for (a, b) in lo.iter().zip(&hi) {
        assert!(
            a.value.agreeing_digits(&b.value) >= (DIGITS - 2) as f64,
            "{a} vs {b}"
        );
    }
}

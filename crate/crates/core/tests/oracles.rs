//! Results checked against values computed independently in this file.

use wedgewalk::asymptotics::reference;
use wedgewalk::asymptotics::{
    accuracy_table, constant_a0, constant_halfplane, constant_theta, constants_a1a2, family_polynomial,
    root_audit, A1A2Method, Family,
};
use wedgewalk::closedform::{gf_series, GfKind};
use wedgewalk::enumerate::{brute_force_oracle, count_walks, ModelKind, WedgeModel};

fn f(x: &impl ToString) -> f64 {
    x.to_string().parse().unwrap()
}

#[test]
fn dp_matches_exhaustive_listing() {
    for kind in ModelKind::ALL {
        let ps: &[u32] = if kind.uses_p() { &[1, 2, 3] } else { &[1] };
        for &p in ps {
            let model = WedgeModel::new(kind, p).unwrap();
            let table = count_walks(model, 11).unwrap();
            for n in 0..=11 {
                assert_eq!(
                    table.get(n),
                    &brute_force_oracle(model, n).unwrap(),
                    "{model} n={n}"
                );
            }
        }
    }
}

#[test]
fn free_walks_follow_their_recurrence() {
    let table = count_walks(WedgeModel::free(), 60).unwrap();
    let mut c = vec![num_bigint::BigUint::from(1u32), num_bigint::BigUint::from(3u32)];
    for n in 2..=60 {
        let next = &c[n - 1] * 2u32 + &c[n - 2];
        c.push(next);
    }
    assert_eq!(table.counts, c);
}

#[test]
fn dyck_series_is_catalan() {
    let g = gf_series(&GfKind::Dyck, 30).unwrap();
    let mut catalan: u128 = 1;
    for n in 0..=30u128 {
        assert_eq!(
            g.coeff(n as i64),
            wedgewalk::exact::rat(catalan as i64, 1),
            "n={n}"
        );
        catalan = catalan * 2 * (2 * n + 1) / (n + 2);
    }
}

#[test]
fn a0_matches_the_count_ratio() {
    // The second-order term is smaller by (sqrt5/mu)^n / n^1.5, about 1e-13 at n = 300.
    let n = 300;
    let v = count_walks(WedgeModel::symmetric(1), n).unwrap();
    let mu = 1.0 + 2f64.sqrt();
    let ratio = f(v.get(n)) / mu.powi(n as i32);
    let a0 = constant_a0(30).unwrap().value.to_f64();
    assert!((ratio / a0 - 1.0).abs() < 1e-10, "{ratio} vs {a0}");
}

#[test]
fn a1_a2_fit_matches_analytic_values() {
    let analytic = constants_a1a2(A1A2Method::Analytic, 30, 0).unwrap();
    let fit = constants_a1a2(A1A2Method::Fit, 30, 200).unwrap();
    for (a, b) in analytic.iter().zip(&fit) {
        assert!(a.value.agreeing_digits(&b.value) > 5.0, "{a} vs {b}");
    }
}

#[test]
fn theta_matches_a_float_residue_sum() {
    let s = 2f64.sqrt() - 1.0;
    let sum: f64 = (0..20)
        .map(|k| {
            let u = s.powi(2 * k + 1);
            (1.0 - u) / (1.0 + u) * s.powi(2 * k * k + 2 * k)
        })
        .sum();
    let theta = constant_theta(30).unwrap().value.to_f64();
    assert!((sum / 2f64.sqrt() - theta).abs() < 1e-15, "{theta}");
}

#[test]
fn halfplane_closed_value() {
    let expected = ((7.0 + 5.0 * 2f64.sqrt()) / (2.0 * std::f64::consts::PI)).sqrt();
    let [closed, _] = constant_halfplane(40, 30).unwrap();
    assert!((closed.value.to_f64() - expected).abs() < 1e-14);
}

#[test]
fn accuracy_table_errors() {
    let [a0, a1, a2] = [reference::A0, reference::A1, reference::A2].map(|s| s.parse::<f64>().unwrap());
    let v = count_walks(WedgeModel::symmetric(1), 40).unwrap();
    let mu = 1.0 + 2f64.sqrt();
    for row in accuracy_table().unwrap().rows {
        let n = row.n as i32;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let est = a0 * mu.powi(n) + 5f64.powf(n as f64 / 2.0) / (n as f64 + 1.0).powf(1.5) * (a1 + sign * a2);
        let exact = f(v.get(row.n));
        let rel = ((est - exact) / exact).abs();
        assert!(
            (rel - row.rel_error).abs() < 1e-9,
            "n={n}: {rel} vs {}",
            row.rel_error
        );
    }
}

#[test]
fn p_family_k0_factorises() {
    // 1 + t - 3t^2 + t^3 = (t - 1)(t^2 - 2t - 1)
    assert_eq!(family_polynomial(Family::P, 0), [1, 1, -3, 1]);
    let audit = root_audit(0, 30).unwrap();
    let r = &audit.in_disk[0];
    assert!((r.root.re.to_f64() - (1.0 - 2f64.sqrt())).abs() < 1e-15);
    assert!(r.root.im.to_f64().abs() < 1e-15);
}

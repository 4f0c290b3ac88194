//! The eleven acceptance criteria, each at its stated tolerance. Prints one
//! PASS/FAIL line per criterion and exits non-zero if any failed.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use wedgewalk::asymptotics::reference::{self, lit, printed_digits};
use wedgewalk::asymptotics::{
    accuracy_table, b0_consistency, constant_a0, constant_b0, constant_halfplane, constant_theta,
    constants_a1a2, root_audit, A1A2Method, Family, B0_SAMPLES,
};
use wedgewalk::cli::{bargraph_check, dyck_check, funceq_points, kernel_root_checks, run_suite, Status};
use wedgewalk::closedform::{compare_with_counts, gf_series, GfKind};
use wedgewalk::enumerate::{count_walks, WedgeModel};
use wedgewalk::exact::{rat, Rational};
use wedgewalk::kernel::util::ci;
use wedgewalk::kernel::{
    beta_iterate, functional_eq_checks, gamma_iterate, group_law_check, qbar_q_check, IdentityCheck,
    KernelSystem,
};
use wedgewalk::{ledger, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = fn() -> Result<Outcome>;

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn first_failed(checks: &[IdentityCheck]) -> Option<String> {
    checks.iter().find(|c| !c.holds()).map(|c| {
        format!(
            "{} [{}] at t^{}",
            c.identity,
            c.parameters,
            c.first_bad_coefficient.unwrap()
        )
    })
}

fn small(counts: &[BigUint], k: usize) -> Vec<u64> {
    counts[..k].iter().map(|c| c.try_into().unwrap()).collect()
}

fn exact_agreement(kind: GfKind, model: WedgeModel, head: &[u64], budget: Duration) -> Result<Outcome> {
    let start = Instant::now();
    let r = compare_with_counts(&kind, model, 100)?;
    let elapsed = start.elapsed();
    let counts = count_walks(model, 100)?;
    let head_ok = small(&counts.counts, head.len()) == head;
    Ok(outcome(
        r.agrees() && head_ok && elapsed < budget,
        format!(
            "{kind} vs DP through n=100: first mismatch {:?}, first terms {:?}, {elapsed:.2?}",
            r.first_mismatch,
            small(&counts.counts, head.len())
        ),
    ))
}

fn criterion_1() -> Result<Outcome> {
    exact_agreement(
        GfKind::SymG1,
        WedgeModel::symmetric(1),
        &[1, 1, 3, 5, 13, 27],
        Duration::from_secs(10),
    )
}

fn criterion_2() -> Result<Outcome> {
    let base = exact_agreement(
        GfKind::AsymK1,
        WedgeModel::asymmetric(1),
        &[1, 1, 2, 3, 7],
        Duration::from_secs(10),
    )?;
    let h1 = gf_series(&GfKind::AsymH1, 101)?;
    let k1 = gf_series(&GfKind::AsymK1, 100)?;
    let via_h1 = (&h1 - &ci(1)).shift(-1);
    let same = via_h1.first_difference(&k1, 100)?.is_none();
    Ok(outcome(
        base.pass && same,
        format!("{}; (h_1 - 1)/t = k_1: {same}", base.detail),
    ))
}

fn criterion_3() -> Result<Outcome> {
    let mut checks = Vec::new();
    for p in 1..=3 {
        for sys in [KernelSystem::symmetric(p), KernelSystem::asymmetric(p)] {
            for (a, b) in funceq_points() {
                checks.extend(functional_eq_checks(&sys, &a, &b, 30)?);
            }
        }
    }
    let bad = first_failed(&checks);
    Ok(outcome(
        bad.is_none(),
        format!(
            "{} residual checks through t^30, first failure {bad:?}",
            checks.len()
        ),
    ))
}

fn criterion_4() -> Result<Outcome> {
    let points: [Rational; 5] = [rat(1, 1), rat(1, 2), rat(1, 3), rat(2, 3), rat(3, 5)];
    let mut checks = Vec::new();
    for a in &points {
        checks.extend(kernel_root_checks(a, 40)?);
        checks.push(qbar_q_check(a, 39)?);
    }
    for a in &points[..3] {
        for n in 1..=6 {
            checks.push(beta_iterate(n, a, 30)?.check("beta_n", a, 30)?);
        }
        for n in 1..=4 {
            checks.push(gamma_iterate(n, a, 30)?.check("gamma_n", a, 30)?);
        }
        checks.extend(group_law_check(1, a, 30)?);
    }
    let bad = first_failed(&checks);
    Ok(outcome(
        bad.is_none(),
        format!("{} identities, first failure {bad:?}", checks.len()),
    ))
}

fn criterion_5() -> Result<Outcome> {
    let start = Instant::now();
    let table = accuracy_table()?;
    let elapsed = start.elapsed();
    let rows: Vec<String> = table
        .rows
        .iter()
        .map(|r| {
            format!(
                "n={} {:.4}% (<= {:.2}%)",
                r.n,
                100.0 * r.rel_error,
                100.0 * r.bound
            )
        })
        .collect();
    Ok(outcome(
        table.passed() && elapsed < Duration::from_secs(1),
        format!("{}; {elapsed:.2?}", rows.join(", ")),
    ))
}

fn criterion_6() -> Result<Outcome> {
    let a0 = constant_a0(30)?;
    let [a1, a2] = constants_a1a2(A1A2Method::Fit, 30, 200)?;
    let digits = |r: &wedgewalk::asymptotics::AsymptoticReport| r.agreeing_digits.unwrap_or(0.0);
    Ok(outcome(
        a0.agrees_to(15.0) && a1.agrees_to(3.0) && a2.agrees_to(3.0),
        format!(
            "A0 {:.1} digits (>= 15), A1 fit {:.1} digits, A2 fit {:.1} digits (>= 3, n <= 200)",
            digits(&a0),
            digits(&a1),
            digits(&a2)
        ),
    ))
}

fn criterion_7() -> Result<Outcome> {
    let theta = constant_theta(30)?;
    let product = b0_consistency(30);
    let need = printed_digits(reference::B0) as f64;
    let got = product.agreeing_digits.unwrap_or(0.0);
    Ok(outcome(
        theta.agrees_to(12.0) && got >= need,
        format!(
            "theta {:.1} digits (>= 12); 0.090584741...(1+sqrt2) = {} agrees with {} to {got:.1} digits (needs {need})",
            theta.agreeing_digits.unwrap_or(0.0),
            product.value.with_digits(12),
            reference::B0
        ),
    ))
}

fn criterion_8() -> Result<Outcome> {
    let start = Instant::now();
    let reports = constant_b0(&B0_SAMPLES, 30)?;
    let elapsed = start.elapsed();
    let gaps: Vec<f64> = reports[..3].iter().map(|r| r.rel_error().unwrap()).collect();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    Ok(outcome(
        gaps[2] <= 0.02 && shrinking && elapsed < Duration::from_secs(300),
        format!(
            "relative gaps at n=100,200,400: {:.3}%, {:.3}%, {:.3}%; {elapsed:.2?}",
            100.0 * gaps[0],
            100.0 * gaps[1],
            100.0 * gaps[2]
        ),
    ))
}

fn criterion_9() -> Result<Outcome> {
    let [_, ratio] = constant_halfplane(400, 30)?;
    let printed = lit(reference::HALFPLANE, 30);
    let gap = (&(&ratio.value - &printed) / &printed).abs().to_f64();
    let printed_gf = compare_with_counts(&GfKind::Halfplane, WedgeModel::halfplane(), 30)?;
    let suite = run_suite("closedform", None)?;
    let ledgered = ledger::find("halfplane").is_ok()
        && suite.status != Status::Fail
        && suite.ledger.iter().any(|id| id == "halfplane");
    Ok(outcome(
        gap <= 0.02 && !printed_gf.agrees() && ledgered,
        format!(
            "ratio at n=400 {} is {:.3}% from 1.496489; printed GF first differs at {}; ledgered without failing: {ledgered}",
            ratio.value.with_digits(8),
            100.0 * gap,
            printed_gf.first_mismatch.map_or("none".into(), |n| format!("t^{n}"))
        ),
    ))
}

fn criterion_10() -> Result<Outcome> {
    let growth = run_suite("growth", Some(30))?;
    let mut checks = vec![dyck_check(50)?];
    for p in 1..=3 {
        checks.push(bargraph_check(p, 40)?);
    }
    let bad = first_failed(&checks);
    Ok(outcome(
        growth.status == Status::Pass && bad.is_none(),
        format!(
            "growth suite {:?} ({} checks, first failure {:?}); Dyck and bargraph: first failure {bad:?}",
            growth.status,
            growth.checks.len(),
            growth.first_failure
        ),
    ))
}

fn criterion_11() -> Result<Outcome> {
    let audit = root_audit(20, 40)?;
    let flagged: Vec<String> = audit
        .in_disk
        .iter()
        .map(|r| format!("{} k={} t={}", r.family, r.k, r.root.re.with_digits(12)))
        .collect();
    let only_documented = audit.in_disk.len() == 1
        && audit.in_disk[0].family == Family::P
        && audit.in_disk[0].k == 0
        && audit.in_disk[0].other_branch;
    Ok(outcome(
        audit.passed() && only_documented,
        format!(
            "k in -1..=20, strategies agree: {}, roots in |t| < 1/2: {}",
            audit.strategies_agree,
            flagged.join("; ")
        ),
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("symmetric closed form equals DP", criterion_1),
        ("asymmetric closed form equals DP", criterion_2),
        ("functional-equation residuals", criterion_3),
        ("kernel roots and compositions", criterion_4),
        ("three-constant accuracy table", criterion_5),
        ("A0 analytic, A1 and A2 fits", criterion_6),
        ("theta constant and B0 consistency", criterion_7),
        ("B0 empirical ratio", criterion_8),
        ("half-plane constant and ledger", criterion_9),
        ("growth and property suite", criterion_10),
        ("root audit", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, detail) = match f() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name}: {detail} [{:.2?}]",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

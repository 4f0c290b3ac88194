use serde::{Deserialize, Serialize};

use crate::closedform::{
    dp_comparisons, gf_bargraph, gf_series, interpretation_comparators, solution_identities,
    ComparisonReport, GfKind,
};
use crate::enumerate::{
    growth_inequalities, lemma_concatenation, sandwich, wedge_containment, InequalityReport, WedgeModel,
};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational, TSeries};
use crate::kernel::util::{ci, t};
use crate::kernel::{
    beta_iterate, functional_eq_checks, gamma_identities, gamma_iterate, group_law_check, kernel_eval,
    printed_forms_check, qbar_q_check, root, script_checks, IdentityCheck, KernelSystem, RootKind, Wedge,
};

const MANIFEST: &str = include_str!("../../suites.json");

/// One entry of the suite manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub name: String,
    pub default_order: i64,
    pub description: String,
}

#[derive(Deserialize)]
struct Manifest {
    suites: Vec<SuiteSpec>,
}

/// The verification suites, in manifest order.
pub fn suites() -> Vec<SuiteSpec> {
    serde_json::from_str::<Manifest>(MANIFEST)
        .expect("suites.json is valid")
        .suites
}

pub fn suite(name: &str) -> Result<SuiteSpec> {
    suites().into_iter().find(|s| s.name == name).ok_or_else(|| {
        let names: Vec<String> = suites().into_iter().map(|s| s.name).collect();
        Error::Invalid(format!(
            "unknown suite {name:?}; expected one of {}",
            names.join(", ")
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Only ledgered discrepancies or report-only comparisons failed.
    Reported,
    Fail,
}

/// One check inside a suite.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub ok: bool,
    pub detail: String,
    /// Ledger entry covering a failure of this check, if one is expected.
    pub ledger: Option<String>,
}

/// Outcome of one suite.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub suite: String,
    pub order: i64,
    pub status: Status,
    pub checks: Vec<CheckLine>,
    /// First check that failed without a ledger entry.
    pub first_failure: Option<String>,
    pub ledger: Vec<String>,
}

impl Verdict {
    fn from_checks(suite: &str, order: i64, checks: Vec<CheckLine>) -> Self {
        let first_failure = checks
            .iter()
            .find(|c| !c.ok && c.ledger.is_none())
            .map(|c| format!("{}: {}", c.name, c.detail));
        let mut ledger: Vec<String> = checks
            .iter()
            .filter(|c| !c.ok)
            .filter_map(|c| c.ledger.clone())
            .collect();
        ledger.dedup();
        let status = if first_failure.is_some() {
            Status::Fail
        } else if checks.iter().any(|c| !c.ok) {
            Status::Reported
        } else {
            Status::Pass
        };
        Self {
            suite: suite.into(),
            order,
            status,
            checks,
            first_failure,
            ledger,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

fn identity(c: IdentityCheck) -> CheckLine {
    CheckLine {
        name: c.identity,
        ok: c.first_bad_coefficient.is_none(),
        detail: match c.first_bad_coefficient {
            None => format!("{} holds through t^{}", c.parameters, c.order),
            Some(k) => format!("{} first differs at t^{k}", c.parameters),
        },
        ledger: None,
    }
}

fn comparison(r: ComparisonReport, ledger: Option<&str>) -> CheckLine {
    CheckLine {
        detail: match r.first_mismatch {
            None => format!("agrees with {} on t^{}..t^{}", r.reference, r.from, r.order),
            Some(k) => format!(
                "differs from {} first at t^{k} ({} coefficients)",
                r.reference,
                r.diffs.len()
            ),
        },
        ok: r.agrees(),
        name: r.name,
        ledger: ledger.map(String::from),
    }
}

fn inequality(r: InequalityReport) -> CheckLine {
    CheckLine {
        ok: r.passed(),
        detail: match &r.first_violation {
            None => format!("{} instances hold", r.checked),
            Some(v) => v.clone(),
        },
        name: r.name,
        ledger: None,
    }
}

/// Sample points for the kernel identities.
fn kernel_points() -> [Rational; 3] {
    [rat(1, 1), rat(1, 2), rat(2, 3)]
}

/// Rational `(a, b)` points at which the functional equations are checked.
pub fn funceq_points() -> [(Rational, Rational); 3] {
    [
        (rat(1, 1), rat(1, 1)),
        (rat(1, 2), rat(2, 1)),
        (rat(2, 3), rat(3, 2)),
    ]
}

/// `K(a, beta(a)) = 0` for every root with a closed form.
pub fn kernel_root_checks(a: &Rational, order: i64) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    for sys in [KernelSystem::symmetric(1), KernelSystem::asymmetric(1)] {
        let kinds: &[RootKind] = match sys.wedge {
            Wedge::Symmetric => &[RootKind::BetaMinus, RootKind::BetaPlus],
            Wedge::Asymmetric => &[
                RootKind::BetaMinus,
                RootKind::BetaPlus,
                RootKind::AlphaMinus,
                RootKind::AlphaPlus,
            ],
        };
        for &which in kinds {
            let r = root(&sys, which, a, order + 4)?;
            let arg = TSeries::constant(a.clone(), order + 4);
            let k = match which {
                RootKind::BetaMinus | RootKind::BetaPlus => kernel_eval(&sys, &arg, &r.expansion).k,
                _ => kernel_eval(&sys, &r.expansion, &arg).k,
            };
            out.push(IdentityCheck::vanishes(
                format!("kernel vanishes at {which}"),
                format!("{} p=1, a={a}", sys.wedge),
                &k.truncate(order),
                order,
            )?);
        }
    }
    Ok(out)
}

fn kernel_suite(order: i64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for a in kernel_points() {
        out.extend(kernel_root_checks(&a, order)?.into_iter().map(identity));
        for n in 1..=6 {
            out.push(identity(beta_iterate(n, &a, order)?.check("beta_n", &a, order)?));
        }
        for n in 1..=4 {
            out.push(identity(
                gamma_iterate(n, &a, order)?.check("gamma_n", &a, order)?,
            ));
        }
        for n in 0..=3 {
            out.extend(group_law_check(n, &a, order)?.into_iter().map(identity));
            out.extend(gamma_identities(n, &a, order)?.into_iter().map(identity));
        }
        out.push(identity(qbar_q_check(&a, order)?));
    }
    out.extend(printed_forms_check(order)?.into_iter().map(identity));
    for n in 0..=2 {
        out.extend(
            script_checks(n, &rat(1, 2), order.min(20))?
                .into_iter()
                .map(identity),
        );
    }
    Ok(out)
}

fn funceq_suite(order: i64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for p in 1..=3 {
        for sys in [KernelSystem::symmetric(p), KernelSystem::asymmetric(p)] {
            for (a, b) in funceq_points() {
                out.extend(
                    functional_eq_checks(&sys, &a, &b, order)?
                        .into_iter()
                        .map(identity),
                );
            }
        }
    }
    Ok(out)
}

/// `g = 1 + t g^2` for the Dyck series through `order`.
pub fn dyck_check(order: i64) -> Result<IdentityCheck> {
    let g = gf_series(&GfKind::Dyck, order)?;
    let rhs = (&ci(1) + &(&t() * &(&g * &g))).truncate(order);
    IdentityCheck::compare("Dyck series g = 1 + t g^2", "", &g, &rhs, order)
}

/// The bargraph fixed point has zero residual through `order`.
pub fn bargraph_check(p: u32, order: i64) -> Result<IdentityCheck> {
    let b = gf_bargraph(p, order)?;
    IdentityCheck::vanishes(
        "bargraph fixed-point residual",
        format!("p={p}"),
        &b.residual,
        order,
    )
}

fn closedform_suite(order: i64) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for r in dp_comparisons(order)? {
        let ledger = (r.name == "halfplane").then_some("halfplane");
        out.push(comparison(r, ledger));
    }
    for a in [rat(1, 1), rat(1, 2)] {
        for (i, r) in solution_identities(&a, order.min(24))?.into_iter().enumerate() {
            let ledger = (i == 2).then_some("h_aya_product_formula");
            out.push(comparison(r, ledger));
        }
    }
    out.push(identity(dyck_check(order)?));
    for p in 1..=3 {
        out.push(identity(bargraph_check(p, order)?));
    }
    Ok(out)
}

fn interpretations_suite(order: i64) -> Result<Vec<CheckLine>> {
    Ok(interpretation_comparators(order)?
        .into_iter()
        .map(|r| comparison(r, Some("interpretations")))
        .collect())
}

fn growth_suite(order: i64) -> Result<Vec<CheckLine>> {
    let n = order.max(1) as usize;
    let mut out = Vec::new();
    for p in 1..=3 {
        out.push(inequality(growth_inequalities(WedgeModel::symmetric(p), n, n)?));
        out.push(inequality(growth_inequalities(WedgeModel::asymmetric(p), n, n)?));
    }
    for p in 1..=3 {
        out.push(inequality(sandwich(p, 100)?));
    }
    out.push(inequality(wedge_containment(1, 2, n)?));
    out.push(inequality(wedge_containment(2, 3, n)?));
    for p in 1..=2 {
        out.push(inequality(lemma_concatenation(p, 6, 3)?));
    }
    Ok(out)
}

/// Runs one named suite at `order` (the manifest default when `None`).
pub fn run_suite(name: &str, order: Option<i64>) -> Result<Verdict> {
    let spec = suite(name)?;
    let order = order.unwrap_or(spec.default_order);
    if !(1..=200).contains(&order) {
        return Err(Error::Budget(format!(
            "suite order must lie in 1..=200, got {order}"
        )));
    }
    let checks = match name {
        "kernel" => kernel_suite(order)?,
        "funceq" => funceq_suite(order)?,
        "closedform" => closedform_suite(order)?,
        "interpretations" => interpretations_suite(order)?,
        "growth" => growth_suite(order)?,
        _ => unreachable!("manifest names are matched above"),
    };
    Ok(Verdict::from_checks(name, order, checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lists_five_suites() {
        let names: Vec<String> = suites().into_iter().map(|s| s.name).collect();
        assert_eq!(
            names,
            ["kernel", "funceq", "closedform", "interpretations", "growth"]
        );
        assert!(suite("nope").is_err());
    }

    #[test]
    fn ledgered_mismatch_is_reported_not_failed() {
        let v = run_suite("interpretations", Some(8)).unwrap();
        assert_ne!(v.status, Status::Fail);
    }
}

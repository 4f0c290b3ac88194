use num_traits::Signed;

use super::check::IdentityCheck;
use super::qpq::q_asym_series;
use super::roots::{root_formula, RootKind};
use super::system::Wedge;
use super::util::{ci, geom2, inv, t, tp, with_margin};
use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};

/// Deepest composition the iterators will build.
pub const MAX_DEPTH: i64 = 6;

/// An iterated root computed twice: by repeated substitution and from its
/// closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IteratedRoot {
    pub n: i64,
    pub closed_form: TSeries,
    pub composed_form: TSeries,
}

impl IteratedRoot {
    pub fn check(&self, name: &str, a: &Rational, order: i64) -> Result<IdentityCheck> {
        IdentityCheck::compare(
            format!("{name}: closed form = composition"),
            format!("n={}, a={a}", self.n),
            &self.closed_form,
            &self.composed_form,
            order,
        )
    }
}

fn depth_ok(n: i64) -> Result<()> {
    if !(0..=MAX_DEPTH).contains(&n) {
        return Err(Error::Budget(format!(
            "composition depth must lie in 0..={MAX_DEPTH}, got {n}"
        )));
    }
    Ok(())
}

/// `beta_1` applied `n` times (`n >= 0`) or `beta_-1` applied `-n` times.
pub fn beta_composed(n: i64, a: &TSeries, order: i64) -> Result<TSeries> {
    let which = if n >= 0 {
        RootKind::BetaMinus
    } else {
        RootKind::BetaPlus
    };
    let mut s = a.clone();
    for _ in 0..n.abs() {
        s = root_formula(Wedge::Symmetric, which, &s, order)?;
    }
    Ok(s)
}

/// `1/beta_n = y(1-y^2n)/(y^n(1-y^2)) / beta_1 - y^2(1-y^(2n-2))/(y^n(1-y^2)) / a`.
pub fn beta_closed(n: i64, a: &TSeries, beta1: &TSeries, order: i64) -> Result<TSeries> {
    let c1 = geom2(n).shift(1 - n);
    let c0 = geom2(n - 1).shift(2 - n);
    let r = &(&c1 * &inv(beta1, order)?) - &(&c0 * &inv(a, order)?);
    r.inv()
}

/// Both forms of `beta_n(a)` for the symmetric `p = 1` kernel.
pub fn beta_iterate(n: i64, a: &Rational, order: i64) -> Result<IteratedRoot> {
    depth_ok(n)?;
    let composed_form = with_margin(order, |m| beta_composed(n, &TSeries::constant(a.clone(), m), m))?;
    let closed_form = with_margin(order, |m| {
        let a = TSeries::constant(a.clone(), m);
        let b1 = root_formula(Wedge::Symmetric, RootKind::BetaMinus, &a, m)?;
        beta_closed(n, &a, &b1, m)
    })?;
    Ok(IteratedRoot {
        n,
        closed_form,
        composed_form,
    })
}

/// Group law and three-term recurrence checks for `beta_n`, `1 <= n <= 5`.
pub fn group_law_check(n: i64, a: &Rational, order: i64) -> Result<Vec<IdentityCheck>> {
    if !(0..=5).contains(&n) {
        return Err(Error::Budget(format!(
            "group law checked for 0 <= n <= 5, got {n}"
        )));
    }
    let params = format!("n={n}, a={a}");
    let mut out = Vec::new();
    let exact_a = TSeries::constant(a.clone(), order);

    // beta_-n(beta_n(a)) = a
    let back = with_margin(order, |m| {
        let s = beta_composed(n, &TSeries::constant(a.clone(), m), m)?;
        beta_composed(-n, &s, m)
    })?;
    out.push(IdentityCheck::compare(
        "beta_-n o beta_n = id",
        &params,
        &back,
        &exact_a,
        order,
    )?);

    // beta_-1(beta_1(a)) = a
    let back1 = with_margin(order, |m| {
        let s = beta_composed(1, &TSeries::constant(a.clone(), m), m)?;
        beta_composed(-1, &s, m)
    })?;
    out.push(IdentityCheck::compare(
        "beta_-1 o beta_1 = id",
        &params,
        &back1,
        &exact_a,
        order,
    )?);

    // beta_1(beta_-1(a)) = a; for |a| >= 1 the formal square root picks the
    // other branch at the Laurent argument.
    if a.abs() < Rational::from_integer(1.into()) {
        let fwd = with_margin(order, |m| {
            let s = beta_composed(-1, &TSeries::constant(a.clone(), m), m)?;
            beta_composed(1, &s, m)
        })?;
        out.push(IdentityCheck::compare(
            "beta_1 o beta_-1 = id",
            &params,
            &fwd,
            &exact_a,
            order,
        )?);
    }

    // 1/beta_1 + 1/beta_-1 = (1+y^2)/(y a)
    let sum = with_margin(order, |m| {
        let am = TSeries::constant(a.clone(), m);
        let b1 = root_formula(Wedge::Symmetric, RootKind::BetaMinus, &am, m)?;
        let bm1 = root_formula(Wedge::Symmetric, RootKind::BetaPlus, &am, m)?;
        let lhs = &b1.inv()? + &bm1.inv()?;
        let rhs = (&ci(1) + &tp(2)).shift(-1) * &am.inv()?;
        Ok(&lhs - &rhs)
    })?;
    out.push(IdentityCheck::vanishes(
        "1/beta_1 + 1/beta_-1 = (1+y^2)/(ya)",
        &params,
        &sum,
        order,
    )?);

    // 1/beta_n = ((1+y^2)/y)/beta_(n-1) - 1/beta_(n-2)
    if n >= 2 {
        let rec = with_margin(order, |m| {
            let am = TSeries::constant(a.clone(), m);
            let bn = beta_composed(n, &am, m)?;
            let bn1 = beta_composed(n - 1, &am, m)?;
            let bn2 = beta_composed(n - 2, &am, m)?;
            let rhs = &((&ci(1) + &tp(2)).shift(-1) * &bn1.inv()?) - &bn2.inv()?;
            Ok(&bn.inv()? - &rhs)
        })?;
        out.push(IdentityCheck::vanishes(
            "three-term recurrence for 1/beta_n",
            &params,
            &rec,
            order,
        )?);
    }
    Ok(out)
}

/// `beta_1` of the asymmetric kernel at a series argument.
pub fn beta1_asym(a: &TSeries, order: i64) -> Result<TSeries> {
    root_formula(Wedge::Asymmetric, RootKind::BetaMinus, a, order)
}

/// `alpha_1` of the asymmetric kernel at a series argument.
pub fn alpha1_asym(b: &TSeries, order: i64) -> Result<TSeries> {
    root_formula(Wedge::Asymmetric, RootKind::AlphaMinus, b, order)
}

/// `gamma_n = (alpha_1 o beta_1)^n`.
pub fn gamma_composed(n: i64, a: &TSeries, order: i64) -> Result<TSeries> {
    let mut s = a.clone();
    for _ in 0..n {
        s = alpha1_asym(&beta1_asym(&s, order)?, order)?;
    }
    Ok(s)
}

/// `1/gamma_n` from `beta_1(a)` and `a`:
/// `(1-y^4n)/(y^(2n-1)(1-y^2) beta_1) - (1-y^(4n-2))/(y^(2n-2)(1-y^2) a)
///  - x(1-y^2n)(1-y^(2n-2))/(y^(2n-2)(1-y^2))`.
pub fn gamma_closed_from_beta(n: i64, a: &TSeries, beta1: &TSeries, order: i64) -> Result<TSeries> {
    let first = &geom2(2 * n).shift(1 - 2 * n) * &inv(beta1, order)?;
    let second = &geom2(2 * n - 1).shift(2 - 2 * n) * &inv(a, order)?;
    // (1-y^2n)(1-y^(2n-2))/(1-y^2) = geom2(n) (1 - y^(2n-2))
    let third = (&geom2(n) * &(&ci(1) - &tp(2 * n - 2))).shift(3 - 2 * n);
    let r = &(&first - &second) - &third;
    r.inv()
}

/// `1/gamma_n = (x + y^(2n-2) Q)(x + y^2n Q) / (y^(2n-2)(1-y^2) Q)`.
pub fn gamma_closed_from_q(n: i64, q: &TSeries, order: i64) -> Result<TSeries> {
    let y = t();
    let f1 = &y + &(q.shift(2 * n - 2));
    let f2 = &y + &(q.shift(2 * n));
    let den = &(&ci(1) - &tp(2)) * &q.shift(2 * n - 2);
    let r = &(&f1 * &f2) * &inv(&den, order)?;
    r.inv()
}

/// `1/beta_1(gamma_n) = (x + y^2n Q)^2 / (y^(2n-1)(1-y^2) Q)`.
pub fn beta_gamma_closed_from_q(n: i64, q: &TSeries, order: i64) -> Result<TSeries> {
    let f = &t() + &q.shift(2 * n);
    let den = &(&ci(1) - &tp(2)) * &q.shift(2 * n - 1);
    let r = &(&f * &f) * &inv(&den, order)?;
    r.inv()
}

/// Both forms of `gamma_n(a)`; the closed form is the `Q`-based one.
pub fn gamma_iterate(n: i64, a: &Rational, order: i64) -> Result<IteratedRoot> {
    depth_ok(n)?;
    let composed_form = with_margin(order, |m| gamma_composed(n, &TSeries::constant(a.clone(), m), m))?;
    let closed_form = with_margin(order, |m| {
        let q = q_asym_series(&TSeries::constant(a.clone(), m), m)?;
        gamma_closed_from_q(n, &q, m)
    })?;
    Ok(IteratedRoot {
        n,
        closed_form,
        composed_form,
    })
}

/// Closed forms of `gamma_n` and `beta_1(gamma_n)` against composition, plus
/// the mixed identity `alpha_1(beta_-1(a)) = a`.
pub fn gamma_identities(n: i64, a: &Rational, order: i64) -> Result<Vec<IdentityCheck>> {
    depth_ok(n)?;
    let params = format!("n={n}, a={a}");
    let mut out = Vec::new();
    let it = gamma_iterate(n, a, order)?;
    out.push(it.check("gamma_n via Q", a, order)?);

    let from_beta = with_margin(order, |m| {
        let am = TSeries::constant(a.clone(), m);
        let b1 = beta1_asym(&am, m)?;
        gamma_closed_from_beta(n, &am, &b1, m)
    })?;
    out.push(IdentityCheck::compare(
        "gamma_n via beta_1(a) and a",
        &params,
        &from_beta,
        &it.composed_form,
        order,
    )?);

    let bg_composed = with_margin(order, |m| {
        let g = gamma_composed(n, &TSeries::constant(a.clone(), m), m)?;
        beta1_asym(&g, m)
    })?;
    let bg_closed = with_margin(order, |m| {
        let q = q_asym_series(&TSeries::constant(a.clone(), m), m)?;
        beta_gamma_closed_from_q(n, &q, m)
    })?;
    out.push(IdentityCheck::compare(
        "beta_1(gamma_n) via Q",
        &params,
        &bg_closed,
        &bg_composed,
        order,
    )?);

    if n == 0 {
        let back = with_margin(order, |m| {
            let am = TSeries::constant(a.clone(), m);
            let bp = root_formula(Wedge::Asymmetric, RootKind::BetaPlus, &am, m)?;
            alpha1_asym(&bp, m)
        })?;
        out.push(IdentityCheck::compare(
            "alpha_1 o beta_-1 = id",
            format!("a={a}"),
            &back,
            &TSeries::constant(a.clone(), order),
            order,
        )?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn beta_forms_agree() {
        for n in 0..=4 {
            let it = beta_iterate(n, &rat(1, 1), 30).unwrap();
            assert!(it.check("beta", &rat(1, 1), 30).unwrap().holds(), "n={n}");
            assert_eq!(it.closed_form.valuation(), n);
        }
        let b0 = beta_iterate(0, &rat(1, 2), 10).unwrap();
        assert_eq!(b0.composed_form, TSeries::constant(rat(1, 2), 10));
    }

    #[test]
    fn inverse_direction_needs_small_a() {
        let names = |a| {
            group_law_check(1, &a, 20)
                .unwrap()
                .into_iter()
                .map(|c| c.identity)
                .collect::<Vec<_>>()
        };
        assert!(names(rat(2, 3)).iter().any(|n| n == "beta_1 o beta_-1 = id"));
        assert!(!names(rat(1, 1)).iter().any(|n| n == "beta_1 o beta_-1 = id"));
    }

    #[test]
    fn group_law() {
        for n in 0..=3 {
            for c in group_law_check(n, &rat(1, 2), 30).unwrap() {
                assert!(c.holds(), "{c:?}");
            }
        }
    }

    #[test]
    fn gamma_forms_agree() {
        for n in 0..=3 {
            for c in gamma_identities(n, &rat(1, 1), 30).unwrap() {
                assert!(c.holds(), "{c:?}");
            }
        }
        let g2 = gamma_iterate(2, &rat(1, 1), 30).unwrap();
        assert_eq!(g2.closed_form.valuation(), 4);
    }
}

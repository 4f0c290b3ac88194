use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::check::IdentityCheck;
use super::roots::{root_formula, RootKind};
use super::system::Wedge;
use super::util::{ci, inv, poly, sqrt, t, tp, with_margin};
use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QKind {
    QSym,
    QAsym,
    QbarAsym,
    PAsym,
}

impl QKind {
    pub const ALL: [QKind; 4] = [QKind::QSym, QKind::QAsym, QKind::QbarAsym, QKind::PAsym];

    pub fn name(self) -> &'static str {
        match self {
            QKind::QSym => "q_sym",
            QKind::QAsym => "q_asym",
            QKind::QbarAsym => "qbar_asym",
            QKind::PAsym => "p_asym",
        }
    }
}

impl fmt::Display for QKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown series {s:?}")))
    }
}

/// `Q(a) = 1/(xa^2) - y/(xa beta_1(a)) - y` for the symmetric kernel.
pub fn q_sym_series(a: &TSeries, n: i64) -> Result<TSeries> {
    let b1 = root_formula(Wedge::Symmetric, RootKind::BetaMinus, a, n)?;
    let ia = inv(a, n)?;
    let first = (&ia * &ia).shift(-1);
    let second = &ia * &inv(&b1, n)?;
    Ok(&(&first - &second) - &t())
}

/// `Q(a) = 1/a - y/beta_1(a) - x` for the asymmetric kernel.
pub fn q_asym_series(a: &TSeries, n: i64) -> Result<TSeries> {
    let b1 = root_formula(Wedge::Asymmetric, RootKind::BetaMinus, a, n)?;
    let r = &inv(a, n)? - &inv(&b1, n)?.shift(1);
    Ok(&r - &t())
}

/// `Qbar(a) = 1/beta_1(a) - y/a - xy`.
pub fn qbar_asym_series(a: &TSeries, n: i64) -> Result<TSeries> {
    let b1 = root_formula(Wedge::Asymmetric, RootKind::BetaMinus, a, n)?;
    let r = &inv(&b1, n)? - &inv(a, n)?.shift(1);
    Ok(&r - &tp(2))
}

/// `P(b) = Q(alpha_1(b)) / (xy)`, normalised so that `P(1)` is the printed
/// closed form.
pub fn p_asym_series(b: &TSeries, n: i64) -> Result<TSeries> {
    let a1 = root_formula(Wedge::Asymmetric, RootKind::AlphaMinus, b, n)?;
    Ok(q_asym_series(&a1, n)?.shift(-2))
}

/// One of the `Q`-type series at a rational argument, through order `order`.
pub fn qpq_series(which: QKind, arg: &Rational, order: i64) -> Result<TSeries> {
    if arg == &Rational::from_integer(0.into()) {
        return Err(Error::Invalid("argument must be nonzero".into()));
    }
    with_margin(order, |n| {
        let a = TSeries::constant(arg.clone(), n);
        match which {
            QKind::QSym => q_sym_series(&a, n),
            QKind::QAsym => q_asym_series(&a, n),
            QKind::QbarAsym => qbar_asym_series(&a, n),
            QKind::PAsym => p_asym_series(&a, n),
        }
    })
}

/// `(1 - 3t^2 - sqrt((1-t^2)(1-5t^2))) / 2t`: the printed `Q_sym(1)` and `P(1)`.
pub fn q_sym_one_printed(order: i64) -> Result<TSeries> {
    with_margin(order, |n| {
        let r = sqrt(&(&poly(&[1, 0, -1]) * &poly(&[1, 0, -5])), n)?;
        Ok((&poly(&[1, 0, -3]) - &r)
            .shift(-1)
            .scale(&Rational::new(1.into(), 2.into())))
    })
}

/// `(1 - t - t^2 - t^3 - sqrt((1-t^4)(1-2t-t^2))) / 2`: the printed `Q_asym(1)`.
pub fn q_asym_one_printed(order: i64) -> Result<TSeries> {
    with_margin(order, |n| {
        let r = sqrt(&(&poly(&[1, 0, 0, 0, -1]) * &poly(&[1, -2, -1])), n)?;
        Ok((&poly(&[1, -1, -1, -1]) - &r).scale(&Rational::new(1.into(), 2.into())))
    })
}

/// The printed closed forms at argument 1 against the defining formulas.
pub fn printed_forms_check(order: i64) -> Result<Vec<IdentityCheck>> {
    let one = Rational::from_integer(1.into());
    let qs = q_sym_one_printed(order)?;
    let qa = q_asym_one_printed(order)?;
    Ok(vec![
        IdentityCheck::compare(
            "Q_sym(1) printed form",
            "a=1",
            &qs,
            &qpq_series(QKind::QSym, &one, order)?,
            order,
        )?,
        IdentityCheck::compare(
            "Q_asym(1) printed form",
            "a=1",
            &qa,
            &qpq_series(QKind::QAsym, &one, order)?,
            order,
        )?,
        IdentityCheck::compare(
            "P(1) printed form",
            "b=1",
            &qs,
            &qpq_series(QKind::PAsym, &one, order)?,
            order,
        )?,
    ])
}

/// `Qbar(a) Q(a) = x^2 y`.
pub fn qbar_q_check(a: &Rational, order: i64) -> Result<IdentityCheck> {
    let prod = with_margin(order, |n| {
        let am = TSeries::constant(a.clone(), n);
        Ok(&q_asym_series(&am, n)? * &qbar_asym_series(&am, n)?)
    })?;
    IdentityCheck::compare("Qbar Q = x^2 y", format!("a={a}"), &prod, &tp(3), order)
}

/// `1 - 2t - t^2`, the denominator carrying the dominant pole.
pub fn free_denominator() -> TSeries {
    &ci(1) - &poly(&[0, 2, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn low_order_terms() {
        let one = rat(1, 1);
        let qs = qpq_series(QKind::QSym, &one, 6).unwrap();
        assert_eq!(qs.dense(0, 6), [0, 0, 0, 1, 0, 3, 0].map(|k| rat(k, 1)));
        let qa = qpq_series(QKind::QAsym, &one, 6).unwrap();
        assert_eq!(qa.dense(0, 6), [0, 0, 0, 0, 1, 1, 2].map(|k| rat(k, 1)));
    }

    #[test]
    fn printed_forms() {
        for c in printed_forms_check(30).unwrap() {
            assert!(c.holds(), "{c:?}");
        }
    }

    #[test]
    fn qbar_times_q() {
        for a in [rat(1, 1), rat(1, 2), rat(2, 3)] {
            assert!(qbar_q_check(&a, 30).unwrap().holds());
        }
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::system::{KernelSystem, Wedge};
use super::util::{ci, div, sqrt, t, with_margin};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational, TSeries};

/// The four kernel roots: `beta` solves `K(a, beta(a)) = 0`, `alpha` solves
/// `K(alpha(b), b) = 0`. The minus branches are the power series ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    BetaMinus,
    BetaPlus,
    AlphaMinus,
    AlphaPlus,
}

impl RootKind {
    pub fn name(self) -> &'static str {
        match self {
            RootKind::BetaMinus => "beta-",
            RootKind::BetaPlus => "beta+",
            RootKind::AlphaMinus => "alpha-",
            RootKind::AlphaPlus => "alpha+",
        }
    }

    fn sign(self) -> i64 {
        match self {
            RootKind::BetaMinus | RootKind::AlphaMinus => -1,
            _ => 1,
        }
    }

    fn is_beta(self) -> bool {
        matches!(self, RootKind::BetaMinus | RootKind::BetaPlus)
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [
            RootKind::BetaMinus,
            RootKind::BetaPlus,
            RootKind::AlphaMinus,
            RootKind::AlphaPlus,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Invalid(format!("unknown root {s:?}")))
    }
}

/// A kernel root expanded in `t` at a given argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSeries {
    pub which: RootKind,
    pub argument: TSeries,
    pub expansion: TSeries,
}

/// Closed-form `p = 1` root evaluated at a series argument, at working order
/// `n`. Valid whenever the radicand keeps a square leading coefficient.
pub fn root_formula(wedge: Wedge, which: RootKind, arg: &TSeries, n: i64) -> Result<TSeries> {
    let y = t();
    let y2 = &y * &y;
    let one_y2 = &ci(1) - &y2;
    let one_p_y2 = &ci(1) + &y2;
    let s = ci(which.sign());
    let half = Rational::new(1.into(), 2.into());
    match (wedge, which.is_beta()) {
        (Wedge::Symmetric, _) => {
            // (a/2) (1 + y^2 +- sqrt((1-y^2)(1-4xya^2-y^2))) / (y + xa^2 - xy^2a^2)
            let a = arg;
            let a2 = a * a;
            let rad = &one_y2 * &(&one_y2 - &(&y2 * &a2).scale(&rat(4, 1)));
            let root = sqrt(&rad, n)?;
            let num = &one_p_y2 + &(&s * &root);
            let den = &y + &(&(&y * &a2) * &one_y2);
            Ok(div(&(a * &num), &den, n)?.scale(&half))
        }
        (Wedge::Asymmetric, true) => {
            // (a/2y) [1 + y^2 - x(1-y^2)a +- sqrt((1-y^2)((1-xa)^2 - y^2(1+xa)^2))]
            let a = arg;
            let xa = &y * a;
            let m = &ci(1) - &xa;
            let p = &ci(1) + &xa;
            let rad = &one_y2 * &(&(&m * &m) - &(&y2 * &(&p * &p)));
            let root = sqrt(&rad, n)?;
            let num = &(&one_p_y2 - &(&(&y * &one_y2) * a)) + &(&s * &root);
            Ok((a * &num).shift(-1).scale(&half))
        }
        (Wedge::Asymmetric, false) => {
            // (b/2) (1 + y^2 +- sqrt((1-y^2)(1-y^2-4xyb))) / (y + x(1-y^2)b)
            let b = arg;
            let rad = &one_y2 * &(&one_y2 - &(&y2 * b).scale(&rat(4, 1)));
            let root = sqrt(&rad, n)?;
            let num = &one_p_y2 + &(&s * &root);
            let den = &y + &(&(&y * &one_y2) * b);
            Ok(div(&(b * &num), &den, n)?.scale(&half))
        }
    }
}

/// Expands a kernel root at a rational argument through order `order`.
///
/// For `p = 1` the closed forms are used; for larger `p` only the power series
/// branches exist and are found by Newton iteration.
pub fn root(sys: &KernelSystem, which: RootKind, arg: &Rational, order: i64) -> Result<RootSeries> {
    if arg == &Rational::from_integer(0.into()) {
        return Err(Error::Invalid("root argument must be nonzero".into()));
    }
    if sys.wedge == Wedge::Symmetric && !which.is_beta() {
        return Err(Error::Unsupported(
            "the symmetric kernel is symmetric; use the beta roots".into(),
        ));
    }
    let expansion = if sys.p == 1 {
        with_margin(order, |n| {
            root_formula(sys.wedge, which, &TSeries::constant(arg.clone(), n), n)
        })?
    } else if matches!(which, RootKind::BetaMinus | RootKind::AlphaMinus) {
        newton_root(sys, which, arg, order)?
    } else {
        return Err(Error::Unsupported(format!(
            "{which} has no closed form for p = {}",
            sys.p
        )));
    };
    check_branch(which, arg, &expansion)?;
    Ok(RootSeries {
        which,
        argument: TSeries::constant(arg.clone(), order),
        expansion,
    })
}

/// The power series branches start `t * arg`; the Laurent ones start at `t^-1`.
fn check_branch(which: RootKind, arg: &Rational, s: &TSeries) -> Result<()> {
    let ok = match which {
        RootKind::BetaMinus | RootKind::AlphaMinus => s.valuation() == 1 && s.leading() == Some(arg),
        _ => s.valuation() == -1,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Branch(format!(
            "{which}({arg}) starts at t^{} with coefficient {:?}",
            s.valuation(),
            s.leading().map(|c| c.to_string())
        )))
    }
}

/// Power series root by Newton iteration, for any `p`.
pub fn newton_root(sys: &KernelSystem, which: RootKind, arg: &Rational, order: i64) -> Result<TSeries> {
    let n = order + 2;
    let fixed = TSeries::constant(arg.clone(), n);
    let mut r = TSeries::monomial(arg.clone(), 1, n);
    for _ in 0..64 {
        let (a, b) = if which.is_beta() {
            (&fixed, &r)
        } else {
            (&r, &fixed)
        };
        let k = sys.eval(a, b).k.truncate(n);
        if k.is_zero() {
            return Ok(r.truncate(order));
        }
        let (ka, kb) = sys.kernel_gradient(a, b);
        let d = if which.is_beta() { kb } else { ka };
        let step = div(&k, &d, n)?;
        let next = (&r - &step).truncate(n);
        if next == r {
            return Ok(r.truncate(order));
        }
        r = next;
    }
    Err(Error::NoConvergence(format!(
        "Newton iteration for {which}({arg})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::kernel::util::c;

    #[test]
    fn leading_terms() {
        let sym = KernelSystem::symmetric(1);
        let b = root(&sym, RootKind::BetaMinus, &rat(1, 1), 20).unwrap();
        assert_eq!(b.expansion.valuation(), 1);
        let bp = root(&sym, RootKind::BetaPlus, &rat(1, 1), 20).unwrap();
        assert_eq!(bp.expansion.valuation(), -1);
        let asym = KernelSystem::asymmetric(1);
        let a = root(&asym, RootKind::AlphaMinus, &rat(1, 1), 20).unwrap();
        assert_eq!(
            a.expansion.dense(0, 7),
            [0, 1, 0, 1, 0, 2, 0, 6].map(|k| rat(k, 1))
        );
        let b = root(&asym, RootKind::BetaMinus, &rat(1, 1), 20).unwrap();
        assert_eq!(b.expansion.dense(0, 5), [0, 1, 1, 1, 1, 2].map(|k| rat(k, 1)));
    }

    #[test]
    fn newton_matches_closed_form() {
        for sys in [KernelSystem::symmetric(1), KernelSystem::asymmetric(1)] {
            let kinds: &[RootKind] = match sys.wedge {
                Wedge::Symmetric => &[RootKind::BetaMinus],
                Wedge::Asymmetric => &[RootKind::BetaMinus, RootKind::AlphaMinus],
            };
            for &which in kinds {
                let a = rat(2, 3);
                let closed = root(&sys, which, &a, 25).unwrap().expansion;
                let newton = newton_root(&sys, which, &a, 25).unwrap();
                assert_eq!(closed, newton, "{which} {}", sys.wedge);
            }
        }
    }

    #[test]
    fn roots_annihilate_the_kernel() {
        let a = rat(1, 2);
        for p in 1..=3 {
            let sys = KernelSystem::symmetric(p);
            let b = root(&sys, RootKind::BetaMinus, &a, 30).unwrap().expansion;
            let k = sys.eval(&c(&a), &b).k;
            assert!(k.truncate(30).is_zero(), "p={p}");
        }
    }
}

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::check::IdentityCheck;
use super::system::{KernelSystem, Wedge};
use super::util::{c, ci, div, t};
use crate::enumerate::{weighted_gf, WeightedSeries};
use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};

/// Which specialisation of the endpoint-weighted series to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Spec {
    /// `f(a, b)`
    Free,
    /// `f(a, ya)`
    LowerDiagonal,
    /// `f(yb, b)`
    UpperDiagonal,
}

fn rpow(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

fn specialise(w: &WeightedSeries, a: &Rational, b: &Rational, spec: Spec) -> TSeries {
    let order = w.order as i64;
    let mut coeffs = vec![Rational::zero(); w.order + 1];
    for (&(n, i, j), count) in &w.entries {
        let count = Rational::from_integer(BigInt::from(count.clone()));
        let (weight, exp) = match spec {
            Spec::Free => (rpow(a, i) * rpow(b, j), n),
            Spec::LowerDiagonal => (rpow(a, i + j), n + j),
            Spec::UpperDiagonal => (rpow(b, i + j), n + i),
        };
        if (exp as usize) <= w.order {
            coeffs[exp as usize] += count * weight;
        }
    }
    TSeries::from_coeffs(0, coeffs, order)
}

fn check_point(a: &Rational, b: &Rational) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Invalid("a and b must be nonzero".into()));
    }
    Ok(())
}

/// The three specialisations `f(a,b)`, `f(a,ya)`, `f(yb,b)` of the
/// enumerated series, through order `order`.
pub fn enumerated_specialisations(
    sys: &KernelSystem,
    a: &Rational,
    b: &Rational,
    order: i64,
) -> Result<[TSeries; 3]> {
    check_point(a, b)?;
    let w = weighted_gf(sys.walk_model(), order as usize)?;
    Ok([
        specialise(&w, a, b, Spec::Free),
        specialise(&w, a, b, Spec::LowerDiagonal),
        specialise(&w, a, b, Spec::UpperDiagonal),
    ])
}

/// `K f(a,b) - X - Y f(a,ya) - Z f(yb,b)` with `f` taken from enumeration.
pub fn residual_kernel_form(sys: &KernelSystem, a: &Rational, b: &Rational, order: i64) -> Result<TSeries> {
    let [f, f_low, f_up] = enumerated_specialisations(sys, a, b, order)?;
    let v = sys.eval(&c(a), &c(b));
    let r = &(&(&v.k * &f) - &v.x) - &(&(&v.y * &f_low) + &(&v.z * &f_up));
    Ok(r.truncate(order))
}

/// The functional equation as printed, before clearing denominators:
/// `f = 1 + w f + w (yb/a)/(1-yb/a) (f - f(yb,b)) + w (ya/b)/(1-ya/b) (f - f(a,ya))`
/// with `w` the horizontal step weight. Returns `LHS - RHS`.
pub fn residual_functional_eq(sys: &KernelSystem, a: &Rational, b: &Rational, order: i64) -> Result<TSeries> {
    let [f, f_low, f_up] = enumerated_specialisations(sys, a, b, order)?;
    let (ca, cb) = (c(a), c(b));
    let w = sys.step_weight(&ca, &cb);
    let y = t();
    // (yb/a)/(1 - yb/a) = yb/(a - yb)
    let up = div(&(&y * &cb), &(&ca - &(&y * &cb)), order)?;
    let down = div(&(&y * &ca), &(&cb - &(&y * &ca)), order)?;
    let rhs = &(&(&ci(1) + &(&w * &f)) + &(&(&w * &up) * &(&f - &f_up))) + &(&(&w * &down) * &(&f - &f_low));
    Ok((&f - &rhs).truncate(order))
}

/// Both residuals wrapped as identity checks.
pub fn functional_eq_checks(
    sys: &KernelSystem,
    a: &Rational,
    b: &Rational,
    order: i64,
) -> Result<Vec<IdentityCheck>> {
    let params = format!("{} p={}, a={a}, b={b}", sys.wedge, sys.p);
    let eq = match sys.wedge {
        Wedge::Symmetric => "f",
        Wedge::Asymmetric => "h",
    };
    Ok(vec![
        IdentityCheck::vanishes(
            format!("functional equation for {eq}_p"),
            &params,
            &residual_functional_eq(sys, a, b, order)?,
            order,
        )?,
        IdentityCheck::vanishes(
            format!("kernel form for {eq}_p"),
            &params,
            &residual_kernel_form(sys, a, b, order)?,
            order,
        )?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn symmetric_equation_holds() {
        let sys = KernelSystem::symmetric(1);
        assert!(residual_functional_eq(&sys, &rat(1, 1), &rat(1, 1), 20)
            .unwrap()
            .is_zero());
        let sys = KernelSystem::symmetric(2);
        for chk in functional_eq_checks(&sys, &rat(2, 3), &rat(1, 2), 15).unwrap() {
            assert!(chk.holds(), "{chk:?}");
        }
    }

    #[test]
    fn asymmetric_equation_holds() {
        let sys = KernelSystem::asymmetric(1);
        for chk in functional_eq_checks(&sys, &rat(1, 2), &rat(1, 3), 20).unwrap() {
            assert!(chk.holds(), "{chk:?}");
        }
    }

    #[test]
    fn swapped_convention_fails() {
        // Exchanging the roles of the two diagonal specialisations breaks it.
        let sys = KernelSystem::symmetric(1);
        let (a, b) = (rat(1, 2), rat(2, 1));
        let [f, f_low, f_up] = enumerated_specialisations(&sys, &a, &b, 12).unwrap();
        let v = sys.eval(&c(&a), &c(&b));
        let r = &(&(&v.k * &f) - &v.x) - &(&(&v.y * &f_up) + &(&v.z * &f_low));
        assert!(!r.truncate(12).is_zero());
    }
}

use super::bargraph::gf_bargraph;
use super::kind::{GfKind, ThetaArg};
use super::theta::{theta_asym, theta_sym};
use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};
use crate::kernel::util::{c, ci, div, geom2, inv, poly, sqrt, tp, with_margin};
use crate::kernel::{
    q_asym_one_printed, q_asym_series, q_sym_one_printed, q_sym_series, root_formula, RootKind, Wedge,
};

/// Largest order accepted by [`gf_series`].
pub const GF_MAX_ORDER: i64 = 1000;

/// `1 - 2t - t^2`.
fn d() -> TSeries {
    poly(&[1, -2, -1])
}

/// `sqrt((1-t^2)(1-5t^2))`.
fn r1(n: i64) -> Result<TSeries> {
    sqrt(&(&poly(&[1, 0, -1]) * &poly(&[1, 0, -5])), n)
}

/// `sqrt((1-t^4)(1-2t-t^2))`.
fn r2(n: i64) -> Result<TSeries> {
    sqrt(&(&poly(&[1, 0, 0, 0, -1]) * &d()), n)
}

fn free(n: i64) -> Result<TSeries> {
    div(&poly(&[1, 1]), &d(), n)
}

fn dyck(n: i64) -> Result<TSeries> {
    let r = sqrt(&poly(&[1, -4]), n + 1)?;
    Ok((&ci(1) - &r).shift(-1).scale(&Rational::new(1.into(), 2.into())))
}

/// `(1 - t^2 - R1) / (1 - 2t - t^2) * S`, shared by `f_1` and `g_1`.
fn sym_tail(n: i64) -> Result<TSeries> {
    let q = q_sym_one_printed(n)?;
    let s = theta_sym(&q, n)?;
    let pre = div(&(&poly(&[1, 0, -1]) - &r1(n)?), &d(), n)?;
    Ok(&pre * &s)
}

fn sym_f1(n: i64) -> Result<TSeries> {
    Ok(&div(&poly(&[1, -1]), &d(), n)? - &sym_tail(n)?)
}

fn sym_g1(n: i64) -> Result<TSeries> {
    Ok(&free(n)? - &sym_tail(n)?.shift(-1))
}

/// The three pieces `p_1, p_2, p_3` of `h_1(1,1)`.
pub fn h1_pieces(n: i64) -> Result<[TSeries; 3]> {
    let q = q_asym_one_printed(n)?;
    let p = q_sym_one_printed(n)?;
    let one_t2 = poly(&[1, 0, -1]);
    let p1 = div(&(&poly(&[1, -2, 1]) - &r1(n)?), &d(), n)?.scale(&Rational::new(1.into(), 2.into()));
    let pre2 = div(&(&q * &one_t2), &d(), n)?.shift(-2);
    let p2 = -(&pre2 * &theta_asym(&q, n)?);
    let pre3 = div(&one_t2, &d(), n)?;
    let p3 = &pre3 * &theta_asym(&p, n)?;
    Ok([p1, p2, p3])
}

/// Summand `k` of `p_2`.
pub fn p2_summand(k: i64, n: i64) -> Result<TSeries> {
    let q = q_asym_one_printed(n)?;
    let pre = div(&(&q * &poly(&[1, 0, -1])), &d(), n)?.shift(-2);
    Ok(-(&pre * &super::theta::theta_asym_term(&q, k, n)?))
}

fn asym_h1(n: i64) -> Result<TSeries> {
    let [p1, p2, p3] = h1_pieces(n)?;
    Ok(&(&p1 + &p2) + &p3)
}

/// The half-plane generating function exactly as printed; its numerator does
/// not vanish at `z = 0`, so the result starts at `z^-2`.
fn halfplane(n: i64) -> Result<TSeries> {
    let num = &poly(&[-1, 1, 3, 1]) - &r2(n)?;
    let den = poly(&[-1, -2, 1])
        .shift(2)
        .scale(&Rational::from_integer(2.into()));
    div(&num, &den, n)
}

fn theta_sym_at(a: &Rational, n: i64) -> Result<TSeries> {
    theta_sym(&q_sym_series(&c(a), n)?, n)
}

fn f_aya(a: &Rational, n: i64) -> Result<TSeries> {
    let q = q_sym_series(&c(a), n)?;
    let pre = &ci(1) + &q.shift(-1);
    Ok(&pre * &theta_sym(&q, n)?)
}

/// `(1-y^2) Q / (a x^2 y^2) sum_n (x - y^2n Q)/(x + y^2n Q) (Q/x)^2n y^(2n^2)`.
fn h_aya_simplified(a: &Rational, n: i64) -> Result<TSeries> {
    let q = q_asym_series(&c(a), n)?;
    let pre = (&(&q * &poly(&[1, 0, -1])) * &inv(&c(a), n)?).shift(-4);
    Ok(&pre * &theta_asym(&q, n)?)
}

/// `H(a, ta)` as the product formula obtained by inspecting the iterated
/// terms, with `beta = beta_1(a)` of the asymmetric kernel.
fn h_aya_raw(a: &Rational, n: i64) -> Result<TSeries> {
    let ca = c(a);
    let beta = root_formula(Wedge::Asymmetric, RootKind::BetaMinus, &ca, n)?;
    let one_b = &ci(1) + &beta;
    let one_mb = &ci(1) - &beta;
    let ab = &ca * &beta;
    // a - beta t - a beta t^2 + a beta t^(2m+2)
    let big_a = |m: i64| &(&(&ca - &beta.shift(1)) - &ab.shift(2)) + &ab.shift(2 * m + 2);
    // a (1+beta) t^2m - beta (a + t^(2m-1))
    let big_d = |m: i64| &(&ca * &one_b).shift(2 * m) - &(&beta * &(&ca + &tp(2 * m - 1)));
    let mut acc = TSeries::zero(n);
    // prod_(m<k) D_m/A_m; the m = k factor cancels against the bracket
    // A_k/D_k. Each D_m has positive valuation, so term k starts at or above
    // t^(2(k+1)^2 - 3 + k).
    let mut prod = ci(1);
    let mut k = 0i64;
    while 2 * (k + 1) * (k + 1) - 3 + k <= n {
        let e = &(&(&(&ca - &beta.shift(1)) - &ab.shift(2)) - &beta.shift(4 * k + 1))
            + &(&ca * &one_b).shift(4 * k + 2);
        let f = &(&ca + &(&geom2(k) * &(&(&ca * &one_mb).shift(2) + &(&ca * &one_b).shift(2 * k + 2))))
            - &(&geom2(2 * k) * &beta.shift(1));
        let lead = div(&tp(2 * (k + 1) * (k + 1) - 3), &ca, n)?;
        let term = &(&lead * &div(&e, &f, n)?) * &prod;
        acc = &acc - &term.truncate(n);
        prod = (&prod * &div(&big_d(k), &big_a(k), n)?).truncate(n);
        k += 1;
    }
    Ok(acc)
}

fn assemble(kind: &GfKind, n: i64) -> Result<TSeries> {
    match kind {
        GfKind::Free => free(n),
        GfKind::Dyck => dyck(n),
        GfKind::Bargraph(p) => Ok(gf_bargraph(*p, n)?.g),
        GfKind::SymF1 => sym_f1(n),
        GfKind::SymG1 => sym_g1(n),
        GfKind::AsymH1 => asym_h1(n),
        GfKind::AsymK1 => Ok((&asym_h1(n + 1)? - &ci(1)).shift(-1)),
        GfKind::Halfplane => halfplane(n),
        GfKind::ThetaSym(a) => theta_sym_at(a, n),
        GfKind::ThetaAsym(ThetaArg::Q) => theta_asym(&q_asym_one_printed(n)?, n),
        GfKind::ThetaAsym(ThetaArg::P) => theta_asym(&q_sym_one_printed(n)?, n),
        GfKind::FAya(a) => f_aya(a, n),
        GfKind::HAyaRaw(a) => h_aya_raw(a, n),
        GfKind::HAyaSimplified(a) => h_aya_simplified(a, n),
    }
}

/// Expands one of the explicit generating functions through `t^order`.
pub fn gf_series(kind: &GfKind, order: i64) -> Result<TSeries> {
    if !(0..=GF_MAX_ORDER).contains(&order) {
        return Err(Error::Budget(format!(
            "series order must lie in 0..={GF_MAX_ORDER}, got {order}"
        )));
    }
    with_margin(order, |n| assemble(kind, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ints(s: &TSeries, to: i64) -> Vec<i64> {
        (0..=to)
            .map(|k| s.coeff(k).to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn first_coefficients() {
        assert_eq!(ints(&gf_series(&GfKind::Dyck, 4).unwrap(), 4), [1, 1, 2, 5, 14]);
        assert_eq!(ints(&gf_series(&GfKind::Free, 3).unwrap(), 3), [1, 3, 7, 17]);
        assert_eq!(
            ints(&gf_series(&GfKind::SymG1, 5).unwrap(), 5),
            [1, 1, 3, 5, 13, 27]
        );
        assert_eq!(ints(&gf_series(&GfKind::AsymK1, 4).unwrap(), 4), [1, 1, 2, 3, 7]);
    }

    #[test]
    fn printed_halfplane_is_laurent() {
        let s = gf_series(&GfKind::Halfplane, 6).unwrap();
        assert_eq!(s.valuation(), -2);
    }

    #[test]
    fn printed_product_formula_differs_from_the_sum() {
        for a in [rat(1, 1), rat(1, 2)] {
            let raw = gf_series(&GfKind::HAyaRaw(a.clone()), 12).unwrap();
            let simple = gf_series(&GfKind::HAyaSimplified(a.clone()), 12).unwrap();
            assert_eq!(raw.valuation(), -1);
            assert_eq!(raw.coeff(-1), -(a.recip()));
            assert_eq!(simple.valuation(), 0);
        }
    }
}

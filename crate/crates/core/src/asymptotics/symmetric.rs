//! Constants of the symmetric wedge `-X <= Y <= X`, from the explicit
//! `g_1(1,1)`.

use serde::Serialize;

use super::fit::{count_float, richardson};
use super::reference::{self, lit, mu, t_c, ten_pow};
use super::report::{AsymptoticReport, Method};
use super::sums::{theta_sym_dq, theta_sym_value};
use super::MAX_DIGITS;
use crate::enumerate::{count_walks, WedgeModel};
use crate::error::{Error, Result};
use crate::exact::PrecFloat;

fn check_digits(digits: usize) -> Result<()> {
    if digits == 0 || digits > MAX_DIGITS {
        return Err(Error::Budget(format!(
            "digits must lie in 1..={MAX_DIGITS}, got {digits}"
        )));
    }
    Ok(())
}

fn one(d: usize) -> PrecFloat {
    PrecFloat::from_i64(1, d)
}

fn int(k: i64, d: usize) -> PrecFloat {
    PrecFloat::from_i64(k, d)
}

/// `1 - 2t - t^2`.
fn d_poly(t: &PrecFloat) -> PrecFloat {
    let d = t.digits();
    &(&one(d) - &(t * &int(2, d))) - &(t * t)
}

/// `sqrt((1-t^2)(1-5t^2))`.
fn r1(t: &PrecFloat) -> PrecFloat {
    let d = t.digits();
    let t2 = t * t;
    (&(&one(d) - &t2) * &(&one(d) - &(&t2 * &int(5, d)))).sqrt()
}

/// `g_1(1,1)` evaluated at a real `0 < t < 1/sqrt5`.
pub fn g11_value(t: &PrecFloat) -> Result<PrecFloat> {
    let d = t.digits();
    let r = r1(t);
    let t2 = t * t;
    let q = &(&(&one(d) - &(&t2 * &int(3, d))) - &r) / &(t * &int(2, d));
    let s = theta_sym_value(t, &q)?;
    let dd = d_poly(t);
    let free = &(&one(d) + t) / &dd;
    let tail = &(&(&(&one(d) - &t2) - &r) / &(t * &dd)) * &s;
    Ok(&free - &tail)
}

/// `A_0 = lim (1 - t/t_c) g_1(1,1)` at `t_c = sqrt2 - 1`. Only the
/// `1/(1-2t-t^2)` prefactors have a pole there, so the limit is
/// `[(1 + t_c) - (1 - t_c^2 - R1)/t_c S] / (t_c (t_c + 1 + sqrt2))`.
fn a0_value(digits: usize) -> Result<PrecFloat> {
    let tc = t_c(digits);
    let r = r1(&tc);
    let t2 = &tc * &tc;
    let q = &(&(&one(digits) - &(&t2 * &int(3, digits))) - &r) / &(&tc * &int(2, digits));
    let s = theta_sym_value(&tc, &q)?;
    let inner = &(&one(digits) + &tc) - &(&(&(&(&one(digits) - &t2) - &r) / &tc) * &s);
    let scale = &tc * &(&(&tc + &one(digits)) + &int(2, digits).sqrt());
    Ok(&inner / &scale)
}

/// `Q_sym(1)` at `t_c`; equals `3 - 2 sqrt2`.
pub fn q_sym_at_tc(digits: usize) -> PrecFloat {
    let tc = t_c(digits);
    let r = r1(&tc);
    let t2 = &tc * &tc;
    &(&(&one(digits) - &(&t2 * &int(3, digits))) - &r) / &(&tc * &int(2, digits))
}

/// `(1 - t/t_c) g_1(1,1)` at `t = t_c (1 - eps)`.
pub fn a0_limit_probe(eps: &PrecFloat) -> Result<PrecFloat> {
    let d = eps.digits();
    let tc = t_c(d);
    let t = &tc * &(&one(d) - eps);
    Ok(&(&one(d) - &(&t / &tc)) * &g11_value(&t)?)
}

/// `A_0`, the coefficient of `(1+sqrt2)^n` in the count of walks in the
/// symmetric wedge with `p = 1`.
pub fn constant_a0(digits: usize) -> Result<AsymptoticReport> {
    check_digits(digits)?;
    let w = digits + 10;
    let value = a0_value(w)?.with_digits(digits);
    let bound = &(&mu(w) / &int(2, w)).with_digits(digits);
    let probe = a0_limit_probe(&ten_pow(-8, w))?;
    let probe_digits = probe.agreeing_digits(&value.with_digits(w));
    let three_minus = &int(3, w) - &(&int(2, w) * &int(2, w).sqrt());
    let q_gap = (&q_sym_at_tc(w) - &three_minus).abs();
    Ok(AsymptoticReport::new("A0", Method::Analytic, value.clone())
        .against(reference::A0)
        .note("corollary upper bound (1+sqrt2)/2", bound)
        .note("below corollary bound", value < *bound)
        .note("limit probe at t_c(1 - 1e-8)", probe.with_digits(12))
        .note("limit probe agreeing digits", format!("{probe_digits:.2}"))
        .note("|Q_sym(t_c) - (3 - 2 sqrt2)|", q_gap.to_sci_string(3)))
}

/// `A_1`, `A_2` from the square-root singularities of `g_1(1,1)` at
/// `t = +-1/sqrt5`. Writing `g_1 = G + G_R R1 + O(R1^2)` with
/// `R1 = sqrt((1-t^2)(1-5t^2))`, the transfer theorem gives
/// `A_1 = k G_R(rho)`, `A_2 = k G_R(-rho)`, `k = -sqrt(2(1-rho^2))/(2 sqrt pi)`.
fn a1a2_analytic(digits: usize) -> Result<(PrecFloat, PrecFloat)> {
    let d = digits;
    let rho = int(5, d).sqrt().recip();
    let rho2 = &rho * &rho;
    let k = -(&(&int(2, d) * &(&one(d) - &rho2)).sqrt() / &(&int(2, d) * &PrecFloat::pi(d).sqrt()));
    let g_r = |t: &PrecFloat| -> Result<PrecFloat> {
        let t2 = t * t;
        let q = &(&one(d) - &(&t2 * &int(3, d))) / &(t * &int(2, d));
        let s = theta_sym_value(t, &q)?;
        let sp = theta_sym_dq(t, &q)?;
        let dd = d_poly(t);
        let a = &s / &(t * &dd);
        let b = &(&(&one(d) - &t2) * &sp) / &(&(&t2 * &int(2, d)) * &dd);
        Ok(&a + &b)
    };
    Ok((&k * &g_r(&rho)?, &k * &g_r(&-rho.clone())?))
}

/// How [`constants_a1a2`] obtains the constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum A1A2Method {
    Analytic,
    Fit,
}

/// Default number of extrapolation steps in the `A_1`, `A_2` fit.
pub const A1A2_FIT_ORDER: usize = 8;

/// `A_1` and `A_2`, the parity-split coefficients of
/// `5^(n/2) / (n+1)^(3/2)` in the symmetric wedge count.
///
/// The fit forms `r_n = (v_n - A_0 mu^n) (n+1)^(3/2) 5^(-n/2)` from exact
/// counts, extrapolates even and odd `n` separately in `1/n` from `n_max`
/// down, and splits the two limits into `A_1 +- A_2`.
pub fn constants_a1a2(method: A1A2Method, digits: usize, n_max: usize) -> Result<[AsymptoticReport; 2]> {
    check_digits(digits)?;
    match method {
        A1A2Method::Analytic => {
            let (a1, a2) = a1a2_analytic(digits + 10)?;
            Ok([
                AsymptoticReport::new("A1", Method::Analytic, a1.with_digits(digits)).against(reference::A1),
                AsymptoticReport::new("A2", Method::Analytic, a2.with_digits(digits)).against(reference::A2),
            ])
        }
        A1A2Method::Fit => a1a2_fit(digits, n_max, A1A2_FIT_ORDER),
    }
}

fn a1a2_fit(digits: usize, n_max: usize, order: usize) -> Result<[AsymptoticReport; 2]> {
    if n_max < 2 * order + 12 {
        return Err(Error::Invalid(format!(
            "the A1/A2 fit needs n_max >= {}, got {n_max}",
            2 * order + 12
        )));
    }
    // r_n cancels about n log10(mu/sqrt5) digits of v_n
    let w = digits + 20 + n_max / 25;
    let table = count_walks(WedgeModel::symmetric(1), n_max)?;
    let a0 = a0_value(w)?;
    let m = mu(w);
    let root5 = int(5, w).sqrt();
    let e = |n: usize| {
        let resid = &count_float(&table, n, w) - &(&a0 * &m.powi(n as i64));
        let np1 = int(n as i64 + 1, w);
        &(&resid * &(&np1 * &np1.sqrt())) / &root5.powi(n as i64)
    };
    let even_top = n_max - n_max % 2;
    let odd_top = even_top - 1;
    let split = |ord: usize| -> Result<(PrecFloat, PrecFloat)> {
        let ev = richardson(even_top, 2, ord, w, e)?;
        let od = richardson(odd_top, 2, ord, w, e)?;
        let two = int(2, w);
        Ok((&(&ev + &od) / &two, &(&ev - &od) / &two))
    };
    let (a1, a2) = split(order)?;
    let (b1, b2) = split(order - 1)?;
    let lo = odd_top - 2 * order;
    let mk = |name: &str, v: PrecFloat, prev: PrecFloat, refv: &str| {
        AsymptoticReport::new(name, Method::Fit, v.with_digits(digits))
            .against(refv)
            .fitted((lo, n_max), order)
            .note(
                "change from one fewer extrapolation step",
                (&v - &prev).abs().to_sci_string(3),
            )
            .note("raw r_n at n_max", e(n_max).with_digits(12))
    };
    Ok([mk("A1", a1, b1, reference::A1), mk("A2", a2, b2, reference::A2)])
}

/// One row of the accuracy table for the three-constant asymptotic formula.
#[derive(Clone, Debug, Serialize)]
pub struct AccuracyRow {
    pub n: usize,
    pub exact: String,
    pub estimate: PrecFloat,
    pub rel_error: f64,
    pub bound: f64,
    pub pass: bool,
    /// Relative error of the same formula with `A_1 - (-1)^n A_2`.
    pub rel_error_opposite_parity: f64,
}

/// `A_0 mu^n + 5^(n/2) / (n+1)^(3/2) (A_1 + (-1)^n A_2)` with the printed
/// constants, against exact counts at `n = 10, 20, 30, 40`.
#[derive(Clone, Debug, Serialize)]
pub struct AccuracyTable {
    pub rows: Vec<AccuracyRow>,
}

impl AccuracyTable {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Printed error bounds for `n = 10, 20, 30, 40`.
pub const ACCURACY_BOUNDS: [(usize, f64); 4] = [(10, 0.07), (20, 0.01), (30, 0.002), (40, 0.0006)];

pub fn accuracy_table() -> Result<AccuracyTable> {
    let d = 40;
    let table = count_walks(WedgeModel::symmetric(1), 40)?;
    let (a0, a1, a2) = (
        lit(reference::A0, d),
        lit(reference::A1, d),
        lit(reference::A2, d),
    );
    let m = mu(d);
    let root5 = int(5, d).sqrt();
    let rows = ACCURACY_BOUNDS
        .iter()
        .map(|&(n, bound)| {
            let exact = count_float(&table, n, d);
            let np1 = int(n as i64 + 1, d);
            let sub = &root5.powi(n as i64) / &(&np1 * &np1.sqrt());
            let lead = &a0 * &m.powi(n as i64);
            let (plus, minus) = if n % 2 == 0 {
                (&a1 + &a2, &a1 - &a2)
            } else {
                (&a1 - &a2, &a1 + &a2)
            };
            let est = &lead + &(&sub * &plus);
            let other = &lead + &(&sub * &minus);
            let rel = |x: &PrecFloat| (&(x - &exact) / &exact).abs().to_f64();
            let rel_error = rel(&est);
            AccuracyRow {
                n,
                exact: table.get(n).to_string(),
                estimate: est.with_digits(15),
                rel_error,
                bound,
                pass: rel_error <= bound,
                rel_error_opposite_parity: rel(&other),
            }
        })
        .collect();
    Ok(AccuracyTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g11_near_zero_matches_counts() {
        // g_1 = 1 + t + 3t^2 + 5t^3 + 13t^4 + ...
        let t = PrecFloat::parse("0.001", 40).unwrap();
        let direct = 1.0 + 0.001 + 3e-6 + 5e-9 + 13e-12;
        assert!((g11_value(&t).unwrap().to_f64() - direct).abs() < 1e-13);
    }

    #[test]
    fn a0_to_fifteen_digits() {
        let r = constant_a0(30).unwrap();
        assert!(r.agrees_to(15.0), "{r}");
        assert_eq!(r.diagnostic("below corollary bound"), Some("true"));
    }

    #[test]
    fn analytic_a1_a2() {
        let [a1, a2] = constants_a1a2(A1A2Method::Analytic, 25, 0).unwrap();
        assert!(a1.agrees_to(15.0), "{a1}");
        assert!(a2.agrees_to(15.0), "{a2}");
    }
}

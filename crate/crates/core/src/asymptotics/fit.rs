use num_bigint::BigInt;

use super::reference::mu;
use super::report::{AsymptoticReport, Method};
use crate::enumerate::{count_walks, CountTable, WedgeModel};
use crate::error::{Error, Result};
use crate::exact::PrecFloat;

/// Value at `x = 0` of the polynomial through the points `(xs, ys)`.
pub fn neville_at_zero(xs: &[PrecFloat], ys: &[PrecFloat]) -> PrecFloat {
    let mut p: Vec<PrecFloat> = ys.to_vec();
    let n = xs.len();
    for m in 1..n {
        for i in 0..n - m {
            let num = &(&xs[i + m] * &p[i]) - &(&xs[i] * &p[i + 1]);
            p[i] = &num / &(&xs[i + m] - &xs[i]);
        }
    }
    p.swap_remove(0)
}

/// Extrapolates `e(n)` to `n = infinity` through the `order + 1` lengths
/// `top, top - step, ...`, treating `e` as a polynomial in `1/n`.
pub fn richardson(
    top: usize,
    step: usize,
    order: usize,
    digits: usize,
    e: impl Fn(usize) -> PrecFloat,
) -> Result<PrecFloat> {
    if step * order >= top {
        return Err(Error::Invalid(format!(
            "cannot take {} points below n = {top} in steps of {step}",
            order + 1
        )));
    }
    let ns: Vec<usize> = (0..=order).map(|i| top - i * step).collect();
    let xs: Vec<PrecFloat> = ns
        .iter()
        .map(|&n| PrecFloat::from_i64(n as i64, digits).recip())
        .collect();
    let ys: Vec<PrecFloat> = ns.iter().map(|&n| e(n)).collect();
    Ok(neville_at_zero(&xs, &ys))
}

pub fn count_float(table: &CountTable, n: usize, digits: usize) -> PrecFloat {
    PrecFloat::from_bigint(&BigInt::from(table.get(n).clone()), digits)
}

/// `c_n sqrt(n)^s / mu^n`, the normalised coefficient for a `mu^n n^(-s/2)`
/// growth law.
pub fn normalised(table: &CountTable, n: usize, half_power: i64, digits: usize) -> PrecFloat {
    let c = count_float(table, n, digits);
    let root_n = PrecFloat::from_i64(n as i64, digits).sqrt();
    &(&c * &root_n.powi(half_power)) / &mu(digits).powi(n as i64)
}

/// Runs the fit protocol on a case with a known answer: free walks satisfy
/// `c_n ~ (1+sqrt2)/2 mu^n` and `c_(n+1)/c_n -> mu`.
pub fn free_walk_validation(n_max: usize, digits: usize) -> Result<[AsymptoticReport; 2]> {
    let table = count_walks(WedgeModel::free(), n_max)?;
    let order = 4;
    let prefactor = richardson(n_max, 1, order, digits, |n| normalised(&table, n, 0, digits))?;
    let growth = richardson(n_max, 1, order, digits, |n| {
        &count_float(&table, n, digits) / &count_float(&table, n - 1, digits)
    })?;
    let m = mu(digits);
    let half = &m / &PrecFloat::from_i64(2, digits);
    let with_ref = |name: &str, value: PrecFloat, exact: &PrecFloat| {
        let mut r = AsymptoticReport::new(name, Method::Fit, value).fitted((n_max - order, n_max), order);
        r.abs_error = Some((&r.value - exact).abs());
        r.agreeing_digits = Some(r.value.agreeing_digits(exact));
        r.reference = Some(exact.clone());
        r
    };
    Ok([
        with_ref("free walk prefactor (1+sqrt2)/2", prefactor, &half),
        with_ref("free walk growth constant 1+sqrt2", growth, &m),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neville_recovers_a_polynomial() {
        let d = 30;
        let xs: Vec<PrecFloat> = [1, 2, 3, 4].iter().map(|&x| PrecFloat::from_i64(x, d)).collect();
        // 5 - x + 2x^2
        let ys: Vec<PrecFloat> = [6, 11, 20, 33]
            .iter()
            .map(|&y| PrecFloat::from_i64(y, d))
            .collect();
        let v = neville_at_zero(&xs, &ys);
        assert!(v.approx_eq(&PrecFloat::from_i64(5, d), &PrecFloat::parse("1e-25", d).unwrap()));
    }

    #[test]
    fn free_walks_fit_to_six_digits() {
        let [pre, growth] = free_walk_validation(120, 40).unwrap();
        assert!(pre.agrees_to(6.0), "{pre}");
        assert!(growth.agrees_to(6.0), "{growth}");
    }
}

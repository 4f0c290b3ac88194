//! Theta-like sums evaluated at real points inside their disc of convergence.

use super::reference::ten_pow;
use crate::error::{Error, Result};
use crate::exact::PrecFloat;

const MAX_TERMS: i64 = 100_000;

/// Sums `term(0) + term(1) + ...` until a term falls below `10^-(digits+5)`
/// for three consecutive indices.
fn sum_until_small(
    digits: usize,
    from: i64,
    mut term: impl FnMut(i64) -> PrecFloat,
) -> Result<(PrecFloat, i64)> {
    let eps = ten_pow(-(digits as i64 + 5), digits);
    let mut acc = PrecFloat::zero(digits);
    let mut small = 0;
    for n in from..MAX_TERMS {
        let x = term(n);
        small = if x.abs() < eps { small + 1 } else { 0 };
        acc = &acc + &x;
        if small >= 3 {
            return Ok((acc, n + 1 - from));
        }
    }
    Err(Error::NoConvergence(format!(
        "theta sum not settled after {MAX_TERMS} terms"
    )))
}

/// `sum_n (-1)^n t^(n^2) q^n` for `|t| < 1`.
pub fn theta_sym_value(t: &PrecFloat, q: &PrecFloat) -> Result<PrecFloat> {
    let d = t.digits().min(q.digits());
    Ok(sum_until_small(d, 0, |n| {
        let x = &t.powi(n * n) * &q.powi(n);
        if n % 2 == 0 {
            x
        } else {
            -x
        }
    })?
    .0)
}

/// `d/dq sum_n (-1)^n t^(n^2) q^n`.
pub fn theta_sym_dq(t: &PrecFloat, q: &PrecFloat) -> Result<PrecFloat> {
    let d = t.digits().min(q.digits());
    Ok(sum_until_small(d, 1, |n| {
        let x = &(&t.powi(n * n) * &q.powi(n - 1)) * &PrecFloat::from_i64(n, d);
        if n % 2 == 0 {
            x
        } else {
            -x
        }
    })?
    .0)
}

/// Term `k` of the residue sum
/// `(1 - s^(2k+1)) / (1 + s^(2k+1)) s^(2k^2 + 2k)` with `s = sqrt2 - 1`.
pub fn theta_residue_term(k: i64, digits: usize) -> PrecFloat {
    let s = super::reference::t_c(digits);
    let one = PrecFloat::from_i64(1, digits);
    let u = s.powi(2 * k + 1);
    &(&(&one - &u) / &(&one + &u)) * &s.powi(2 * k * k + 2 * k)
}

/// `(1/sqrt2) sum_k theta_residue_term(k)` and the number of terms used.
pub fn theta_residue_sum(digits: usize) -> Result<(PrecFloat, i64)> {
    let (s, used) = sum_until_small(digits, 0, |k| theta_residue_term(k, digits))?;
    Ok((&s / &PrecFloat::from_i64(2, digits).sqrt(), used))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, PrecFloat};

    #[test]
    fn matches_a_direct_partial_sum() {
        let d = 30;
        let t = PrecFloat::from_rational(&rat(1, 3), d);
        let q = PrecFloat::from_rational(&rat(1, 2), d);
        // 1 - 1/6 + 1/324 - 1/157464 + 1/688747536 - ...
        let approx = 1.0 - 1.0 / 6.0 + 1.0 / 324.0 - 1.0 / 157_464.0 + 1.0 / 688_747_536.0;
        assert!((theta_sym_value(&t, &q).unwrap().to_f64() - approx).abs() < 1e-9);
        // -1/3 + 2 (1/81)(1/2) - 3 (1/3^9)(1/4) + 4 (1/3^16)(1/8) - ...
        let dq = -1.0 / 3.0 + 1.0 / 81.0 - 3.0 / 19_683.0 / 4.0 + 4.0 / 43_046_721.0 / 8.0;
        assert!((theta_sym_dq(&t, &q).unwrap().to_f64() - dq).abs() < 1e-8);
    }
}

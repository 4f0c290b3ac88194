//! Theta-like sums. Each term has valuation growing quadratically in its
//! index, so a sum known through `t^order` needs only finitely many terms.

use crate::error::{Error, Result};
use crate::exact::TSeries;
use crate::kernel::util::{ci, inv};

fn positive(z: &TSeries) -> Result<i64> {
    let v = z.valuation();
    if z.is_zero() || v <= 0 {
        return Err(Error::Invalid(format!(
            "theta sums need an argument of positive valuation, got t^{v}"
        )));
    }
    Ok(v)
}

/// `sum_n (-1)^n t^(n^2) q^n`; term `n` has valuation `n^2 + n v(q)`.
pub fn theta_sym(q: &TSeries, order: i64) -> Result<TSeries> {
    let v = positive(q)?;
    let mut acc = TSeries::zero(order);
    let mut power = ci(1);
    let mut n = 0i64;
    while n * n + n * v <= order {
        let term = power.shift(n * n);
        acc = if n % 2 == 0 { &acc + &term } else { &acc - &term };
        power = (&power * q).truncate(order);
        n += 1;
    }
    Ok(acc.truncate(order))
}

/// Number of terms [`theta_sym`] uses for an argument of valuation `v`.
pub fn theta_sym_terms(v: i64, order: i64) -> i64 {
    (0..).take_while(|n| n * n + n * v <= order).count() as i64
}

/// Term `n` of the asymmetric sum:
/// `(1 - t^(2n-1) z) / (1 + t^(2n-1) z) (z/t)^(2n) t^(2n^2)`.
pub fn theta_asym_term(z: &TSeries, n: i64, order: i64) -> Result<TSeries> {
    let u = z.shift(2 * n - 1);
    let ratio = &(&ci(1) - &u) * &inv(&(&ci(1) + &u), order)?;
    let zt = z.shift(-1).truncate(order);
    let mut power = ci(1);
    for _ in 0..2 * n {
        power = (&power * &zt).truncate(order);
    }
    Ok((&ratio * &power.shift(2 * n * n)).truncate(order))
}

/// `sum_n (1 - t^(2n-1) z)/(1 + t^(2n-1) z) (z/t)^(2n) t^(2n^2)`; term `n` has
/// valuation at least `2n^2 + 2n (v(z) - 1)`.
pub fn theta_asym(z: &TSeries, order: i64) -> Result<TSeries> {
    let v = positive(z)?;
    let mut acc = TSeries::zero(order);
    let mut n = 0i64;
    while 2 * n * n + 2 * n * (v - 1) <= order {
        acc = &acc + &theta_asym_term(z, n, order)?;
        n += 1;
    }
    Ok(acc.truncate(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::kernel::{qpq_series, QKind};

    #[test]
    fn symmetric_sum_low_order() {
        let q = qpq_series(QKind::QSym, &rat(1, 1), 12).unwrap();
        let s = theta_sym(&q, 7).unwrap();
        assert_eq!(s.dense(0, 7), [1, 0, 0, 0, -1, 0, -3, 0].map(|k| rat(k, 1)));
        // the n = 2 term enters at t^10
        assert_eq!(theta_sym_terms(3, 9), 2);
        assert_eq!(theta_sym_terms(3, 10), 3);
    }

    #[test]
    fn short_orders_keep_only_the_first_term() {
        let q = qpq_series(QKind::QAsym, &rat(1, 1), 20).unwrap();
        let first = theta_asym_term(&q, 0, 5).unwrap();
        assert_eq!(theta_asym(&q, 5).unwrap(), first);
        assert!(theta_sym(&TSeries::one(10), 10).is_err());
    }
}

//! Small series helpers shared by the kernel and closed-form code. Everything
//! lives at `x = y = t`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};

const EXACT: i64 = TSeries::EXACT;

/// The variable `t`, exactly.
pub fn t() -> TSeries {
    TSeries::t(EXACT)
}

/// `t^k`, exactly.
pub fn tp(k: i64) -> TSeries {
    TSeries::monomial(Rational::one(), k, EXACT)
}

pub fn c(r: &Rational) -> TSeries {
    TSeries::constant(r.clone(), EXACT)
}

pub fn ci(k: i64) -> TSeries {
    TSeries::constant(Rational::from_integer(k.into()), EXACT)
}

/// Exact polynomial `c0 + c1 t + ...`.
pub fn poly(coeffs: &[i64]) -> TSeries {
    TSeries::poly(coeffs, EXACT)
}

/// Inverse, truncating an exact polynomial to `order` first.
pub fn inv(s: &TSeries, order: i64) -> Result<TSeries> {
    if s.is_exact() && s.terms().count() > 1 {
        s.truncate(order).inv()
    } else {
        s.inv()
    }
}

pub fn div(a: &TSeries, b: &TSeries, order: i64) -> Result<TSeries> {
    Ok(a * &inv(b, order)?)
}

pub fn sqrt(s: &TSeries, order: i64) -> Result<TSeries> {
    if s.is_exact() && s.terms().count() > 1 {
        s.truncate(order).sqrt()
    } else {
        s.sqrt()
    }
}

/// `(1 - t^(2m)) / (1 - t^2)` as an exact Laurent polynomial, any integer `m`.
pub fn geom2(m: i64) -> TSeries {
    if m >= 0 {
        let mut acc = TSeries::zero(EXACT);
        for k in 0..m {
            acc = &acc + &tp(2 * k);
        }
        acc
    } else {
        -(geom2(-m).shift(2 * m))
    }
}

/// Runs `f` at increasing working orders until its result is known through
/// `target`, then truncates to `target`.
pub fn with_margin<F>(target: i64, mut f: F) -> Result<TSeries>
where
    F: FnMut(i64) -> Result<TSeries>,
{
    let mut margin = 8;
    let mut last_err = None;
    while margin <= 512 {
        match f(target + margin) {
            Ok(s) if s.order() >= target => return Ok(s.truncate(target)),
            Ok(s) => last_err = Some(Error::OrderUnderflow(s.order())),
            Err(e @ (Error::OrderUnderflow(_) | Error::Composition(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        margin *= 2;
    }
    Err(last_err.unwrap_or(Error::OrderUnderflow(target)))
}

/// [`with_margin`] for a function returning several series; all of them must
/// reach `target`.
pub fn with_margin_all<F>(target: i64, mut f: F) -> Result<Vec<TSeries>>
where
    F: FnMut(i64) -> Result<Vec<TSeries>>,
{
    let mut margin = 8;
    let mut last_err = None;
    while margin <= 512 {
        match f(target + margin) {
            Ok(v) => match v.iter().map(TSeries::order).min() {
                Some(o) if o < target => last_err = Some(Error::OrderUnderflow(o)),
                _ => return Ok(v.iter().map(|s| s.truncate(target)).collect()),
            },
            Err(e @ (Error::OrderUnderflow(_) | Error::Composition(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
        margin *= 2;
    }
    Err(last_err.unwrap_or(Error::OrderUnderflow(target)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_pieces() {
        assert_eq!(geom2(0), TSeries::zero(EXACT));
        assert_eq!(geom2(2), poly(&[1, 0, 1]));
        // (1 - t^-2) / (1 - t^2) = -t^-2
        assert_eq!(geom2(-1), -tp(-2));
    }

    #[test]
    fn margin_retries() {
        let s = with_margin(10, |n| {
            let q = TSeries::poly(&[0, 0, 0, 1, 1], n);
            q.div(&TSeries::poly(&[0, 0, 0, 1], n))
        })
        .unwrap();
        assert_eq!(s.order(), 10);
        assert_eq!(s.truncate(10), poly(&[1, 1]).truncate(10));
    }
}

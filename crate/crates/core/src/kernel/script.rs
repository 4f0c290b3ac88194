use super::check::IdentityCheck;
use super::iterate::{beta1_asym, gamma_composed};
use super::qpq::q_asym_series;
use super::system::KernelSystem;
use super::util::{inv, t, with_margin_all};
use crate::error::{Error, Result};
use crate::exact::{Rational, TSeries};

/// The coefficients of the asymmetric iteration
/// `H(gamma_n, y gamma_n) = B_n + C_n H(gamma_(n+1), y gamma_(n+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptCoeffs {
    pub n: i64,
    pub x: TSeries,
    pub y: TSeries,
    pub z: TSeries,
    pub a: TSeries,
    /// `X_n + Y_n Z_n` from the kernel coefficients.
    pub b: TSeries,
    /// `Y_n A_n` from the kernel coefficients.
    pub c: TSeries,
    /// `(x + y^(2n-2) Q)(x - y^2n Q) / x^2`.
    pub b_simplified: TSeries,
    /// `(gamma_(n+1)/gamma_n) y^4n Q^2 / x^2`.
    pub c_simplified: TSeries,
}

/// Everything the checks need at working order `m`.
struct Pieces {
    g: TSeries,
    g1: TSeries,
    bg: TSeries,
    q: TSeries,
}

fn pieces(n: i64, a: &Rational, m: i64) -> Result<Pieces> {
    let a0 = TSeries::constant(a.clone(), m);
    let g = gamma_composed(n, &a0, m)?;
    let bg = beta1_asym(&g, m)?;
    let g1 = gamma_composed(1, &g, m)?;
    let q = q_asym_series(&a0, m)?;
    Ok(Pieces { g, g1, bg, q })
}

fn raw(n: i64, p: &Pieces, m: i64) -> Result<Vec<TSeries>> {
    let sys = KernelSystem::asymmetric(1);
    let at_n = sys.eval(&p.g, &p.bg);
    let at_n1 = sys.eval(&p.g1, &p.bg);
    let iy = inv(&at_n.y, m)?;
    let iz = inv(&at_n1.z, m)?;
    let xx = -(&at_n.x * &iy);
    let yy = &at_n.z * &iy;
    let zz = &at_n1.x * &iz;
    let aa = &at_n1.y * &iz;
    let b = &xx + &(&yy * &zz);
    let c = &yy * &aa;
    // x = y = t, so 1/x^2 is a shift by -2.
    let q = &p.q;
    let lead = &t() + &q.shift(2 * n - 2);
    let b_s = (&lead * &(&t() - &q.shift(2 * n))).shift(-2);
    let ratio = &p.g1 * &inv(&p.g, m)?;
    let c_s = (&ratio * &(q * q)).shift(4 * n - 2);
    Ok(vec![xx, yy, zz, aa, b, c, b_s, c_s])
}

/// `(X_n, Y_n, Z_n, A_n, B_n, C_n)` for the asymmetric `p = 1` model, together
/// with the simplified forms of `B_n` and `C_n`.
pub fn script_coeffs(n: i64, a: &Rational, order: i64) -> Result<ScriptCoeffs> {
    if !(0..=6).contains(&n) {
        return Err(Error::Budget(format!(
            "script coefficients need 0 <= n <= 6, got {n}"
        )));
    }
    let v = with_margin_all(order, |m| raw(n, &pieces(n, a, m)?, m))?;
    let mut it = v.into_iter();
    let mut next = || it.next().expect("eight series");
    Ok(ScriptCoeffs {
        n,
        x: next(),
        y: next(),
        z: next(),
        a: next(),
        b: next(),
        c: next(),
        b_simplified: next(),
        c_simplified: next(),
    })
}

/// Each entry is `(identity, lhs - rhs)` at working order `m`.
fn differences(n: i64, p: &Pieces, m: i64) -> Result<Vec<(&'static str, TSeries)>> {
    let y = t();
    let q = &p.q;
    let (ig, ig1, ibg) = (inv(&p.g, m)?, inv(&p.g1, m)?, inv(&p.bg, m)?);
    let xq = |k: i64| &y + &q.shift(k);
    let e2n = xq(2 * n);
    let e2n2 = xq(2 * n - 2);
    let iq = inv(q, m)?;
    let r1 = &(&p.bg - &(&y * &p.g)) * &inv(&(&p.g - &(&y * &p.bg)), m)?;
    let r2 = &(&p.g1 - &(&y * &p.bg)) * &inv(&(&p.bg - &(&y * &p.g1)), m)?;
    let s1 = &(&p.bg - &(&y * &p.g)) * &(&ig * &ig);
    let s2 = &(&p.g1 - &(&y * &p.bg)) * &(&ig * &ig1);
    Ok(vec![
        (
            "1/gamma_n - y/beta(gamma_n) = x + y^2n Q",
            &(&ig - &ibg.shift(1)) - &e2n,
        ),
        (
            "1/beta(gamma_n) - y/gamma_n = x (x + y^2n Q) / (y^(2n-1) Q)",
            &(&ibg - &ig.shift(1)) - &(&e2n * &iq).shift(2 - 2 * n),
        ),
        (
            "1/beta(gamma_n) - y/gamma_(n+1) = y (x + y^2n Q)",
            &(&ibg - &ig1.shift(1)) - &e2n.shift(1),
        ),
        (
            "1/gamma_(n+1) - y/beta(gamma_n) = x (x + y^2n Q) / (y^2n Q)",
            &(&ig1 - &ibg.shift(1)) - &(&e2n * &iq).shift(1 - 2 * n),
        ),
        (
            "(beta - y gamma_n)/(gamma_n - y beta) = y^(2n-1) Q / x",
            &r1 - &q.shift(2 * n - 2),
        ),
        (
            "(gamma_(n+1) - y beta)/(beta - y gamma_(n+1)) = y^(2n+1) Q / x",
            &r2 - &q.shift(2 * n),
        ),
        (
            "(beta - y gamma_n)/gamma_n^2 = y (x + y^(2n-2) Q)",
            &s1 - &e2n2.shift(1),
        ),
        (
            "(gamma_(n+1) - y beta)/(gamma_n gamma_(n+1)) = y^2 (x + y^(2n-2) Q)",
            &s2 - &e2n2.shift(2),
        ),
    ])
}

/// Raw against simplified `B_n`, `C_n`, plus the auxiliary identities used to
/// simplify them.
pub fn script_checks(n: i64, a: &Rational, order: i64) -> Result<Vec<IdentityCheck>> {
    let params = format!("n={n}, a={a}");
    let s = script_coeffs(n, a, order)?;
    let mut out = vec![
        IdentityCheck::compare("B_n raw = simplified", &params, &s.b, &s.b_simplified, order)?,
        IdentityCheck::compare("C_n raw = simplified", &params, &s.c, &s.c_simplified, order)?,
    ];
    let mut names = Vec::new();
    let diffs = with_margin_all(order, |m| {
        let d = differences(n, &pieces(n, a, m)?, m)?;
        names = d.iter().map(|(k, _)| *k).collect();
        Ok(d.into_iter().map(|(_, v)| v).collect())
    })?;
    for (name, d) in names.into_iter().zip(diffs) {
        out.push(IdentityCheck::vanishes(name, &params, &d, order)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn b0_forms_agree() {
        let s = script_coeffs(0, &rat(1, 2), 25).unwrap();
        assert_eq!(s.b, s.b_simplified);
        assert_eq!(s.c, s.c_simplified);
    }

    #[test]
    fn auxiliary_identities() {
        for n in 0..=2 {
            for c in script_checks(n, &rat(1, 1), 20).unwrap() {
                assert!(c.holds(), "{c:?}");
            }
        }
    }
}

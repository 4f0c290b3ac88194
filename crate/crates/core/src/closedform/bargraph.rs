use crate::error::{Error, Result};
use crate::exact::TSeries;
use crate::kernel::util::{ci, inv, t};

/// The pair `(h, g_p)` solving `h = t^(p+1) (1+h)^p (1 + h/(1 - t^2(1+h)))`,
/// `g_p = h / (1 - t^2 (1+h))`, with the residual of the first equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bargraph {
    pub p: u32,
    pub h: TSeries,
    pub g: TSeries,
    pub residual: TSeries,
}

fn rhs(p: u32, h: &TSeries, order: i64) -> Result<TSeries> {
    let one_h = &ci(1) + h;
    let den = &ci(1) - &(&(&t() * &t()) * &one_h);
    let inner = &ci(1) + &(h * &inv(&den.truncate(order), order)?);
    Ok((&one_h.pow(p) * &inner).shift(p as i64 + 1).truncate(order))
}

/// Solves the fixed point from `h = 0`; every pass fixes at least one more
/// coefficient, so `order + 2` passes suffice.
pub fn gf_bargraph(p: u32, order: i64) -> Result<Bargraph> {
    if p == 0 {
        return Err(Error::Invalid("p must be positive".into()));
    }
    let mut h = TSeries::zero(order);
    for _ in 0..order + 2 {
        let next = rhs(p, &h, order)?;
        if next == h {
            let one_h = &ci(1) + &h;
            let den = &ci(1) - &(&(&t() * &t()) * &one_h);
            let g = (&h * &inv(&den.truncate(order), order)?).truncate(order);
            let residual = (&h - &rhs(p, &h, order)?).truncate(order);
            return Ok(Bargraph { p, h, g, residual });
        }
        h = next;
    }
    Err(Error::NoConvergence(format!(
        "bargraph fixed point for p={p} did not settle within {} passes",
        order + 2
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point() {
        let b = gf_bargraph(1, 40).unwrap();
        assert!(b.residual.is_zero());
        assert!(b.h.valuation() >= 2);
        let b3 = gf_bargraph(3, 30).unwrap();
        assert!(b3.residual.is_zero());
        assert_eq!(b3.h.valuation(), 4);
    }
}

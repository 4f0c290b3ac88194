use std::fmt;

use serde::{Deserialize, Serialize};

use super::util::{ci, t};
use crate::enumerate::{ModelKind, WedgeModel};
use crate::error::{Error, Result};
use crate::exact::{rat, TSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wedge {
    Symmetric,
    Asymmetric,
}

impl fmt::Display for Wedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Wedge::Symmetric => "symmetric",
            Wedge::Asymmetric => "asymmetric",
        })
    }
}

/// Coefficients of the kernel form `K f(a,b) = X + Y f(a,ya) + Z f(yb,b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KernelSystem {
    pub wedge: Wedge,
    pub p: u32,
}

/// `(K, X, Y, Z)` evaluated at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelValues {
    pub k: TSeries,
    pub x: TSeries,
    pub y: TSeries,
    pub z: TSeries,
}

impl KernelSystem {
    pub fn new(wedge: Wedge, p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::Invalid("p must be a positive integer".into()));
        }
        Ok(Self { wedge, p })
    }

    pub fn symmetric(p: u32) -> Self {
        Self::new(Wedge::Symmetric, p).expect("p > 0")
    }

    pub fn asymmetric(p: u32) -> Self {
        Self::new(Wedge::Asymmetric, p).expect("p > 0")
    }

    pub fn walk_model(&self) -> WedgeModel {
        match self.wedge {
            Wedge::Symmetric => WedgeModel::new(ModelKind::Symmetric, self.p),
            Wedge::Asymmetric => WedgeModel::new(ModelKind::Asymmetric, self.p),
        }
        .expect("p > 0")
    }

    /// `x (ab)^p` or `x a^p`: the weight of a horizontal step.
    pub fn step_weight(&self, a: &TSeries, b: &TSeries) -> TSeries {
        let p = self.p;
        match self.wedge {
            Wedge::Symmetric => &t() * &(a * b).pow(p),
            Wedge::Asymmetric => &t() * &a.pow(p),
        }
    }

    pub fn eval(&self, a: &TSeries, b: &TSeries) -> KernelValues {
        let y = t();
        let w = self.step_weight(a, b);
        let bya = b - &(&y * a);
        let ayb = a - &(&y * b);
        let x = &bya * &ayb;
        let quad = &(&(a * a) + &(b * b)) - &(&(&y * a) * b).scale(&rat(2, 1));
        let k = &(&x * &(&ci(1) - &w)) - &(&(&y * &w) * &quad);
        let yw = &y * &w;
        KernelValues {
            k,
            y: -(&(&yw * a) * &ayb),
            z: -(&(&yw * b) * &bya),
            x,
        }
    }

    /// `(dK/da, dK/db)` at a point, used by the Newton root finder.
    pub fn kernel_gradient(&self, a: &TSeries, b: &TSeries) -> (TSeries, TSeries) {
        let y = t();
        let p = self.p as i64;
        let bya = b - &(&y * a);
        let ayb = a - &(&y * b);
        let prod = &bya * &ayb;
        let quad = &(&(a * a) + &(b * b)) - &(&(&y * a) * b).scale(&rat(2, 1));
        let w = self.step_weight(a, b);
        let one_w = &ci(1) - &w;
        // d(prod)/da and d(prod)/db
        let dprod_a = &bya - &(&y * &ayb);
        let dprod_b = &ayb - &(&y * &bya);
        let dquad_a = (a - &(&y * b)).scale(&rat(2, 1));
        let dquad_b = (b - &(&y * a)).scale(&rat(2, 1));
        // derivatives of the step weight
        let pm1 = |s: &TSeries| if p == 1 { ci(1) } else { s.pow((p - 1) as u32) };
        let (dw_a, dw_b) = match self.wedge {
            Wedge::Symmetric => {
                let base = &(&t() * &pm1(&(a * b))).scale(&rat(p, 1));
                (base * b, base * a)
            }
            Wedge::Asymmetric => ((&t() * &pm1(a)).scale(&rat(p, 1)), TSeries::zero(TSeries::EXACT)),
        };
        let grad = |dprod: &TSeries, dw: &TSeries, dquad: &TSeries| {
            &(&(dprod * &one_w) - &(&prod * dw)) - &(&y * &(&(dw * &quad) + &(&w * dquad)))
        };
        (grad(&dprod_a, &dw_a, &dquad_a), grad(&dprod_b, &dw_b, &dquad_b))
    }
}

/// The `p = 1` symmetric kernel in its expanded printed form
/// `(xy^2a^2 - xa^2 - y) b^2 + (1 + y^2) ab - y a^2`.
pub fn kernel_p1_expanded(a: &TSeries, b: &TSeries) -> TSeries {
    let y = t();
    let a2 = a * a;
    let lead = &(&(&(&y * &y) * &(&y * &a2)) - &(&y * &a2)) - &y;
    let mid = &(&ci(1) + &(&y * &y)) * &(a * b);
    &(&(&lead * &(b * b)) + &mid) - &(&y * &a2)
}

/// Evaluates `(K, X, Y, Z)` at rational or series arguments.
pub fn kernel_eval(sys: &KernelSystem, a: &TSeries, b: &TSeries) -> KernelValues {
    sys.eval(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::kernel::util::c;

    #[test]
    fn printed_forms_agree_at_p1() {
        let sys = KernelSystem::symmetric(1);
        for (a, b) in [
            (rat(1, 1), rat(1, 1)),
            (rat(2, 3), rat(1, 2)),
            (rat(3, 5), rat(2, 1)),
        ] {
            let (a, b) = (c(&a), c(&b));
            assert_eq!(sys.eval(&a, &b).k, kernel_p1_expanded(&a, &b));
        }
    }

    #[test]
    fn symmetric_kernel_is_symmetric() {
        for p in 1..=3 {
            let sys = KernelSystem::symmetric(p);
            let (a, b) = (c(&rat(2, 3)), c(&rat(1, 2)));
            let u = sys.eval(&a, &b);
            let v = sys.eval(&b, &a);
            assert_eq!(u.k, v.k);
            assert_eq!(u.x, v.x);
            assert_eq!(u.y, v.z);
        }
    }

    #[test]
    fn x_vanishes_on_the_diagonal_at_y1() {
        // X(a,a) at y = 1 is (a - a)^2; evaluate the exact polynomial at t = 1.
        let sys = KernelSystem::symmetric(2);
        let a = c(&rat(3, 5));
        assert_eq!(sys.eval(&a, &a).x.eval(&rat(1, 1)).unwrap(), rat(0, 1));
    }

    #[test]
    fn asymmetric_kernel_lacks_the_swap_symmetry() {
        let sys = KernelSystem::asymmetric(1);
        let (a, b) = (c(&rat(1, 1)), c(&rat(2, 1)));
        let u = sys.eval(&a, &b);
        let v = sys.eval(&b, &a);
        let third = rat(1, 3);
        assert_ne!(u.y.eval(&third).unwrap(), v.z.eval(&third).unwrap());
    }
}

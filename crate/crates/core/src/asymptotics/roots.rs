//! Zeros of `1 + Q t^k` and `1 + P t^k` near the origin.
//!
//! `Q t^k = -1` forces `1 + (1-t-t^2-t^3) t^k + t^(2k+4) = 0` and
//! `P t^k = -1` forces `1 + (1-3t^2) t^(k-1) + t^(2k+2) = 0`. Both
//! polynomial families are solved twice: by companion-matrix eigenvalues
//! and by simultaneous (Weierstrass) iteration. Both root sets are then
//! polished by Newton's method in `PrecFloat`.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use serde::Serialize;

use super::reference::t_c;
use crate::error::{Error, Result};
use crate::exact::PrecFloat;

/// Largest `k` accepted by [`root_audit`].
pub const ROOT_AUDIT_MAX_K: i64 = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    #[serde(rename = "Q-type")]
    Q,
    #[serde(rename = "P-type")]
    P,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Q => "Q-type",
            Family::P => "P-type",
        })
    }
}

/// Integer coefficients of the family polynomial for `k`, lowest degree
/// first, after clearing negative powers and common factors of `t`.
pub fn family_polynomial(family: Family, k: i64) -> Vec<i64> {
    let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
    let mut add = |e: i64, c: i64| *terms.entry(e).or_insert(0) += c;
    add(0, 1);
    match family {
        Family::Q => {
            for (i, c) in [1, -1, -1, -1].into_iter().enumerate() {
                add(k + i as i64, c);
            }
            add(2 * k + 4, 1);
        }
        Family::P => {
            add(k - 1, 1);
            add(k + 1, -3);
            add(2 * k + 2, 1);
        }
    }
    terms.retain(|_, c| *c != 0);
    let lo = *terms.keys().next().unwrap_or(&0);
    let hi = *terms.keys().last().unwrap_or(&0);
    (lo..=hi).map(|e| *terms.get(&e).unwrap_or(&0)).collect()
}

fn companion_roots(c: &[i64]) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[n] as f64;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -(c[i] as f64) / lead;
    }
    // The shifted QR iteration cycles on many of these companion matrices; a
    // fixed orthogonal similarity moves it off the cycle.
    let mut x = 0x9e37_79b9_7f4a_7c15u64;
    let r = DMatrix::<f64>::from_fn(n, n, |_, _| {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        (x % 10_000) as f64 / 10_000.0 - 0.5
    });
    let q = r.qr().q();
    let m = q.transpose() * m * q;
    let schur = Schur::try_new(m, f64::EPSILON, 100_000)
        .ok_or_else(|| Error::NoConvergence(format!("Schur iteration for a degree {n} companion matrix")))?;
    Ok(schur.complex_eigenvalues().iter().copied().collect())
}

fn horner(c: &[i64], z: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a as f64)
}

fn weierstrass_roots(c: &[i64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n] as f64;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|i| seed.powu(i as u32) * 1.2).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(lead, 0.0);
            for j in 0..n {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            let step = horner(c, z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    z
}

#[derive(Clone, Debug)]
struct Cx {
    re: PrecFloat,
    im: PrecFloat,
}

impl Cx {
    fn new(z: Complex64, d: usize) -> Self {
        Self {
            re: PrecFloat::from_f64(z.re, d),
            im: PrecFloat::from_f64(z.im, d),
        }
    }
    fn add(&self, o: &Self) -> Self {
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
    fn div(&self, o: &Self) -> Self {
        let den = &(&o.re * &o.re) + &(&o.im * &o.im);
        Self {
            re: &(&(&self.re * &o.re) + &(&self.im * &o.im)) / &den,
            im: &(&(&self.im * &o.re) - &(&self.re * &o.im)) / &den,
        }
    }
    fn norm(&self) -> PrecFloat {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }
    fn real(x: i64, d: usize) -> Self {
        Self {
            re: PrecFloat::from_i64(x, d),
            im: PrecFloat::zero(d),
        }
    }
}

/// Value and derivative at `z`.
fn eval(c: &[i64], z: &Cx, d: usize) -> (Cx, Cx) {
    let mut p = Cx::real(0, d);
    let mut dp = Cx::real(0, d);
    for &a in c.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z).add(&Cx::real(a, d));
    }
    (p, dp)
}

fn polish(c: &[i64], z0: Complex64, d: usize) -> (Cx, PrecFloat) {
    let mut z = Cx::new(z0, d);
    let tiny = PrecFloat::from_i64(10, d).powi(-(d as i64));
    for _ in 0..200 {
        let (p, dp) = eval(c, &z, d);
        if dp.norm() <= tiny {
            break;
        }
        let step = p.div(&dp);
        z = z.sub(&step);
        if step.norm() <= &tiny * &z.norm() {
            break;
        }
    }
    let residual = eval(c, &z, d).0.norm();
    (z, residual)
}

/// One root at high precision.
#[derive(Clone, Debug, Serialize)]
pub struct Root {
    pub re: PrecFloat,
    pub im: PrecFloat,
    pub modulus: PrecFloat,
    /// `|polynomial(root)|` after polishing.
    pub residual: PrecFloat,
}

/// A root inside `|t| < 1/2`.
#[derive(Clone, Debug, Serialize)]
pub struct InDisk {
    pub family: Family,
    pub k: i64,
    pub root: Root,
    /// The root of modulus `sqrt2 - 1` of the P-type family at `k = 0`,
    /// where the other branch of `P` equals `+1`.
    pub other_branch: bool,
}

/// Roots of one family member.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyRoots {
    pub family: Family,
    pub k: i64,
    pub degree: usize,
    pub roots: Vec<Root>,
    pub min_modulus: Option<PrecFloat>,
    /// Largest distance between matched companion-matrix and Weierstrass
    /// roots after polishing.
    pub strategy_gap: PrecFloat,
}

/// All zeros of both families for `k` in `k_range`.
#[derive(Clone, Debug, Serialize)]
pub struct RootAudit {
    pub k_range: (i64, i64),
    pub digits: usize,
    pub families: Vec<FamilyRoots>,
    pub in_disk: Vec<InDisk>,
    pub max_residual: PrecFloat,
    pub strategies_agree: bool,
}

impl RootAudit {
    /// Roots inside the disk that are not the documented exception.
    pub fn undocumented(&self) -> Vec<&InDisk> {
        self.in_disk.iter().filter(|r| !r.other_branch).collect()
    }

    pub fn passed(&self) -> bool {
        self.undocumented().is_empty() && self.strategies_agree
    }
}

fn solve(family: Family, k: i64, d: usize) -> Result<FamilyRoots> {
    let c = family_polynomial(family, k);
    let degree = c.len() - 1;
    let first: Vec<(Cx, PrecFloat)> = companion_roots(&c)?
        .into_iter()
        .map(|z| polish(&c, z, d))
        .collect();
    let second: Vec<Cx> = weierstrass_roots(&c)
        .into_iter()
        .map(|z| polish(&c, z, d).0)
        .collect();
    let mut gap = PrecFloat::zero(d);
    let mut used = vec![false; second.len()];
    for (z, _) in &first {
        let best = second
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, w)| (j, z.sub(w).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
            .ok_or_else(|| Error::NoConvergence(format!("{family} k={k}: root counts differ")))?;
        used[best.0] = true;
        if best.1 > gap {
            gap = best.1;
        }
    }
    let roots: Vec<Root> = first
        .into_iter()
        .map(|(z, residual)| Root {
            modulus: z.norm(),
            re: z.re,
            im: z.im,
            residual,
        })
        .collect();
    let min_modulus = roots
        .iter()
        .map(|r| r.modulus.clone())
        .min_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    Ok(FamilyRoots {
        family,
        k,
        degree,
        roots,
        min_modulus,
        strategy_gap: gap,
    })
}

/// Finds every zero of both families for `-1 <= k <= k_max` at `digits`
/// and lists those inside `|t| < 1/2`.
pub fn root_audit(k_max: i64, digits: usize) -> Result<RootAudit> {
    if !(-1..=ROOT_AUDIT_MAX_K).contains(&k_max) {
        return Err(Error::Budget(format!(
            "k_max must lie in -1..={ROOT_AUDIT_MAX_K}, got {k_max}"
        )));
    }
    let d = digits.max(20);
    let half = PrecFloat::from_rational(&crate::exact::rat(1, 2), d);
    let sqrt2m1 = t_c(d);
    let loose = PrecFloat::from_i64(10, d).powi(-(d as i64) / 2);
    let agree_tol = PrecFloat::from_i64(10, d).powi(-(d as i64) / 3);
    let mut families = Vec::new();
    let mut in_disk = Vec::new();
    let mut max_residual = PrecFloat::zero(d);
    let mut agree = true;
    for family in [Family::Q, Family::P] {
        for k in -1..=k_max {
            let f = solve(family, k, d)?;
            agree &= f.strategy_gap <= agree_tol;
            for r in &f.roots {
                if r.residual > max_residual {
                    max_residual = r.residual.clone();
                }
                if r.modulus < half {
                    let other_branch =
                        family == Family::P && k == 0 && (&r.modulus - &sqrt2m1).abs() <= loose;
                    in_disk.push(InDisk {
                        family,
                        k,
                        root: r.clone(),
                        other_branch,
                    });
                }
            }
            families.push(f);
        }
    }
    Ok(RootAudit {
        k_range: (-1, k_max),
        digits: d,
        families,
        in_disk,
        max_residual,
        strategies_agree: agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        // k = -1: 1 + t^-1 (1 - t - t^2 - t^3) + t^2 = t^-1 (1 - t^2)
        assert_eq!(family_polynomial(Family::Q, -1), [1, 0, -1]);
        // k = 0 of P: t^-1 (1 + t - 3t^2 + t^3)
        assert_eq!(family_polynomial(Family::P, 0), [1, 1, -3, 1]);
    }

    #[test]
    fn p_family_k0_root_is_one_minus_sqrt2() {
        let a = root_audit(2, 30).unwrap();
        assert_eq!(a.in_disk.len(), 1);
        let r = &a.in_disk[0];
        assert!(r.other_branch && r.family == Family::P && r.k == 0);
        let expected = -t_c(30);
        assert!(r
            .root
            .re
            .approx_eq(&expected, &PrecFloat::parse("1e-25", 30).unwrap()));
        assert!(a.passed());
    }
}

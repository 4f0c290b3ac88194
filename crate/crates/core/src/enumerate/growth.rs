use num_bigint::BigUint;
use serde::Serialize;

use super::dp::{count_walks, CountTable};
use super::model::WedgeModel;
use crate::error::{Error, Result};
use crate::exact::PrecFloat;

/// Outcome of a family of inequality checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub checked: usize,
    /// Human-readable description of the first failing instance.
    pub first_violation: Option<String>,
}

impl InequalityReport {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checked: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.first_violation.is_none() {
            self.first_violation = Some(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// `c_n c_m <= c_(n+m+1)` for all `n <= n_max`, `m <= m_max`, plus
/// monotonicity of the counts.
pub fn growth_inequalities(model: WedgeModel, n_max: usize, m_max: usize) -> Result<InequalityReport> {
    let t = count_walks(model, n_max + m_max + 1)?;
    let c = &t.counts;
    let mut r = InequalityReport::new(format!("super-multiplicativity ({model})"));
    for n in 0..=n_max {
        for m in 0..=m_max {
            r.record(&c[n] * &c[m] <= c[n + m + 1], || {
                format!(
                    "c_{n} * c_{m} = {} > c_{} = {}",
                    &c[n] * &c[m],
                    n + m + 1,
                    c[n + m + 1]
                )
            });
        }
    }
    for n in 0..n_max + m_max + 1 {
        r.record(c[n] <= c[n + 1], || {
            format!("c_{} = {} < c_{n} = {}", n + 1, c[n + 1], c[n])
        });
    }
    Ok(r)
}

/// `w_(n,p) <= v_(n,p) <= c_n` for `n <= n_max`.
pub fn sandwich(p: u32, n_max: usize) -> Result<InequalityReport> {
    let w = count_walks(WedgeModel::asymmetric(p), n_max)?;
    let v = count_walks(WedgeModel::symmetric(p), n_max)?;
    let c = count_walks(WedgeModel::free(), n_max)?;
    let mut r = InequalityReport::new(format!("sandwich w <= v <= c (p={p})"));
    for n in 0..=n_max {
        let (wn, vn, cn) = (w.get(n), v.get(n), c.get(n));
        r.record(wn <= vn && vn <= cn, || format!("n={n}: w={wn}, v={vn}, c={cn}"));
    }
    Ok(r)
}

/// `v_(n,p) <= v_(n,q)` for `p < q`, both wedges.
pub fn wedge_containment(p: u32, q: u32, n_max: usize) -> Result<InequalityReport> {
    if p >= q {
        return Err(Error::Invalid(format!("need p < q, got p={p}, q={q}")));
    }
    let mut r = InequalityReport::new(format!("containment p={p} within q={q}"));
    for (small, big) in [
        (WedgeModel::symmetric(p), WedgeModel::symmetric(q)),
        (WedgeModel::asymmetric(p), WedgeModel::asymmetric(q)),
    ] {
        let a = count_walks(small, n_max)?;
        let b = count_walks(big, n_max)?;
        for n in 0..=n_max {
            r.record(a.get(n) <= b.get(n), || format!("{small}: n={n}"));
        }
    }
    Ok(r)
}

/// `b_n^N <= w_(np + nN + N, p)` for `1 <= n <= n_max`, `1 <= N <= big_n_max`,
/// where `b_n` counts quarter-plane walks ending on `Y = 0`.
pub fn lemma_concatenation(p: u32, n_max: usize, big_n_max: usize) -> Result<InequalityReport> {
    let pp = p as usize;
    let longest = pp * n_max + n_max * big_n_max + big_n_max;
    let b = count_walks(WedgeModel::quarter_endline(), n_max)?;
    let w = count_walks(WedgeModel::asymmetric(p), longest)?;
    let mut r = InequalityReport::new(format!("b_n^N <= w_(np+nN+N) (p={p})"));
    for n in 1..=n_max {
        for big_n in 1..=big_n_max {
            let lhs: BigUint = b.get(n).pow(big_n as u32);
            let len = pp * n + n * big_n + big_n;
            r.record(lhs <= *w.get(len), || {
                format!("n={n}, N={big_n}: b^N = {lhs} > w_{len} = {}", w.get(len))
            });
        }
    }
    Ok(r)
}

/// One row of [`growth_estimate`].
#[derive(Clone, Debug)]
pub struct GrowthPoint {
    pub n: usize,
    /// `c_(n+1) / c_n`.
    pub ratio: PrecFloat,
    /// `c_n^(1/n)`.
    pub root: PrecFloat,
}

/// Ratio and root estimates of the growth constant for `n >= 1`.
pub fn growth_estimate(table: &CountTable, digits: usize) -> Result<Vec<GrowthPoint>> {
    if table.counts.len() < 10 {
        return Err(Error::Invalid("growth estimates need at least 10 terms".into()));
    }
    let c: Vec<PrecFloat> = table
        .counts
        .iter()
        .map(|x| PrecFloat::from_bigint(&x.clone().into(), digits))
        .collect();
    let mut out = Vec::new();
    for n in 1..c.len() - 1 {
        let ratio = &c[n + 1] / &c[n];
        let inv_n = PrecFloat::from_i64(n as i64, digits).recip();
        let root = (&c[n].ln() * &inv_n).exp();
        out.push(GrowthPoint { n, ratio, root });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        assert!(growth_inequalities(WedgeModel::symmetric(1), 2, 2)
            .unwrap()
            .passed());
        assert!(lemma_concatenation(1, 2, 1).unwrap().passed());
        assert!(sandwich(1, 20).unwrap().passed());
        assert!(wedge_containment(1, 2, 20).unwrap().passed());
    }

    #[test]
    fn free_ratio() {
        let t = count_walks(WedgeModel::free(), 12).unwrap();
        let g = growth_estimate(&t, 30).unwrap();
        assert_eq!(g[3].n, 4);
        assert_eq!(g[3].ratio.to_decimal_string(5), "2.4146");
    }
}

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::dp::WedgeDp;
use super::model::{ModelKind, WedgeModel};
use crate::error::{Error, Result};

/// Largest length accepted by [`weighted_gf`].
pub const WEIGHTED_MAX_N: usize = 60;

/// Endpoint-weighted generating function of the walks that are empty or end
/// with a horizontal step: `entries[(n, i, j)]` is the coefficient of
/// `t^n a^i b^j`.
///
/// For the symmetric wedge `i = pX - Y` and `j = pX + Y`; for the asymmetric
/// wedge `i = pX - Y` and `j = Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSeries {
    pub model: WedgeModel,
    pub order: usize,
    pub entries: BTreeMap<(u32, u32, u32), BigUint>,
}

/// Exponents `(i, j)` of `a` and `b` for an endpoint.
pub fn endpoint_exponents(model: &WedgeModel, x: i64, y: i64) -> (u32, u32) {
    let p = model.p as i64;
    let i = p * x - y;
    let j = match model.kind {
        ModelKind::Symmetric => p * x + y,
        _ => y,
    };
    (i as u32, j as u32)
}

pub fn weighted_gf(model: WedgeModel, order: usize) -> Result<WeightedSeries> {
    if !model.is_wedge() {
        return Err(Error::Unsupported(format!(
            "weighted series exist only for the wedges, not {model}"
        )));
    }
    if order > WEIGHTED_MAX_N {
        return Err(Error::Budget(format!(
            "weighted series are limited to N <= {WEIGHTED_MAX_N}, got {order}"
        )));
    }
    let mut dp = WedgeDp::new(model)?;
    let mut entries = BTreeMap::new();
    for n in 0..=order {
        if n > 0 {
            dp.advance()?;
        }
        for (x, y, c) in dp.horizontal_endpoints() {
            let (i, j) = endpoint_exponents(&model, x, y);
            entries.insert((n as u32, i, j), c.clone());
        }
    }
    Ok(WeightedSeries {
        model,
        order,
        entries,
    })
}

impl WeightedSeries {
    pub fn get(&self, n: u32, i: u32, j: u32) -> BigUint {
        self.entries.get(&(n, i, j)).cloned().unwrap_or_default()
    }

    /// `a = b = 1` specialisation: counts of horizontal-ending walks by length.
    pub fn collapse(&self) -> Vec<BigUint> {
        let mut out = vec![BigUint::default(); self.order + 1];
        for (&(n, _, _), c) in &self.entries {
            out[n as usize] += c;
        }
        out
    }

    /// Sparse JSON triples `[[n, i, j, "count"], ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let wire = WeightedJson {
            model: self.model,
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|(&(n, i, j), c)| (n, i, j, c.to_string()))
                .collect(),
        };
        serde_json::to_value(wire).expect("plain data serialises")
    }
}

#[derive(Serialize, Deserialize)]
struct WeightedJson {
    model: WedgeModel,
    order: usize,
    entries: Vec<(u32, u32, u32, String)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_east_step() {
        let w = weighted_gf(WedgeModel::symmetric(1), 3).unwrap();
        assert_eq!(w.get(1, 1, 1), 1u32.into());
        assert_eq!(w.get(0, 0, 0), 1u32.into());
        assert_eq!(w.collapse()[3], 3u32.into());
        let a = weighted_gf(WedgeModel::asymmetric(1), 0).unwrap();
        assert_eq!(a.get(0, 0, 0), 1u32.into());
        assert!(weighted_gf(WedgeModel::halfplane(), 3).is_err());
    }

    #[test]
    fn json_triples() {
        let w = weighted_gf(WedgeModel::asymmetric(1), 1).unwrap();
        let v = w.to_json();
        assert_eq!(v["entries"][1], serde_json::json!([1, 1, 0, "1"]));
    }
}

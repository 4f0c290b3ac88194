use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::model::{ModelKind, WedgeModel};
use crate::error::{Error, Result};

/// Largest number of live `(position, last step)` cells a single DP run may
/// hold before giving up with [`Error::Budget`].
pub const STATE_BUDGET: usize = 60_000_000;

// Slots within a cell. The empty walk is stored in the horizontal slot: both
// allow every next step.
const H: usize = 0;
const U: usize = 1;
const D: usize = 2;

/// Exact counts of walks of length `0..=n_max` in one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub model: WedgeModel,
    #[serde(with = "biguint_strings")]
    pub counts: Vec<BigUint>,
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.counts[n]
    }

    /// `length,count` rows with exact decimal integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            let _ = writeln!(out, "{n},{c}");
        }
        out
    }
}

pub(crate) mod biguint_strings {
    use num_bigint::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|c| c.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| D::Error::custom(format!("bad integer {s:?}")))
            })
            .collect()
    }
}

/// Counts every walk family by dynamic programming over the length.
pub fn count_walks(model: WedgeModel, n_max: usize) -> Result<CountTable> {
    let mut counts = Vec::with_capacity(n_max + 1);
    if model.is_wedge() {
        let mut dp = WedgeDp::new(model)?;
        counts.push(dp.total());
        for _ in 0..n_max {
            dp.advance()?;
            counts.push(dp.total());
        }
    } else {
        let mut dp = LineDp::new(model)?;
        counts.push(dp.accepted());
        for _ in 0..n_max {
            dp.advance()?;
            counts.push(dp.accepted());
        }
    }
    Ok(CountTable { model, counts })
}

#[derive(Clone, Copy, Debug)]
struct Row {
    lo: i64,
    hi: i64,
    start: usize,
}

/// Frontier for the wedges, where the admissible heights depend on `X`.
///
/// At length `n` it holds every reachable `(X, Y, last)` with `X <= n`; rows
/// are clipped to `|Y| <= n - X` since every vertical step costs one edge.
pub struct WedgeDp {
    model: WedgeModel,
    n: i64,
    rows: Vec<Row>,
    cells: Vec<BigUint>,
}

impl WedgeDp {
    pub fn new(model: WedgeModel) -> Result<Self> {
        if !model.is_wedge() {
            return Err(Error::Unsupported(format!("{model} is not a wedge model")));
        }
        let mut cells = vec![BigUint::zero(); 3];
        cells[H] = BigUint::one();
        Ok(Self {
            model,
            n: 0,
            rows: vec![Row {
                lo: 0,
                hi: 0,
                start: 0,
            }],
            cells,
        })
    }

    pub fn length(&self) -> usize {
        self.n as usize
    }

    fn layout(model: &WedgeModel, n: i64) -> (Vec<Row>, usize) {
        let p = model.p as i64;
        let mut rows = Vec::with_capacity(n as usize + 1);
        let mut start = 0usize;
        for x in 0..=n {
            let (mlo, mhi) = match model.kind {
                ModelKind::Symmetric => (-p * x, p * x),
                _ => (0, p * x),
            };
            let lo = mlo.max(-(n - x));
            let hi = mhi.min(n - x);
            rows.push(Row { lo, hi, start });
            start += (hi - lo + 1).max(0) as usize;
        }
        (rows, start)
    }

    fn get(&self, x: i64, y: i64, slot: usize) -> Option<&BigUint> {
        if x < 0 || x > self.n {
            return None;
        }
        let r = self.rows[x as usize];
        if y < r.lo || y > r.hi {
            return None;
        }
        Some(&self.cells[(r.start + (y - r.lo) as usize) * 3 + slot])
    }

    pub fn advance(&mut self) -> Result<()> {
        let n = self.n + 1;
        let (rows, size) = Self::layout(&self.model, n);
        if size * 3 > STATE_BUDGET {
            return Err(Error::Budget(format!(
                "{} live states needed at n = {n}",
                size * 3
            )));
        }
        let mut cells = vec![BigUint::zero(); size * 3];
        for (x, r) in rows.iter().enumerate() {
            let x = x as i64;
            for y in r.lo..=r.hi {
                let base = (r.start + (y - r.lo) as usize) * 3;
                let h = &mut cells[base + H];
                for slot in [H, U, D] {
                    if let Some(c) = self.get(x - 1, y, slot) {
                        *h += c;
                    }
                }
                let u = &mut cells[base + U];
                for slot in [H, U] {
                    if let Some(c) = self.get(x, y - 1, slot) {
                        *u += c;
                    }
                }
                let d = &mut cells[base + D];
                for slot in [H, D] {
                    if let Some(c) = self.get(x, y + 1, slot) {
                        *d += c;
                    }
                }
            }
        }
        self.n = n;
        self.rows = rows;
        self.cells = cells;
        Ok(())
    }

    /// Number of walks of the current length.
    pub fn total(&self) -> BigUint {
        self.cells.iter().sum()
    }

    /// `(X, Y, count)` for walks of the current length that are empty or end
    /// with a horizontal step.
    pub fn horizontal_endpoints(&self) -> impl Iterator<Item = (i64, i64, &BigUint)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(x, r)| {
            (r.lo..=r.hi).filter_map(move |y| {
                let c = &self.cells[(r.start + (y - r.lo) as usize) * 3 + H];
                (!c.is_zero()).then_some((x as i64, y, c))
            })
        })
    }
}

/// Frontier for the families bounded by a single line, where only the height
/// above that line matters.
pub struct LineDp {
    model: WedgeModel,
    n: i64,
    lo: i64,
    cells: Vec<BigUint>,
}

impl LineDp {
    pub fn new(model: WedgeModel) -> Result<Self> {
        if model.is_wedge() {
            return Err(Error::Unsupported(format!("{model} needs the wedge engine")));
        }
        let mut cells = vec![BigUint::zero(); 3];
        cells[H] = BigUint::one();
        Ok(Self {
            model,
            n: 0,
            lo: 0,
            cells,
        })
    }

    /// Height change caused by an east step.
    fn east_shift(&self) -> i64 {
        match self.model.kind {
            ModelKind::BoundaryDiag => -1,
            _ => 0,
        }
    }

    fn bounded_below(&self) -> bool {
        self.model.kind != ModelKind::Free
    }

    fn get(&self, h: i64, slot: usize) -> Option<&BigUint> {
        let i = h - self.lo;
        if i < 0 || (i as usize) * 3 >= self.cells.len() {
            return None;
        }
        Some(&self.cells[i as usize * 3 + slot])
    }

    pub fn advance(&mut self) -> Result<()> {
        let n = self.n + 1;
        let lo = if self.bounded_below() { 0 } else { -n };
        let size = (n - lo + 1) as usize;
        if size * 3 > STATE_BUDGET {
            return Err(Error::Budget(format!(
                "{} live states needed at n = {n}",
                size * 3
            )));
        }
        let s = self.east_shift();
        let mut cells = vec![BigUint::zero(); size * 3];
        for h in lo..=n {
            let base = (h - lo) as usize * 3;
            for slot in [H, U, D] {
                if let Some(c) = self.get(h - s, slot) {
                    cells[base + H] += c;
                }
            }
            for slot in [H, U] {
                if let Some(c) = self.get(h - 1, slot) {
                    cells[base + U] += c;
                }
            }
            for slot in [H, D] {
                if let Some(c) = self.get(h + 1, slot) {
                    cells[base + D] += c;
                }
            }
        }
        self.n = n;
        self.lo = lo;
        self.cells = cells;
        Ok(())
    }

    /// Number of walks of the current length satisfying the end condition.
    pub fn accepted(&self) -> BigUint {
        match self.model.kind {
            ModelKind::QuarterEndline => self.cells[..3].iter().sum(),
            ModelKind::BoundaryFlat | ModelKind::BoundaryDiag => self.cells[H].clone(),
            _ => self.cells.iter().sum(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(model: WedgeModel, n: usize) -> Vec<u64> {
        count_walks(model, n)
            .unwrap()
            .counts
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn first_counts() {
        assert_eq!(small(WedgeModel::symmetric(1), 7), [1, 1, 3, 5, 13, 27, 67, 149]);
        assert_eq!(small(WedgeModel::asymmetric(1), 7), [1, 1, 2, 3, 7, 13, 29, 59]);
        assert_eq!(small(WedgeModel::free(), 4), [1, 3, 7, 17, 41]);
        assert_eq!(small(WedgeModel::halfplane(), 7), [1, 2, 4, 9, 20, 45, 102, 233]);
    }

    #[test]
    fn csv_layout() {
        let t = count_walks(WedgeModel::asymmetric(1), 2).unwrap();
        assert_eq!(t.to_csv(), "length,count\n0,1\n1,1\n2,2\n");
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("\"counts\":[\"1\",\"1\",\"2\"]"));
        let back: CountTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}

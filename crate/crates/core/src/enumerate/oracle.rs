use num_bigint::BigUint;

use super::model::{ModelKind, WedgeModel};
use crate::error::{Error, Result};

/// Longest walks the exhaustive oracle will enumerate.
pub const ORACLE_MAX_N: usize = 14;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    East,
    North,
    South,
}

fn inside(model: &WedgeModel, x: i64, y: i64) -> bool {
    let p = model.p as i64;
    match model.kind {
        ModelKind::Free => true,
        ModelKind::Symmetric => x >= 0 && y.abs() <= p * x,
        ModelKind::Asymmetric => x >= 0 && y >= 0 && y <= p * x,
        ModelKind::QuarterEndline | ModelKind::Halfplane | ModelKind::BoundaryFlat => y >= 0,
        ModelKind::BoundaryDiag => y - x >= 0,
    }
}

fn counted(model: &WedgeModel, path: &[Dir], x: i64, y: i64) -> bool {
    let horizontal_end = path.last().is_none_or(|d| *d == Dir::East);
    match model.kind {
        ModelKind::QuarterEndline => y == 0,
        ModelKind::BoundaryFlat => y == 0 && horizontal_end,
        ModelKind::BoundaryDiag => y == x && horizontal_end,
        _ => true,
    }
}

/// Calls `visit` with every legal step sequence of length exactly `n`,
/// together with its endpoint.
///
/// Exhaustive depth-first generation; shares no transition code with the
/// dynamic programs.
pub fn for_each_walk(model: &WedgeModel, n: usize, visit: &mut dyn FnMut(&[char], i64, i64)) -> Result<()> {
    if n > ORACLE_MAX_N {
        return Err(Error::Budget(format!(
            "exhaustive search is limited to n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    let mut path = Vec::with_capacity(n);
    let mut letters = Vec::with_capacity(n);
    dfs(model, n, 0, 0, &mut path, &mut letters, visit);
    Ok(())
}

fn dfs(
    model: &WedgeModel,
    n: usize,
    x: i64,
    y: i64,
    path: &mut Vec<Dir>,
    letters: &mut Vec<char>,
    visit: &mut dyn FnMut(&[char], i64, i64),
) {
    if path.len() == n {
        if counted(model, path, x, y) {
            visit(letters, x, y);
        }
        return;
    }
    let prev = path.last().copied();
    for (d, c, dx, dy) in [
        (Dir::East, 'E', 1, 0),
        (Dir::North, 'N', 0, 1),
        (Dir::South, 'S', 0, -1),
    ] {
        let reverses = matches!(
            (prev, d),
            (Some(Dir::North), Dir::South) | (Some(Dir::South), Dir::North)
        );
        if reverses || !inside(model, x + dx, y + dy) {
            continue;
        }
        path.push(d);
        letters.push(c);
        dfs(model, n, x + dx, y + dy, path, letters, visit);
        path.pop();
        letters.pop();
    }
}

/// Number of walks of length `n` found by exhaustive enumeration.
pub fn brute_force_oracle(model: WedgeModel, n: usize) -> Result<BigUint> {
    let mut total = 0u64;
    for_each_walk(&model, n, &mut |_, _, _| total += 1)?;
    Ok(BigUint::from(total))
}

/// All legal walks of length `n` as strings over `E`, `N`, `S`.
pub fn list_walks(model: WedgeModel, n: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for_each_walk(&model, n, &mut |w, _, _| out.push(w.iter().collect()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listings() {
        let mut w = list_walks(WedgeModel::asymmetric(1), 2).unwrap();
        w.sort();
        assert_eq!(w, ["EE", "EN"]);
        assert_eq!(
            brute_force_oracle(WedgeModel::symmetric(1), 3).unwrap(),
            5u32.into()
        );
        for k in ModelKind::ALL {
            let m = WedgeModel::new(k, 2).unwrap();
            assert_eq!(brute_force_oracle(m, 0).unwrap(), 1u32.into());
        }
        assert!(brute_force_oracle(WedgeModel::free(), 15).is_err());
    }
}

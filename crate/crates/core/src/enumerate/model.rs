use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// No constraint at all.
    Free,
    /// `-pX <= Y <= pX`.
    Symmetric,
    /// `0 <= Y <= pX`.
    Asymmetric,
    /// First quadrant, final vertex on `Y = 0`.
    QuarterEndline,
    /// `Y >= 0`.
    Halfplane,
    /// Stays on or above `Y = 0`, ends on it with a horizontal step.
    BoundaryFlat,
    /// Stays on or above `Y = X`, ends on it with a horizontal step.
    BoundaryDiag,
}

impl ModelKind {
    pub const ALL: [ModelKind; 7] = [
        ModelKind::Free,
        ModelKind::Symmetric,
        ModelKind::Asymmetric,
        ModelKind::QuarterEndline,
        ModelKind::Halfplane,
        ModelKind::BoundaryFlat,
        ModelKind::BoundaryDiag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Free => "free",
            ModelKind::Symmetric => "symmetric",
            ModelKind::Asymmetric => "asymmetric",
            ModelKind::QuarterEndline => "quarter_endline",
            ModelKind::Halfplane => "halfplane",
            ModelKind::BoundaryFlat => "boundary_flat",
            ModelKind::BoundaryDiag => "boundary_diag",
        }
    }

    /// Whether the slope parameter matters.
    pub fn uses_p(self) -> bool {
        matches!(self, ModelKind::Symmetric | ModelKind::Asymmetric)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown model {s:?}")))
    }
}

/// A walk family: a domain for the vertices plus conditions on the last one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgeModel {
    pub kind: ModelKind,
    pub p: u32,
}

impl WedgeModel {
    /// Normalises `p` to 1 for the kinds that ignore it.
    pub fn new(kind: ModelKind, p: u32) -> Result<Self, Error> {
        if kind.uses_p() && p == 0 {
            return Err(Error::Invalid("p must be a positive integer".into()));
        }
        let p = if kind.uses_p() { p } else { 1 };
        Ok(Self { kind, p })
    }

    pub fn free() -> Self {
        Self {
            kind: ModelKind::Free,
            p: 1,
        }
    }

    pub fn symmetric(p: u32) -> Self {
        Self::new(ModelKind::Symmetric, p).expect("p > 0")
    }

    pub fn asymmetric(p: u32) -> Self {
        Self::new(ModelKind::Asymmetric, p).expect("p > 0")
    }

    pub fn quarter_endline() -> Self {
        Self {
            kind: ModelKind::QuarterEndline,
            p: 1,
        }
    }

    pub fn halfplane() -> Self {
        Self {
            kind: ModelKind::Halfplane,
            p: 1,
        }
    }

    pub fn boundary_flat() -> Self {
        Self {
            kind: ModelKind::BoundaryFlat,
            p: 1,
        }
    }

    pub fn boundary_diag() -> Self {
        Self {
            kind: ModelKind::BoundaryDiag,
            p: 1,
        }
    }

    /// Vertex constraint.
    pub fn admits(&self, x: i64, y: i64) -> bool {
        let p = self.p as i64;
        match self.kind {
            ModelKind::Free => true,
            ModelKind::Symmetric => x >= 0 && -p * x <= y && y <= p * x,
            ModelKind::Asymmetric => x >= 0 && 0 <= y && y <= p * x,
            ModelKind::QuarterEndline | ModelKind::Halfplane | ModelKind::BoundaryFlat => y >= 0,
            ModelKind::BoundaryDiag => y >= x,
        }
    }

    /// Condition on the final state of a counted walk.
    pub fn accepts_end(&self, state: &WalkState) -> bool {
        match self.kind {
            ModelKind::QuarterEndline => state.y == 0,
            ModelKind::BoundaryFlat => {
                state.y == 0 && matches!(state.last, LastStep::None | LastStep::Horizontal)
            }
            ModelKind::BoundaryDiag => {
                state.y == state.x && matches!(state.last, LastStep::None | LastStep::Horizontal)
            }
            _ => true,
        }
    }

    /// Whether the vertex constraint involves `X` (the wedges) or only a
    /// height relative to a line.
    pub fn is_wedge(&self) -> bool {
        matches!(self.kind, ModelKind::Symmetric | ModelKind::Asymmetric)
    }
}

impl fmt::Display for WedgeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind.uses_p() {
            write!(f, "{} p={}", self.kind, self.p)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LastStep {
    None,
    Horizontal,
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    N,
    S,
}

/// Position of a walk's endpoint together with its last step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkState {
    pub x: i64,
    pub y: i64,
    pub last: LastStep,
}

impl WalkState {
    pub const ORIGIN: WalkState = WalkState {
        x: 0,
        y: 0,
        last: LastStep::None,
    };

    /// The state after `step`, or `None` when it reverses a vertical step.
    pub fn step(&self, step: Step) -> Option<WalkState> {
        match (step, self.last) {
            (Step::N, LastStep::Down) | (Step::S, LastStep::Up) => None,
            (Step::E, _) => Some(WalkState {
                x: self.x + 1,
                y: self.y,
                last: LastStep::Horizontal,
            }),
            (Step::N, _) => Some(WalkState {
                x: self.x,
                y: self.y + 1,
                last: LastStep::Up,
            }),
            (Step::S, _) => Some(WalkState {
                x: self.x,
                y: self.y - 1,
                last: LastStep::Down,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_boundaries_are_inclusive() {
        let v = WedgeModel::symmetric(2);
        assert!(v.admits(1, 2) && v.admits(1, -2) && !v.admits(1, 3));
        let w = WedgeModel::asymmetric(1);
        assert!(w.admits(3, 3) && w.admits(3, 0) && !w.admits(3, -1) && !w.admits(0, 1));
    }

    #[test]
    fn reversal_is_forbidden() {
        let up = WalkState::ORIGIN.step(Step::N).unwrap();
        assert!(up.step(Step::S).is_none());
        assert_eq!(up.step(Step::E).unwrap().last, LastStep::Horizontal);
    }

    #[test]
    fn names_round_trip() {
        for k in ModelKind::ALL {
            assert_eq!(k.name().parse::<ModelKind>().unwrap(), k);
        }
        assert!("wedge".parse::<ModelKind>().is_err());
    }
}

//! Exact enumeration and generating functions for partially directed walks
//! confined to wedges.
//!
//! Walks take north, south and east unit steps, never reversing a vertical
//! step, and stay inside either the symmetric wedge `-pX <= Y <= pX` or the
//! asymmetric wedge `0 <= Y <= pX`. The crate is organised bottom-up:
//!
//! - [`exact`]: rationals, truncated Laurent series in `t`, and
//!   precision-tracked floats.
//! - [`enumerate`]: dynamic-programming counts for every walk family, an
//!   exhaustive oracle, and endpoint-weighted series.
//! - [`kernel`]: kernel coefficients, kernel roots, iterated compositions and
//!   residual checks of the functional equations.
//! - [`closedform`]: explicit generating functions (including the theta-like
//!   sums) and their comparison against enumeration.
//! - [`asymptotics`]: high-precision asymptotic constants, fits and the
//!   root audit.
//! - [`cli`]: command surface used by the `wedgewalk` binary.
//! - [`ledger`]: the documented discrepancies between printed formulas and
//!   exact enumeration.

pub mod asymptotics;
pub mod cli;
pub mod closedform;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod kernel;
pub mod ledger;

pub use error::{Error, Result};
pub use exact::{PrecFloat, Rational, TSeries};

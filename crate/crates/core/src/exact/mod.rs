//! Exact arithmetic foundation.

mod precfloat;
mod rational;
mod series;

pub use precfloat::{PrecFloat, DEFAULT_DIGITS};
pub use rational::{parse_rational, rat, Rational};
pub use series::{series_arith, ArithKind, SeriesJson, TSeries};

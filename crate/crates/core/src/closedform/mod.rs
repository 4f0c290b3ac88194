//! Explicit generating functions, expanded exactly and compared against
//! enumeration.

mod bargraph;
mod compare;
mod gf;
mod kind;
mod theta;

pub use bargraph::{gf_bargraph, Bargraph};
pub use compare::{
    compare_series, compare_with_counts, dp_comparisons, interpretation_comparators, solution_identities,
    CoeffDiff, ComparisonReport,
};
pub use gf::{gf_series, h1_pieces, p2_summand, GF_MAX_ORDER};
pub use kind::{GfKind, ThetaArg};
pub use theta::{theta_asym, theta_asym_term, theta_sym, theta_sym_terms};

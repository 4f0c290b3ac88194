//! Exact enumeration of partially directed walks.
//!
//! [`count_walks`] runs a dynamic program over `(position, last step)` for
//! every family; [`brute_force_oracle`] is an exhaustive search used to check
//! it. [`weighted_gf`] keeps the endpoint distances needed by the functional
//! equations.

mod dp;
mod growth;
mod model;
mod oracle;
mod weighted;

pub use dp::{count_walks, CountTable, LineDp, WedgeDp, STATE_BUDGET};
pub use growth::{
    growth_estimate, growth_inequalities, lemma_concatenation, sandwich, wedge_containment, GrowthPoint,
    InequalityReport,
};
pub use model::{LastStep, ModelKind, Step, WalkState, WedgeModel};
pub use oracle::{brute_force_oracle, for_each_walk, list_walks, ORACLE_MAX_N};
pub use weighted::{endpoint_exponents, weighted_gf, WeightedSeries, WEIGHTED_MAX_N};

//! Asymptotic constants of the wedge counts, evaluated at high precision and
//! checked against exact coefficients.
//!
//! Analytic constants come from the explicit generating functions at their
//! dominant singularities; fits extrapolate exact counts in `1/n`. Every
//! result is an [`AsymptoticReport`] carrying the printed reference value.

mod asymmetric;
mod fit;
pub mod reference;
mod report;
mod roots;
mod sums;
mod symmetric;

pub use asymmetric::{
    b0_consistency, constant_b0, constant_halfplane, constant_theta, p1_formula, p2_second_piece_sum,
    p2k_formula_pieces, p_pieces_asymptotics, B0_SAMPLES,
};
pub use fit::{free_walk_validation, neville_at_zero, normalised, richardson};
pub use report::{doubling_agreement, AsymptoticReport, Diagnostic, Method};
pub use roots::{
    family_polynomial, root_audit, Family, FamilyRoots, InDisk, Root, RootAudit, ROOT_AUDIT_MAX_K,
};
pub use sums::{theta_residue_sum, theta_sym_dq, theta_sym_value};
pub use symmetric::{
    a0_limit_probe, accuracy_table, constant_a0, constants_a1a2, g11_value, q_sym_at_tc, A1A2Method,
    AccuracyRow, AccuracyTable, A1A2_FIT_ORDER, ACCURACY_BOUNDS,
};

/// Largest working precision, in decimal digits, accepted by the constants.
pub const MAX_DIGITS: usize = 100;

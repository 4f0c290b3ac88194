//! Kernel method machinery at `x = y = t`.
//!
//! [`KernelSystem`] evaluates the coefficients of the functional equations,
//! [`root`] expands the kernel roots, and the iterate functions compare the
//! composed roots with their closed forms. Every check returns an
//! [`IdentityCheck`] naming the first coefficient that disagrees.

mod check;
mod iterate;
mod qpq;
mod residual;
mod roots;
mod script;
mod system;
pub mod util;

pub use check::IdentityCheck;
pub use iterate::{
    alpha1_asym, beta1_asym, beta_closed, beta_composed, beta_gamma_closed_from_q, beta_iterate,
    gamma_closed_from_beta, gamma_closed_from_q, gamma_composed, gamma_identities, gamma_iterate,
    group_law_check, IteratedRoot, MAX_DEPTH,
};
pub use qpq::{
    free_denominator, p_asym_series, printed_forms_check, q_asym_one_printed, q_asym_series,
    q_sym_one_printed, q_sym_series, qbar_asym_series, qbar_q_check, qpq_series, QKind,
};
pub use residual::{
    enumerated_specialisations, functional_eq_checks, residual_functional_eq, residual_kernel_form,
};
pub use roots::{newton_root, root, root_formula, RootKind, RootSeries};
pub use script::{script_checks, script_coeffs, ScriptCoeffs};
pub use system::{kernel_eval, kernel_p1_expanded, KernelSystem, KernelValues, Wedge};

//! Tropicalized generalized minors on reduced double Bruhat cells in type A.

pub mod matrix;
pub mod minors;
pub mod mpoly;
pub mod poly;
pub mod scan;
pub mod theorem_b;

pub use matrix::{Mat, MatrixRF};
pub use minors::{
    chart_point, chart_symbolic, default_chart, delta_new, eta, eta_inv, eta_inv_point, gen_minor, iota, m_gamma,
    m_values, permutation, require_type_a, w_rep, weight_set, x_elem, TropicalPoint,
};
pub use mpoly::MPoly;
pub use poly::{RatFunc, Ring, UniPoly};
pub use scan::{
    dominates, edge_equality_check, gamma_w, support_bound_check, three_term_identity_check, vanishing_scan,
};
pub use theorem_b::{lusztig_of_point, theorem_b_check, Counterexample, TheoremBOutcome};

//! Fox calculus over free groups, the Magnus matrices of endomorphisms, and
//! the linear representations `Θ`, `Δ` and `Θ ⊕ Δ`.
//!
//! Matrices act on row vectors: row `k` is the image of basis vector `k`, and
//! the matrix of a braid word is the product of its letter matrices in word
//! order.

mod calculus;
mod linear;
mod poly;

pub use calculus::{abelianize, fox_derivative, magnus_matrix, Assignment, GroupRingElement};
pub use linear::{
    apply_linear, generic_magnus_check, generic_theta, linear_delta, linear_theta,
    linear_theta_delta, FamilyCheck, GenericMagnusReport, Layout, LinearKind, LinearRep,
};
pub(crate) use poly::serialize_bigint;
pub use poly::{variables, LaurentPoly, RingMatrix};

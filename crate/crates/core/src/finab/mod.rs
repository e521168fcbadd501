//! Finite abelian groups given by integer relation matrices.
//!
//! Everything is exact: groups carry a canonical invariant-factor
//! presentation computed by Smith normal form, and homomorphisms are integer
//! matrices in canonical coordinates.

mod group;
mod hom;
mod schur;
mod snf;

pub use group::{format_invariants, invariant_factors_of, FinAbGroup, GroupSummary};
pub use hom::{dual, exterior_square, image_cokernel, kernel, quotient, subgroup, GroupHom};
pub use schur::{schur_multiplier_oracle, ORACLE_MAX_ORDER};
pub use snf::{integer_kernel, smith_normal_form, IntMatrix, Smith};

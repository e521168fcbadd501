//! Exact computation of Brauer groups of moduli of principal bundles on curves.
//!
//! For a semisimple group `G` over a smooth projective curve of genus at least
//! three, the Brauer groups of the moduli stack and of the regularly stable
//! locus of the coarse moduli space are finite abelian groups assembled from
//! the center of the simply connected cover, its linking form, and
//! `π₁(G)`. This crate computes all of those pieces exactly.
//!
//! * [`rootdata`]: Cartan matrices, the basic coroot form, centers and linking forms.
//! * [`finab`]: finite abelian groups, Smith normal form, homomorphisms.
//! * [`brauer`]: the evaluation map, its cokernel, and the Brauer group reports.
//! * [`cli`]: the group-spec grammar, JSON/markdown reports and the classical tables.

pub mod brauer;
pub mod cli;
pub mod error;
pub mod finab;
pub mod qmodz;
pub mod rootdata;

pub use error::{Error, Result};
pub use qmodz::QmodZ;

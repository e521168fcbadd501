//! Simple root systems, the basic coroot form, and centers with their linking forms.

mod center;
mod dynkin;
mod spec;

pub use center::{center, named_subgroup, product_center, CenterData, LinkingForm, ProductCenter};
pub use dynkin::{cartan_matrix, coroot_gram, DynkinType, Family};
pub use spec::{GroupSpec, Mode};

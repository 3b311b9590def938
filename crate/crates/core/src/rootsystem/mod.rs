//! Root systems of the irreducible finite Coxeter types in Bourbaki labelling.

mod build;
mod components;
mod ctype;
mod subset;

pub use build::{RootIdx, RootSystem};
pub use components::{
    bond_order, central_by_type, classify_components, component_subsets, format_components,
};
pub use ctype::CoxeterType;
pub use subset::Subset;

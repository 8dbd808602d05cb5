//! ADE Dynkin graphs, their Gram matrices and symmetry groups, and the
//! induced action on discriminant forms.

mod action;
mod ade;
mod graph;
pub mod perm;

pub use action::{discr_action, local_action, type_discriminant, GraphDiscriminant};
pub use ade::{AdeType, Family, SingularitySet};
pub use graph::{gram_of, graph_symmetries, DynkinGraph, GraphSymmetry, SymmetryGroup};

//! Finite quadratic forms, discriminant forms of even lattices, isotropic
//! subgroups and their quotients.

mod form;
mod gram;
mod isometry;
mod isotropic;
mod quotient;

pub use form::{
    apply_automorphism, is_isotropic, orthogonal_complement, DiscrAutomorphism, DiscrElement, DiscrSubgroup,
    FiniteQuadraticForm, Transformable,
};
pub use gram::{discriminant_form, DiscriminantForm};
pub use isometry::forms_isometric;
pub use isotropic::{isotropic_subgroups, rref_mod, FpSubspace, PTorsion};
pub use quotient::{quotient_form, QuotientForm};

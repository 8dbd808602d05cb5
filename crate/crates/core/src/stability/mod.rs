//! Configurations of Dynkin graphs with isotropic kernels, their stable
//! symmetry groups, and the classifier over the sextic families.

mod classify;
mod config;
mod groups;
mod kernels;
mod report;

pub use classify::{
    classify_catalog, classify_family, classify_set, classify_with_ordinary, torus_candidates, FamilyResult, OrbitResult,
    INVOLUTION_ORBIT_TYPES,
};
pub use config::{config_elements, group_from_elements, stable_elements, sym_config, Configuration, MAX_RANK};
pub use groups::{identify_group, FiniteGroup, GroupLabel};
pub use kernels::{admissible_kernels, KernelOrbit, KernelSpec};
pub use report::{essential_orbits, sym_stable, KappaImage, StableGroupReport};

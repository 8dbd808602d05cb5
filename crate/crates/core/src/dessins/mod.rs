//! Skeletons (dessins) of trigonal curves: enumeration, singular fibers,
//! irreducibility and elementary transformations.

mod enumerate;
mod fibers;
mod skeleton;
mod table;

pub use enumerate::enumerate_skeletons;
pub use fibers::{FiberMultiset, FiberType};
pub use skeleton::{Color, Skeleton, SkeletonJson};
pub use table::{elementary_transform, table1, Table1Row};

/// Fiber multiset of a skeleton.
pub fn fiber_multiset(s: &Skeleton) -> FiberMultiset {
    s.fiber_multiset()
}

/// Irreducible components of the curve with skeleton `s`.
pub fn component_count(s: &Skeleton) -> usize {
    s.component_count()
}

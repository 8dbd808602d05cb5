//! Exact computations around stable symmetries of irreducible plane sextics
//! and stable maximal trigonal curves in the Hirzebruch surface of index 2.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactcore`]: integers, rationals, Smith normal form, rational polynomials;
//! * [`discrforms`]: finite quadratic forms (discriminant forms) and their subgroups;
//! * [`rootsystems`]: ADE Dynkin graphs, their symmetries and the induced action
//!   on discriminant forms;
//! * [`stability`]: configurations, (stable) symmetry groups and the classifier;
//! * [`dessins`]: skeletons of maximal trigonal curves and their singular fibers;
//! * [`weierstrass`]: fiber analysis of explicit Weierstrass equations;
//! * [`catalog`]: the sextic families and the quotient dictionary.

pub mod catalog;
pub mod dessins;
pub mod discrforms;
pub mod error;
pub mod exactcore;
pub mod rootsystems;
pub mod stability;
pub mod weierstrass;

pub use error::{Error, Result};

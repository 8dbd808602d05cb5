//! Exact arithmetic foundation: integer matrices with Smith normal form,
//! rational polynomials with gcd, squarefree decomposition and reduction of
//! rational functions.

mod matrix;
mod poly;

pub use matrix::{smith_normal_form, IntMatrix, SmithForm};
pub use poly::{
    int, parse_rational, rat, reduce_rational_function, squarefree_partition, RatPoly, Rational,
    RationalText, SquarefreeDecomposition,
};

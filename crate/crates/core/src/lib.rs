//! Exact computations in group rings of finite groups: Wedderburn
//! decompositions over cyclotomic splitting fields, reduced norms,
//! Whitehead orders and Fitting invariants, reduced exterior powers,
//! a graded determinant calculus, and cyclotomic-unit distribution checks.

pub mod algebra;
pub mod cyclotomic;
pub mod arith;
pub mod detfun;
pub mod error;
pub mod exterior;
pub mod fitting;
pub mod groups;
pub mod io;
pub mod random;
pub mod suite;

pub use error::{Error, Result};

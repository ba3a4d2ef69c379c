//! Exact arithmetic: rationals, cyclotomic fields, linear algebra over
//! them, and integer lattices in Hermite/Smith normal form.

pub mod combinatorics;
pub mod cyclo;
pub mod field;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod snf;

pub use combinatorics::{binomial, subset_rank, subsets};
pub use cyclo::{CycloNum, Descent};
pub use field::Field;
pub use lattice::IntLattice;
pub use linalg::Matrix;
pub use rational::Rational;
pub use snf::{cokernel_invariants, smith_normal_form, IntMatrix, Snf};

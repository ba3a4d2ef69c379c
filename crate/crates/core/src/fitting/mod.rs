//! Budgeted Whitehead orders, denominator ideals, non-commutative Fitting
//! invariants and annihilation checks.

mod annihilate;
mod fit;
mod lattice;
mod xi;

pub use annihilate::{annihilation_check, image_rows, AnnihilationReport};
pub use fit::{fit_classical_oracle, fit_matrix, fit_transpose};
pub use lattice::CentralLattice;
pub use xi::{delta_check, delta_check_element, xi_approx, Budget, DeltaVerdict};

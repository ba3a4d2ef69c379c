//! Group-algebra elements and matrices, the Wedderburn isomorphism over
//! Q(ζ_e), reduced norms, generalized adjoints and reduced ranks.

mod central;
mod element;
mod matrix;
mod nrd;

pub use central::CentralElement;
pub use element::{central_idempotent, wedderburn_inverse, BaseRing, GroupAlgebraElement};
pub use matrix::{unsplit, GroupAlgebraMatrix};
pub use nrd::{adjoint_star, inverse, nrd, nrd_values, reduced_rank, ModuleShape};

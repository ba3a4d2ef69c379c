//! Reduced exterior powers of free modules on the split side, hom wedges
//! and the duality pairing, Rubin-lattice membership, θ_b and ε_M.

mod epsilon;
mod rubin;
mod theta;
mod wedge;

pub use epsilon::{epsilon_m, epsilon_support, in_kernel_wedge};
pub use rubin::{dual_homs, rubin_membership, RubinVerdict};
pub use theta::{dual_basis, section_wrt, theta_b, theta_b_bijective, theta_b_dimensions, theta_b_section, theta_wrt};
pub use wedge::{apply_hom, pair, wedge_elements, wedge_homs, ExteriorElement, HomWedge};

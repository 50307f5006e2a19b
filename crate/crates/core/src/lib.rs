//! Certified root-distance bounds for complex polynomials.
//!
//! Around a center `ζ` (usually a critical point, `p'(ζ) = 0`) the crate
//! computes
//!
//! * exclusion radii: no root of `p` lies closer to `ζ` ([`lower`]),
//! * inclusion radii: some root of `p` lies at least this close ([`upper`]),
//!
//! all phrased in terms of the radius family
//! `ρ^{(k)}(ζ) = |k! p(ζ) / p^{(k)}(ζ)|^{1/k}` ([`radius`]). An independent
//! simultaneous-iteration root finder ([`oracle`]) supplies the true
//! distances every bound is checked against, and [`conjecture`] builds the
//! annuli of the critical-point covering conjecture together with the
//! family `z^{n+1} - (n+1) z` that breaks its upper constant.

pub mod conjecture;
pub mod error;
pub mod lower;
pub mod oracle;
pub mod poly;
pub mod radius;
pub mod report;
mod solve;
pub mod upper;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use poly::{Polynomial, ShiftedExpansion};
pub use radius::{rho_profile, RadiusProfile, Tolerances};

//! Exact arithmetic: reduced rationals and single quadratic extensions of Q.
//!
//! Nothing in the crate uses floating point. Euler characteristics, genus
//! formulas and j-invariants are all evaluated here.

mod quad;
mod rational;
mod scalar;

pub use quad::{qx_arith, qx_is_rational, QuadExtElem, QuadField, QuadOp};
pub use rational::Rational;
pub use scalar::Scalar;

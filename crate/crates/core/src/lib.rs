//! Exact computations for quotients of weighted projective lines by finite
//! subgroups of their string groups.
//!
//! [`lgroup`] holds the group arithmetic and subgroup enumeration,
//! [`quotient`] the genus and weights of a quotient, and [`tables`] the
//! exhaustive searches built from them.

pub mod classify;
pub mod error;
pub mod exactnum;
pub mod exec;
pub mod expr;
pub mod lgroup;
pub mod params;
pub mod quotient;
pub mod tables;
pub mod tube;

pub use error::{Error, Result};
pub use exec::Execution;

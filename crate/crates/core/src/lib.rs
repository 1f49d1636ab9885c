//! Exact Kauffman bracket and colored Jones polynomials for links with
//! labeled twist regions, plus tools for studying how their lowest
//! coefficients stabilize.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod planar;
pub mod stability;
pub mod verify;

pub use error::{Result, SkeinError};

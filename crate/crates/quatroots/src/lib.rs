//! Exact classification of the roots of polynomials over the real
//! quaternions: existence of complex, spherical and isolated complex roots
//! via Bezout-matrix rank criteria, maximal complex right factors, the
//! closed-form quadratic case, and size bounds on roots.

pub mod analysis;
pub mod bezout;
pub mod error;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};

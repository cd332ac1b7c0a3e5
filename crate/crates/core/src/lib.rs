//! Generalized Kupka components of two-dimensional foliations on projective
//! space built from representations of the affine Lie algebra.

pub mod classify;
pub mod error;
pub mod gkcheck;
pub mod linalg;
pub mod polyvec;
pub mod serde_util;
pub mod w0space;
pub mod weights;

pub use error::{Error, Result};

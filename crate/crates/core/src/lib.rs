//! q-tensor squares, q-exterior squares, q-Schur and q-Bogomolov
//! multipliers of small finite groups, computed from their defining
//! presentations by coset enumeration.

pub mod error;
pub mod fp;
pub mod group;
pub mod harness;
pub mod isoclinism;
pub mod tensor;

pub use error::{Error, Result};

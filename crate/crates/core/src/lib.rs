//! Exact block classification for Brauer algebras `B_n(δ)` in characteristic
//! zero, together with a linear-algebra oracle for checking it at small `n`.

pub mod blocks;
pub mod cell;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod perm;
pub mod specht;

pub use error::{Error, Result};

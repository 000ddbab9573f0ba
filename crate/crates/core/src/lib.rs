//! Exact computation of classical and modified Eisenstein series on the
//! moduli of GL(n)-bundles over the projective line over F_q, together with
//! the combinatorics they are built from: root data, Kostant partitions,
//! split bundles and flag counts.

pub mod bun;
pub mod curve;
pub mod eis;
pub mod error;
pub mod repcomb;
pub mod ringtools;
pub mod rootdata;

pub use error::{Error, Result};

//! Exact tooling for linear constraint systems over `Z/d`.
//!
//! The crate decides scalar solvability of `Mx = b (mod d)`, verifies
//! operator (matrix) solutions exactly in Pauli arithmetic or numerically for
//! dense unitaries, and computes the topological invariants attached to a
//! system: cellular cohomology of 2-dimensional realizations, the two graded
//! pieces of `C(d,m)`-cohomology, and the low homotopy groups of the
//! spectra involved.
//!
//! Everything here is `no_std` + `alloc`. File formats and the command line
//! live in the `torsionk` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cw;
mod error;
pub mod invariants;
pub mod lcs;
pub mod linalg;
pub mod operators;

pub use error::{Error, Result};

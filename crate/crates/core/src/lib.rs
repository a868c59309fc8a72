//! Exact combinatorics of Fock spaces, crystals and unipotent blocks for
//! finite unitary groups.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: weights
//! carry rational `δ`-coefficients and Fock vectors carry [`BigRational`]
//! coefficients, so every identity the test suite checks is an equality, not
//! a tolerance.
//!
//! Modules, bottom up:
//!
//! * [`partition`]: partitions, β-windows, cores and quotients, the `τ_l`
//!   bijection, node residues.
//! * [`cartan`]: quivers, affine weight lattices, Weyl group action and the
//!   maps between the two quivers.
//! * [`symfunc`]: Schur and power-sum bases, Murnaghan–Nakayama.
//! * [`fock`]: Fock vectors, Chevalley and Heisenberg operators, weights,
//!   highest-weight kernels.
//! * [`crystal`]: signature rule, crystal graphs.
//! * [`unitary`]: characters, series, blocks, good blocks, Hecke parameters.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cartan;
pub mod crystal;
mod error;
pub mod fock;
pub mod linalg;
pub mod partition;
pub mod symfunc;
pub mod unitary;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

//! Tropical crystal machinery for cellular crystals.
//!
//! The crate works with finite-type root data, exact Laurent polynomials,
//! an exact matrix model of the relevant group elements, and several
//! independent realizations of the crystal `B(∞)`:
//!
//! * the cellular crystal `Z^N` attached to a reduced longest word, cut
//!   out by the tropicalized upper half potential ([`cellular`]);
//! * the polyhedral realization ([`polyhedral`]);
//! * tensor products of elementary crystals `B_i` ([`crystalcore`]).
//!
//! Braid-type isomorphisms live in [`braid`] and the shift-lattice
//! connectedness machinery in [`connectivity`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod braid;
pub mod cellular;
pub mod connectivity;
pub mod crystalcore;
pub mod error;
pub mod grouprep;
pub mod polyhedral;
pub mod rootdata;
pub mod sample;
pub mod tropsym;

pub use error::{Error, Result};

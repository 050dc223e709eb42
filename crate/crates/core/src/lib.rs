//! Exact arithmetic in the Cayley-Dickson 2^N-ions and a complete census of
//! the sedenions' primitive zero-divisors: the 42 assessors, their 168
//! couplings, 28 co-assessor trios and 7 box-kites, with the production
//! rules, navigation algorithms and Fano-plane flow analysis that connect
//! them, plus the maximal-signature extension to 32 dimensions.
//!
//! Everything here is pure and allocation-only; IO and file formats live in
//! the companion CLI crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boxkite;
pub mod cdalgebra;
mod error;
pub mod flowmorph;
pub mod pathion;
pub mod zerodiv;

pub use cdalgebra::{CdAlgebra, DenseElement, DoublingRule, Element, Sign, Triple, MAX_DIM_EXP};
pub use error::{Error, Result};
pub use zerodiv::{Assessor, Coupling, Diagonal, Orientation, Pairing, Sedenions, Trio, TrioKind};

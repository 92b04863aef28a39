//! Exact power sums of matrices over finite rings.
//!
//! Finite rings are described by additive generators with their orders and
//! multiplication structure constants ([`ring::RingSpec`]). On top of that
//! substrate the crate provides:
//!
//! - [`closed_form`]: every explicit case analysis for scalar and matrix power
//!   sums over `F_q`, `Z/nZ`, `Z/nZ[i]` and the Hamilton quaternions, the
//!   zero guarantees for `Z_{p^s}`-modules and the general (conjecture-backed)
//!   prediction for arbitrary finite commutative rings;
//! - [`oracle`]: brute-force enumeration of the same sums, plus sums of
//!   non-commutative monomials over integer matrices;
//! - [`words`]: monomials in non-commuting variables and multiset word
//!   enumeration.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod closed_form;
mod error;
pub mod oracle;
pub mod ring;
pub mod words;

pub use error::{Error, Result};

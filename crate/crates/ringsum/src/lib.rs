//! Verification sweeps, ring-spec files and the command-line front end for
//! [`ringsum_core`].
//!
//! The sweeps in [`harness`] compare closed forms against brute-force
//! oracles cell by cell and emit [`report::SweepReport`]s, which serialize
//! as JSON Lines. Cells are evaluated in parallel with rayon and assembled
//! in grid order, so reports do not depend on the number of threads.

pub mod cli;
mod error;
pub mod format;
pub mod harness;
pub mod parallel;
pub mod report;
pub mod rings;
pub mod spec_file;

pub use error::{Error, Result};

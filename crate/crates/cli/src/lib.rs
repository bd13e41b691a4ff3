//! Command-line front end for `cyclic-polytope`.
//!
//! Besides argument handling this crate adds what the core library leaves
//! out: thread-pool parallelism, JSON/CSV/plain reports, the reference
//! h*-table, and the `verify` invariant suite.

pub mod app;
pub mod commands;
pub mod engine;
pub mod family;
pub mod parse;
pub mod reference;
pub mod report;
pub mod verify;

pub use app::{run, Outcome};

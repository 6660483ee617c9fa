//! Command-line driver: runs the lattice, finite-geometry, orbit and
//! polynomial suites and emits JSON or TSV reports.

pub mod hexads;
pub mod iterate;
pub mod lattice;
pub mod poly;
pub mod report;

pub use report::{Check, Report, Status};

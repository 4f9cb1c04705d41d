//! Library side of the minorkit command-line tool: input handling, output
//! records, the verdict cache, and the exhaustive theorem-verification
//! harness. The binary in `main.rs` is a thin argument-parsing layer over
//! this crate so that everything is testable in-process.

pub mod cache;
pub mod input;
pub mod records;
pub mod verify;

//! Command-line frontend for the coset-leader engine: argument parsing,
//! parity-check matrix file I/O, report serialization, and dispatch.

pub mod args;
pub mod matrix_io;
pub mod report;
mod run;

pub use run::run;

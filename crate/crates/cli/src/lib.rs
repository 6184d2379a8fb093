//! IO, file formats and subcommand drivers for the `lcsk` binary.

pub mod bench;
pub mod error;
pub mod fasta;
pub mod matrix;
pub mod oracle_check;
pub mod pairwise;
pub mod report;

pub use error::CliError;

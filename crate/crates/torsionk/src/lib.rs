//! File formats and the command-line frontend for `torsionk-core`.

pub mod cli;
pub mod format;

//! Input files, the decomposition pipeline and its reports.

pub mod cli;
pub mod input;
pub mod pipeline;
pub mod report;

pub use input::{parse_input, InputError, InputSpec};
pub use pipeline::{decompose, prepare, DecompositionReport, Settings};

//! Command-line front end for the `glmix` library: configuration, manifest
//! DTOs and emitters.

pub mod dto;
pub mod emit;
pub mod job;

pub use job::{run, CliError, JobConfig, Manifest, OutputFormat, Verdict};

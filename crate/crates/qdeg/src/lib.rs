//! Command-line driver for `qdeg-core`: file formats, reference fixtures,
//! and the reproduction suite behind `qdeg repro`.

pub mod cli;
pub mod fixtures;
pub mod io;
pub mod repro;

pub use qdeg_core;

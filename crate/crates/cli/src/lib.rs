//! Command-line front end: manifold documents, the built-in catalog,
//! report rendering and subcommand dispatch.

pub mod catalog;
pub mod cli;
pub mod document;
pub mod report;

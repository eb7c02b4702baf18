//! Command-line front end for `fracrheo`: configuration files, the
//! verification matrix and the subcommand implementations.

pub mod commands;
pub mod config;
pub mod verify;

//! Command-line front end for radon-lab: file I/O, subcommands, the
//! verification suite and the report table.

pub mod args;
pub mod commands;
pub mod io;
pub mod output;
pub mod report;
pub mod suite;

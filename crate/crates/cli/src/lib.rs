//! Building blocks of the `stratakit` command-line tool.

pub mod commands;
pub mod document;
pub mod error;
pub mod input;
pub mod sweep;

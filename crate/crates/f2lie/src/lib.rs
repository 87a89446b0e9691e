//! File formats, catalog directories, result tables and the command-line
//! front end for [`f2lie_core`].

pub mod catalog_dir;
pub mod cli;
pub mod constructions;
mod error;
pub mod format;
pub mod groupfile;
pub mod tables;

pub use error::{Error, Result};

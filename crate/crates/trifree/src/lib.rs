//! Command-line front end, file formats and parallel drivers for
//! `trifree-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod input;
pub mod parallel;
pub mod report;
pub mod verify;

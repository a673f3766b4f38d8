//! Command-line front end for `schurkit-core`: JSON codecs, text and LaTeX
//! renderings, parameter specializations and verification suites.

pub mod cli;
pub mod format;
pub mod json;
pub mod suites;
pub mod theta;

pub use cli::run;
pub use format::Format;

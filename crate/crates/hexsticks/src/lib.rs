//! IO side of the binary-encoding hex digits: streaming dumps, numeral
//! conversion, the comparison-table fixture, style config files, the
//! command line, and the local hex-editor service.

pub mod cli;
pub mod convert;
pub mod dump;
mod error;
pub mod fixture;
pub mod service;
pub mod session;
pub mod style;

pub use error::Error;

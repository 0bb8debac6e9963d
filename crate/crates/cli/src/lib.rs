//! Command line and JSON service over the `muntz` kernel.

pub mod commands;
pub mod doc;
pub mod figures;
pub mod limits;
pub mod ops;
pub mod service;
pub mod svg;

pub use commands::{run, Outcome};
pub use doc::ApiError;
pub use limits::Limits;

//! Exact arithmetic and verification pipelines for cubic points on the
//! modular curves `X_0(35)` and `X(b5, ns7)`.

pub mod algebra;
pub mod curve;
pub mod data;
pub mod error;
pub mod fixtures;
pub mod pipeline;
pub mod report;
pub mod rr;

pub use error::{Error, Result};

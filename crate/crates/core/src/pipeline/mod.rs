//! End-to-end verification pipelines.

pub mod x035;
pub mod b5ns7;
pub mod qz7;
pub mod suite;

//! Riemann–Roch spaces and divisor class computations.

pub mod plane;
pub mod class_group;
pub mod hyperelliptic;

//! Plane curves, their places and divisors.

pub mod cache;
pub mod count;
pub mod divisor;
pub mod elliptic;
pub mod form;
pub mod model;
pub mod place;
pub mod series;
pub mod zeta;

pub use divisor::Divisor;
pub use form::{Chart, Form};
pub use model::PlaneModel;
pub use place::{Param, PlaceKey, PointKey};

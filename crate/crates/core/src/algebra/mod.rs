//! Exact arithmetic: prime fields, extensions, polynomials, factorization,
//! real-root counting and linear algebra.

pub mod bivariate;
pub mod embed;
pub mod eta;
pub mod ext;
pub mod factor;
pub mod field;
pub mod integer;
pub mod linalg;
pub mod poly;
pub mod qpoly;
pub mod prime;
pub mod rational;
pub mod sturm;

pub use ext::{ExtField, Fq, NumberField};
pub use field::{FiniteField, Field};
pub use poly::Poly;
pub use prime::PrimeField;
pub use rational::Rationals;

//! Explicit Gorenstein-linear resolutions of `S / ann(Φ)` for an inverse
//! system `Φ` of degree `2n - 2` in `x, y, z`.
//!
//! The building blocks are [`poly`] (the bi-graded ring `Z[x, y, z, {t_m}]`
//! and its specialization `Q[x, y, z]`), [`divpow`] (divided powers and the
//! contraction action), [`catalecticant`] (`T`, `δ`, `Q`, `λ`) and
//! [`resolution`] (the maps `b1`, `b2`, `b3`). [`verify`] checks the result.

pub mod catalecticant;
pub mod cli;
pub mod divpow;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod resolution;
pub mod verify;

pub use catalecticant::Catalecticant;
pub use divpow::{contract, pair, DividedElement, InverseSystem};
pub use error::{Error, Result};
pub use matrix::{Label, PolyMatrix};
pub use poly::{BiDegree, Monomial, Polynomial, Ring, TVar};
pub use resolution::{build_resolution, ResolutionComplex};

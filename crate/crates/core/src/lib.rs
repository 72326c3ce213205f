//! Causal structure of de Sitter space-time `S(R)`, the one-sheeted
//! hyperboloid `Σ x_k² − t² = R²` in Minkowski space `Mink^{n+1}`.
//!
//! The crate covers the Lorentz form and its isometries ([`minkowski`]), the
//! hyperboloid with its world lines and null rulings ([`desitter`]), causal
//! pasts, futures and event horizons of an eternal observer ([`causal`]),
//! the antipodal quotient ([`quotient`]), and SVG/CSV figures of the
//! observer's horizon ([`figure`]).

pub mod causal;
pub mod desitter;
pub mod error;
pub mod figure;
pub mod minkowski;
pub mod quotient;
pub mod sampling;

pub use error::{Error, Result};

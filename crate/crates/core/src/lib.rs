//! Exact-arithmetic toolkit for tilt-stability on P^3 and hypersurfaces:
//! Chern-character algebra, numerical walls in the (beta, alpha)-plane,
//! Bogomolov-Gieseker-type inequality checks, and the derivation
//! pipelines behind the strengthened bound functions.

pub mod arith;
pub mod bounds;
pub mod chern;
pub mod cli;
pub mod error;
pub mod figures;
pub mod geometry;
pub mod tilt;

pub use error::{Error, Result};

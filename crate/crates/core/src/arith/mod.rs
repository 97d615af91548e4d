//! Exact scalar and function arithmetic: rationals, quadratic
//! polynomials, piecewise-quadratic functions, and quadratic surds.

pub mod piecewise;
pub mod poly;
pub mod rational;
pub mod surd;

pub use piecewise::PiecewiseQuad;
pub use poly::{quad_nonneg_on, Poly, QuadPoly};
pub use rational::{rat, Rational};
pub use surd::{surd_compare, QuadSurd};

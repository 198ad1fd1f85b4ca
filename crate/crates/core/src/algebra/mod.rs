//! Exact rational arithmetic and multivariate polynomial algebra.

pub mod interpolate;
pub mod matrix;
pub mod polynomial;
pub mod rational;
pub mod series;

pub use interpolate::{grid_points, interpolate};
pub use polynomial::{Polynomial, PolynomialJson, N_SYMBOL};
pub use rational::{format_rational, parse_rational};
pub use series::truncated_exp;

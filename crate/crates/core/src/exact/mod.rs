//! Exact rational arithmetic, linear algebra, polynomials and convex geometry.

pub mod convex;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use convex::{closest_point_to_origin, hull_origin_position, HullPosition, PolytopeQuery};
pub use matrix::{rref_kernel, RatMatrix};
pub use poly::{determinant, monomials, poly_gcd_univariate, MultiPoly};
pub use rational::Rational;

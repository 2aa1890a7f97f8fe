//! Exact computations for stability of linear actions of tori, graded unipotent
//! groups and `SL(2)` on projective space.

pub mod action;
pub mod error;
pub mod exact;
pub mod graded;
pub mod invariants;
pub mod torus;

pub use action::{
    aut_p112_example, jet_group_example, jordan_embed_ga, parse_action, parse_document, serialize_action,
    serialize_document, ActionDocument, Bounds, GradingData, NamedPoint, ProjectivePoint, TorusWeights,
    UnipotentData, WeightedAction,
};
pub use error::{Error, ErrorKind};
pub use exact::{
    closest_point_to_origin, hull_origin_position, poly_gcd_univariate, rref_kernel, HullPosition, MultiPoly,
    PolytopeQuery, RatMatrix, Rational,
};

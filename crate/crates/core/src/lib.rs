//! Exact computations with Hilbert and Funk geometries on polyhedral cones
//! and polytopes: distances, tangent cones, horofunction boundaries and the
//! isometry group of the simplex.
//!
//! All arithmetic is over the rationals. Distances are reported as
//! [`LogValue`]s holding the exact argument of the logarithm.

pub mod cone;
pub mod error;
pub mod horo;
pub mod linalg;
pub mod lp;
pub mod metric;
pub mod rational;
pub mod shapes;
pub mod simplex;
pub mod tangent;

pub use cone::{
    cone_from_polytope, face_of, lift, same_face, Face, HPolytope, IndexSet, LinearFunctional, PointClass, PolyCone,
};
pub use error::{GeomError, Result};
pub use horo::{
    busemann_eval, busemann_from_line, classify_part, detour_cost, detour_metric, enumerate_parts, horolimit_residual,
    part_dimension, part_of, BusemannPoint, PartClass, PartId,
};
pub use metric::{
    face_funk, face_hilbert, face_reverse_funk, funk, hilbert_cone, hilbert_cross_ratio, m_ratio, reverse_funk,
    variation_norm, LogMetric, LogValue,
};
pub use rational::{format_point, format_rational, parse_point, parse_rational, Point, Rational};
pub use simplex::{SimplexIsometry, VClass};
pub use tangent::{hilbert_dimension, tangent_cone, tangent_family, TangentFamilyEntry};

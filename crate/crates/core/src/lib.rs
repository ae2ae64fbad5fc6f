//! Hyperbolic triangles formed by three semicircles in the upper half-plane.
//!
//! Three axis-centered circles cut out a curvilinear triangle whose sides are
//! half-plane geodesics. This crate measures that triangle from the Euclidean
//! radius-angles alone, evaluates the hyperbolic laws of cosines and sines as
//! residuals, cross-checks every length and angle against formula-free oracles,
//! and solves the inverse problem of realizing prescribed side lengths.

// Checks are written as `!(x <= tol)` on purpose so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arc_trig;
pub mod config_io;
pub mod error;
pub mod foundations;
pub mod geometry;
pub mod laws;
pub mod numeric;
pub mod oracle;
pub mod report;
pub mod sampler;
pub mod solver;
pub mod svg;

pub use arc_trig::{
    arc_hyp, relation_residuals, side_lengths, triangle_measures, vertex_angles, wv_table, ArcHyp,
    RelationResiduals, TriangleMeasures, WVTable,
};
pub use config_io::{parse_config, ConfigFile};
pub use error::{Error, Result};
pub use foundations::{
    key_formula_phi, parallel_angle, right_triangle_from_phi, right_triangle_from_xi, tangent_construction,
};
pub use geometry::{
    build_triple, center_distances, intersect_semicircles, projections, radius_angles, Orientation, RadiusAngles,
    Semicircle, TripleConfig, UpperHalfPoint,
};
pub use laws::{law_report, LawReport};
pub use oracle::{distance_closed, geodesic_length_quadrature, tangent_angle, QuadratureResult};
pub use report::{check, run_report, run_reports, Report, Thresholds};
pub use sampler::{sample_config, SampleBatch};
pub use solver::{solve_sides, Gauge, SolveRequest};
pub use svg::render_svg;

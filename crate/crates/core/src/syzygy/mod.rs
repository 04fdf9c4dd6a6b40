//! Clique resolutions of the trivial module over the monoid algebra
//! `k[M(E,I)]`, their exactness and the resulting global dimension.

mod field;
mod resolution;

pub use field::{rank_mod_p, FieldSpec};
pub use resolution::{
    build_resolution, ext_dimensions, global_dimension_report, inspect_exactness, verify_exactness,
    CliqueResolution, ExactnessSummary, ExactnessWitness, GldReport, GradedPieceReport,
};

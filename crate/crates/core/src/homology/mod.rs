//! Integral chain complexes, Smith normal form and homology of nerves.

mod chain;
mod group;
pub mod int;
mod matrix;
mod nerve;
mod snf;

pub use chain::{homology, HomologyResult, IntChainComplex};
pub use group::FGAbGroup;
pub use matrix::{DenseMatrix, IntMatrix, SparseMatrix};
pub use nerve::{
    cohomology_constant, cohomology_from_homology, is_acyclic, nerve_complex, nerve_homology,
    AcyclicityCertificate,
};
pub use snf::{
    invariant_factors, smith_normal_form, sparse_invariant_factors, sparse_rank, SmithForm,
};

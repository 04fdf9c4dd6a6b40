//! Diagrams of abelian groups over finite categories and their derived
//! limits `limⁿ`.

mod cochain;
mod diagram;
mod json;
pub mod random;
mod subquotient;

pub use cochain::{
    cochain_complex, lim_n, normalization_agreement, CochainComplex, NormalizationReport,
};
pub use diagram::AbDiagram;
pub use json::{CategorySpec, DiagramDocument, ValueSpec};

use std::sync::Arc;

use crate::fincat::FinCat;
use crate::homology::FGAbGroup;

/// `ΔA` on `c`.
pub fn constant_diagram(c: &Arc<FinCat>, a: &FGAbGroup) -> AbDiagram {
    AbDiagram::constant(c.clone(), a)
}

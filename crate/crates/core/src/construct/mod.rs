//! Constructions: finite fields and Reed-Solomon families, random choice with
//! alterations, and the column-condition matrix counts behind it.

mod alteration;
mod field;
mod matrices;
mod reed_solomon;

pub use alteration::{optimal_p, random_with_alterations, AlterationTrace, ALTERATION_SIZE_CAP};
pub use field::{Field, FieldElement, FieldSpec};
pub use matrices::{column_allowed, count_matrices, CountMode, MATRIX_ENUM_CAP};
pub use reed_solomon::{reed_solomon_family, rs_degree, RsOptions};

//! Bulk weight schemes, cross vertices and the Yang-Baxter equation.

mod cross;
mod relations;
mod scheme;
mod ybe;

pub use cross::{CrossKind, CrossWeights, Orientation};
pub use relations::{check_weight_relations, RelationCheck, RelationReport};
pub use scheme::{ff_scheme, scheme_by_name, FreeFermionic, Uniform, WeightScheme};
pub use ybe::{
    cross_factor_candidates, generic_guards, solve_cross_point, solve_cross_symbolic, ybe_matrix, ybe_nullity,
    ybe_residuals, ybe_residuals_with, ybe_sites, Wiring,
};

//! Free-fermionic applications: the DWBC product formula, the `Z_(alpha, delta)`
//! evaluation, asymptotic symmetry in column parameters, and the factorial
//! Schur dictionary.

mod alternant;
mod calibrate;
mod dwbc;
mod proposition;
mod symmetry;

pub use alternant::{classical_schur, factorial_schur_alternant, shifted_power, PartitionShape, SignConvention};
pub use calibrate::{
    assertion_instances, calibrate_schur_specialization, calibration_instances, convention_shape, convention_space,
    match_convention, monomial_quotient, pinned_assertions, specialized_z, staircase_prefactor, CalibrationInstance, CalibrationReport,
    Convention, InstanceOutcome, PINNED_CONVENTION,
};
pub use dwbc::{binomial_candidates, dwbc_product_candidate, dwbc_product_candidate_factors, factor_dwbc, trial_factor, FactorReport};
pub use proposition::{
    check_proposition_at, z_alpha_delta_bracket_at, z_alpha_delta_candidate_at, z_alpha_delta_model, BracketSource,
    PropositionCheck,
};
pub use symmetry::{asymptotic_symmetry_check, SymmetryReport};

#[cfg(test)]
mod tests;

//! Independent oracles and theorem checks.

pub mod checks;
pub mod dims;
pub mod identities;
pub mod matrices;
pub mod special;
pub mod suite;

pub use checks::{
    bcd_prefactor, divisibility_power, refined_pair_identities, verify_det_form,
    verify_divisibility, verify_equidistribution, verify_factorization,
};
pub use dims::{
    c_lambda_gap, dim_n_minus, dimension_mismatch, one_dimensional, total_dimension,
    verify_total_dimension, DimensionReport,
};
pub use identities::{check_identity, denom_product, stair_so_odd_literal, Identity};
pub use matrices::{build_matrix, MatrixKind};
pub use special::{efw_check, efw_degrees, efw_lambda, efw_pure, special_check, Special};
pub use suite::{
    run_suite, sample_bcd, sample_degree_sequences, sample_type_a, suite_jobs, verify_instance,
    Job, SuiteConfig,
};

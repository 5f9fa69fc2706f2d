// SPDX-License-Identifier: Apache-2.0

//! Structure of symmetric ELAs: the `d`-complex, decomposition into a
//! Leibniz couple plus a cocycle, reconstruction, and positive quadratic
//! ELAs.

mod complex;
mod decomposition;
mod quadratic;

pub use complex::{
    bilinear_from_flat, d1, d1_matrix, d2, d2_matrix, d_cohomology, d_cohomology_unconstrained,
    flatten_bilinear, flatten_trilinear, DCochain1, DCochain2, DCohomology,
};
pub use decomposition::{
    decompose, decompose_with_section, hemisemidirect_ela, reconstruct, split_cocycle_check,
    validate, Decomposition, Reconstruction, SourceFrame,
};
pub use quadratic::{
    build_positive_quadratic, is_invariant_form, is_left_ideal, left_ideal_generated,
    orthogonal_left_ideal, positive_quadratic_hypotheses, PositiveQuadraticData,
};

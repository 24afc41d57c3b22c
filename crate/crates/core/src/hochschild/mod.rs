//! Hochschild cochains, their bigraded decomposition over a split algebra,
//! and Hochschild homology.

mod bigraded;
mod cochains;
mod complex;
mod homology;

pub use bigraded::{
    check_reassembly, column_complex_direct, column_h0_direct, decompose_bigraded, verify_vertical_independence, vertical_reference,
    BigradedComplex, WordSpace,
};
pub use cochains::{apply_coboundary, coboundary_matrix, default_degree_cap, hochschild_complex};
pub(crate) use cochains::{digits, pow, word_index};
pub use complex::{ChainComplex, CochainComplex, CohomologyBasis};
pub use homology::{hochschild_boundary, hochschild_chain_complex, hochschild_homology_dims};

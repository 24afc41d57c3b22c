//! Exact linear algebra: rank, kernel, image membership and subspaces.

mod echelon;
mod matrix;
mod sparse;
mod subspace;

pub use echelon::{Echelon, Reduction};
pub use matrix::{Matrix, SPARSE_DENSITY};
pub use sparse::SparseVec;
pub use subspace::Subspace;

/// `rank(m)`.
pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

/// A basis of `ker(m)`.
pub fn kernel_basis(m: &Matrix) -> Vec<SparseVec> {
    m.kernel_basis()
}

/// A preimage of `v` under `m`, if one exists.
pub fn member_of_image(m: &Matrix, v: &SparseVec) -> crate::error::Result<Option<SparseVec>> {
    m.member_of_image(v)
}

/// `dim(ambient / span(vectors))` for vectors in `k^ambient`.
pub fn quotient_dim(field: crate::field::Field, ambient: usize, vectors: &[SparseVec]) -> usize {
    ambient - Subspace::span(field, ambient, vectors.iter().cloned()).dim()
}

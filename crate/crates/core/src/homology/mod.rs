//! Exact reduced simplicial homology over prime fields.

mod chain;
mod field;
mod matrix;

pub use chain::{boundary_matrix, faces_of_dim, reduced_betti, reduced_betti_of_faces, ReducedBetti};
pub use field::FieldSpec;
pub use matrix::{rank, rank_dense, rank_sparse, SparseMatrix};

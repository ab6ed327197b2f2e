//! Facet ideals of chessboard complexes and the machinery needed to study
//! them: exact monomial-ideal arithmetic, simplicial complexes, reduced
//! homology over prime fields, graded Betti tables and the invariants read
//! off them (regularity, projective dimension, depth, Hilbert series).
//!
//! Everything here is exact integer or prime-field arithmetic. Values are
//! immutable once built and every public operation is a pure function.

pub mod chessboard;
mod error;
pub mod homology;
pub mod invariants;
pub mod ring;
pub mod simplicial;
mod subset;

pub use chessboard::{fixture_ideal, Board, Fixture, PrimeProfile};
pub use error::{Error, Result};
pub use homology::{FieldSpec, SparseMatrix};
pub use invariants::{BettiTable, InvariantReport, Subject};
pub use ring::{Monomial, MonomialIdeal, PathKind, VariableSet};
pub use simplicial::SimplicialComplex;
pub use subset::Subset;

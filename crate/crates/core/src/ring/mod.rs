//! Monomials over a fixed ordered variable set and monomial ideals with
//! exact ideal arithmetic.

mod ideal;
mod monomial;
mod path;
mod text;

pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, VariableSet};
pub use path::{path_ideal, PathKind};
pub use text::{parse_ideal, write_ideal};

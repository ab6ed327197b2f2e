use std::sync::Arc;

use super::{Monomial, MonomialIdeal, VariableSet};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Path,
    Cycle,
}

/// The ideal of `m`-vertex paths in a path or cycle on `n` vertices
/// `x1, …, xn`. Cycle windows wrap around modulo `n`.
pub fn path_ideal(kind: PathKind, n: usize, m: usize) -> Result<MonomialIdeal> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "path length {m} must lie in 1..={n}"
        )));
    }
    let starts = match kind {
        PathKind::Path => n - m + 1,
        PathKind::Cycle => n,
    };
    let gens = (0..starts)
        .map(|i| Monomial::from_support(n, (i..i + m).map(|v| v % n)))
        .collect();
    MonomialIdeal::min_gens(gens, Arc::new(VariableSet::new(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_windows() {
        let p = path_ideal(PathKind::Path, 4, 2).unwrap();
        assert_eq!(p.display_gens(), vec!["x1*x2", "x2*x3", "x3*x4"]);
    }

    #[test]
    fn cycle_windows_wrap() {
        let c = path_ideal(PathKind::Cycle, 4, 3).unwrap();
        let mut shown = c.display_gens();
        shown.sort();
        assert_eq!(shown, vec!["x1*x2*x3", "x1*x2*x4", "x1*x3*x4", "x2*x3*x4"]);
        assert_eq!(path_ideal(PathKind::Cycle, 6, 2).unwrap().gens().len(), 6);
    }

    #[test]
    fn rejects_long_paths() {
        assert!(path_ideal(PathKind::Path, 3, 4).is_err());
        assert!(path_ideal(PathKind::Cycle, 3, 0).is_err());
    }
}

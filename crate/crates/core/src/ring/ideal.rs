use std::sync::Arc;

use super::{Monomial, VariableSet};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result, Subset};

/// A monomial ideal stored by its canonical minimal generating set.
///
/// Generators form a divisibility antichain sorted by ascending degree and
/// then descending lex order, so two ideals are equal exactly when their
/// generator lists are. The zero ideal has no generators; the unit ideal has
/// the single generator `1`.
#[derive(Debug, Clone)]
pub struct MonomialIdeal {
    ambient: Arc<VariableSet>,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient)
            && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

/// Reduce `raw` to its minimal generators in canonical order.
fn minimalize(mut raw: Vec<Monomial>) -> Vec<Monomial> {
    raw.sort_by(Monomial::cmp_canonical);
    raw.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for m in raw {
        // anything dividing m has degree <= deg m and is already kept
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `raw`, canonicalized. An empty list gives the
    /// zero ideal.
    pub fn min_gens(raw: Vec<Monomial>, ambient: Arc<VariableSet>) -> Result<Self> {
        let n = ambient.count();
        if let Some(bad) = raw.iter().find(|m| m.nvars() != n) {
            return Err(Error::AmbientMismatch {
                left: n,
                right: bad.nvars(),
            });
        }
        Ok(MonomialIdeal {
            ambient,
            gens: minimalize(raw),
        })
    }

    pub fn zero(ambient: Arc<VariableSet>) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: Arc<VariableSet>) -> Self {
        let n = ambient.count();
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::one(n)],
        }
    }

    /// Squarefree ideal generated by the given supports.
    pub fn from_subsets(
        subsets: impl IntoIterator<Item = Subset>,
        ambient: Arc<VariableSet>,
    ) -> Result<Self> {
        let n = ambient.count();
        if n > 64 {
            return Err(Error::TooManyVariables(n));
        }
        let raw = subsets
            .into_iter()
            .map(|s| {
                if s.is_subset(Subset::full(n)) {
                    Ok(Monomial::from_subset(n, s))
                } else {
                    Err(Error::OutOfRange(format!("{s:?} outside {n} variables")))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::min_gens(raw, ambient)
    }

    pub fn ambient(&self) -> &Arc<VariableSet> {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.count()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.nvars() == self.nvars() && self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ambient.count() != other.ambient.count() {
            return Err(Error::AmbientMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    fn check_monomial(&self, f: &Monomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::AmbientMismatch {
                left: self.nvars(),
                right: f.nvars(),
            });
        }
        Ok(())
    }

    fn with_gens(&self, raw: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient.clone(),
            gens: minimalize(raw),
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        Ok(self.with_gens(self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    /// `self + (f)`.
    pub fn adjoin(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(f)?;
        let mut raw = self.gens.clone();
        raw.push(f.clone());
        Ok(self.with_gens(raw))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.zip_with(b, |x, y| x.checked_add(y).expect("exponent overflow")));
            }
        }
        Ok(self.with_gens(raw))
    }

    /// The `t`-th power, `t >= 1`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self : f` for a monomial `f`.
    pub fn colon_by_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(f)?;
        Ok(self.with_gens(
            self.gens
                .iter()
                .map(|u| u.zip_with(f, u32::saturating_sub))
                .collect(),
        ))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut raw = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.zip_with(b, u32::max));
            }
        }
        Ok(self.with_gens(raw))
    }

    /// `self : other`, the intersection of the colons by each generator of
    /// `other`. Colon by the zero ideal is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut acc = MonomialIdeal::unit(self.ambient.clone());
        for g in &other.gens {
            acc = acc.intersection(&self.colon_by_monomial(g)?)?;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Indices of variables dividing some generator, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars()];
        for g in &self.gens {
            for v in g.support() {
                seen[v] = true;
            }
        }
        (0..self.nvars()).filter(|&v| seen[v]).collect()
    }

    /// Generator supports as packed subsets, for squarefree ideals on at
    /// most 64 variables.
    pub fn gen_subsets(&self) -> Result<Vec<Subset>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.nvars() > 64 {
            return Err(Error::TooManyVariables(self.nvars()));
        }
        Ok(self
            .gens
            .iter()
            .map(|g| Subset::from_indices(g.support()))
            .collect())
    }

    /// The ideal generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        self.with_gens(
            self.gens
                .iter()
                .map(|g| g.zip_with(g, |a, _| a.min(1)))
                .collect(),
        )
    }

    fn require_squarefree_proper(&self) -> Result<()> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if !self.is_proper_nonzero() {
            return Err(Error::ZeroOrUnitIdeal);
        }
        Ok(())
    }

    /// Minimal primes of a squarefree ideal, each given by its variable set.
    /// These are the minimal vertex covers of the facet complex.
    pub fn minimal_primes(&self) -> Result<Vec<Subset>> {
        self.require_squarefree_proper()?;
        SimplicialComplex::facet_complex(self)?.minimal_vertex_covers()
    }

    /// The ideal generated by the variable products of the minimal primes.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        let primes = self.minimal_primes()?;
        MonomialIdeal::from_subsets(primes, self.ambient.clone())
    }

    /// Relabel variable `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        let n = self.nvars();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidArgument("not a permutation of the variables".into()));
        }
        Ok(self.with_gens(self.gens.iter().map(|g| g.permute(perm)).collect()))
    }

    /// Generators rendered with the ambient labels.
    pub fn display_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ambient.format_monomial(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board_vars(m: usize, n: usize) -> Arc<VariableSet> {
        let labels = (1..=m).flat_map(|i| (1..=n).map(move |j| format!("x{i}{j}")));
        Arc::new(VariableSet::with_labels(labels).unwrap())
    }

    fn mono(vars: &VariableSet, text: &str) -> Monomial {
        let mut exps = vec![0; vars.count()];
        for part in text.split('*') {
            let (name, e) = match part.split_once('^') {
                Some((n, e)) => (n, e.parse().unwrap()),
                None => (part, 1),
            };
            exps[vars.index_of(name).unwrap()] += e;
        }
        Monomial::new(exps)
    }

    fn ideal(vars: &Arc<VariableSet>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::min_gens(gens.iter().map(|g| mono(vars, g)).collect(), vars.clone()).unwrap()
    }

    /// Keep every monomial not strictly divisible by another input.
    fn pruning_oracle(raw: &[Monomial]) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Vec::new();
        for (i, a) in raw.iter().enumerate() {
            let dominated = raw.iter().enumerate().any(|(j, b)| {
                j != i && b.divides_unchecked(a) && (b != a || j < i)
            });
            if !dominated {
                out.push(a.clone());
            }
        }
        out
    }

    #[test]
    fn min_gens_prunes_multiples() {
        let v = board_vars(3, 3);
        let i = ideal(&v, &["x11*x22", "x11*x22*x33"]);
        assert_eq!(i.display_gens(), vec!["x11*x22"]);
        assert!(MonomialIdeal::min_gens(vec![], v.clone()).unwrap().is_zero());
    }

    #[test]
    fn min_gens_matches_pairwise_oracle() {
        let v = board_vars(2, 3);
        let raw: Vec<Monomial> = ["x22", "x23", "x12*x21", "x12*x23", "x13*x21", "x13*x22"]
            .iter()
            .map(|g| mono(&v, g))
            .collect();
        let i = MonomialIdeal::min_gens(raw.clone(), v.clone()).unwrap();
        let mut oracle = pruning_oracle(&raw);
        oracle.sort_by(Monomial::cmp_canonical);
        assert_eq!(i.gens(), oracle.as_slice());
        assert_eq!(i.display_gens(), vec!["x22", "x23", "x12*x21", "x13*x21"]);
    }

    #[test]
    fn sums() {
        let v = board_vars(2, 2);
        let a = ideal(&v, &["x11*x22"]);
        let b = ideal(&v, &["x12*x21"]);
        let s = a.sum(&b).unwrap();
        assert_eq!(s.gens().len(), 2);
        assert_eq!(a.sum(&MonomialIdeal::zero(v.clone())).unwrap(), a);
        assert!(a.sum(&MonomialIdeal::unit(v.clone())).unwrap().is_unit());
        let other = MonomialIdeal::zero(Arc::new(VariableSet::new(3)));
        assert!(a.sum(&other).is_err());
    }

    #[test]
    fn square_of_two_quadrics() {
        let v = board_vars(2, 2);
        let i = ideal(&v, &["x11*x22", "x12*x21"]);
        let sq = i.power(2).unwrap();
        let expected = ideal(&v, &["x11^2*x22^2", "x11*x12*x21*x22", "x12^2*x21^2"]);
        assert_eq!(sq, expected);
        assert_eq!(i.power(1).unwrap(), i);
        assert!(i.power(0).is_err());
    }

    #[test]
    fn square_of_delta_2_3_against_pairwise_products() {
        let v = board_vars(2, 3);
        let i = ideal(
            &v,
            &["x11*x22", "x11*x23", "x12*x21", "x12*x23", "x13*x21", "x13*x22"],
        );
        // all 21 unordered products (with repetition), then pruning
        let g = i.gens();
        let mut raw = Vec::new();
        for a in 0..g.len() {
            for b in a..g.len() {
                raw.push(g[a].mul(&g[b]).unwrap());
            }
        }
        assert_eq!(raw.len(), 21);
        let mut oracle = pruning_oracle(&raw);
        oracle.sort_by(Monomial::cmp_canonical);
        oracle.dedup();
        assert_eq!(i.power(2).unwrap().gens(), oracle.as_slice());
    }

    #[test]
    fn colon_examples() {
        let v = board_vars(2, 3);
        let f = ideal(
            &v,
            &["x11*x22", "x11*x23", "x12*x21", "x12*x23", "x13*x21", "x13*x22"],
        );
        let c = f.colon_by_monomial(&mono(&v, "x11")).unwrap();
        assert_eq!(c, ideal(&v, &["x22", "x23", "x12*x21", "x13*x21"]));
        assert_eq!(f.colon_by_monomial(&Monomial::one(6)).unwrap(), f);
        let w = board_vars(3, 3);
        let p = ideal(&w, &["x11*x22"]);
        assert!(p.colon_by_monomial(&mono(&w, "x11*x22*x33")).unwrap().is_unit());
    }

    #[test]
    fn colon_by_ideal_intersects() {
        let v = Arc::new(VariableSet::new(3));
        let i = ideal(&v, &["x1*x2", "x3"]);
        let j = ideal(&v, &["x1", "x3"]);
        // (x1x2, x3):x1 = (x2, x3), (x1x2, x3):x3 = (1)
        assert_eq!(i.colon_ideal(&j).unwrap(), ideal(&v, &["x2", "x3"]));
        assert!(i.colon_ideal(&MonomialIdeal::zero(v.clone())).unwrap().is_unit());
    }

    #[test]
    fn squarefree_and_support() {
        let v = board_vars(3, 3);
        let sq = ideal(&v, &["x11^2*x22"]);
        assert!(!sq.is_squarefree());
        assert!(MonomialIdeal::zero(v.clone()).support().is_empty());
        assert_eq!(sq.support(), vec![0, 4]);
        assert_eq!(sq.radical(), ideal(&v, &["x11*x22"]));
    }

    #[test]
    fn alexander_dual_of_two_disjoint_quadrics() {
        let v = board_vars(2, 2);
        let i = ideal(&v, &["x11*x22", "x12*x21"]);
        let dual = i.alexander_dual().unwrap();
        assert_eq!(dual, ideal(&v, &["x11*x12", "x21*x22", "x11*x21", "x12*x22"]));
        assert_eq!(dual.alexander_dual().unwrap(), i);

        let two = Arc::new(VariableSet::new(2));
        let e = ideal(&two, &["x1*x2"]);
        assert_eq!(e.alexander_dual().unwrap(), ideal(&two, &["x1", "x2"]));
        assert_eq!(ideal(&two, &["x1^2"]).alexander_dual(), Err(Error::NotSquarefree));
        assert_eq!(
            MonomialIdeal::zero(two.clone()).minimal_primes(),
            Err(Error::ZeroOrUnitIdeal)
        );
    }

    #[test]
    fn permutation_relabels() {
        let v = Arc::new(VariableSet::new(3));
        let i = ideal(&v, &["x1*x2", "x3^2"]);
        let p = i.permute(&[2, 0, 1]).unwrap();
        assert_eq!(p, ideal(&v, &["x3*x1", "x2^2"]));
        assert!(i.permute(&[0, 0, 1]).is_err());
    }
}

//! Simplicial complexes stored as facet antichains over a labelled vertex set.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use crate::ring::{MonomialIdeal, VariableSet};
use crate::{Error, Result, Subset};

/// A simplicial complex given by its facets.
///
/// Facets are an inclusion antichain sorted lexicographically by their
/// sorted vertex lists. The void complex has no facets; the irrelevant
/// complex has the single empty facet.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: Arc<VariableSet>,
    facets: Vec<Subset>,
    faces: OnceLock<Arc<Vec<Vec<Subset>>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

/// Drop every set contained in another and sort the rest lexicographically.
pub(crate) fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.cmp_lex(*b));
    kept
}

/// All inclusion-minimal sets meeting every member of `family`.
///
/// Depth-first: branch on the vertices of the first set not yet hit, with
/// vertices tried in earlier sibling branches forbidden, then keep only the
/// covers in which every vertex has a private set.
pub(crate) fn minimal_transversals(family: &[Subset]) -> Vec<Subset> {
    fn search(family: &[Subset], cover: Subset, forbidden: Subset, out: &mut Vec<Subset>) {
        let Some(&open) = family.iter().find(|s| !s.intersects(cover)) else {
            out.push(cover);
            return;
        };
        let mut forbidden = forbidden;
        for v in open.difference(forbidden).iter() {
            search(family, cover.with(v), forbidden, out);
            forbidden = forbidden.with(v);
        }
    }

    let mut found = Vec::new();
    search(family, Subset::EMPTY, Subset::EMPTY, &mut found);
    let mut minimal: Vec<Subset> = found
        .into_iter()
        .filter(|&c| {
            c.iter().all(|v| {
                family
                    .iter()
                    .any(|s| s.intersection(c) == Subset::singleton(v))
            })
        })
        .collect();
    minimal.sort_by(|a, b| a.cmp_lex(*b));
    minimal.dedup();
    minimal
}

/// Result of the induced-matching search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatching {
    /// `|F_1 ∪ … ∪ F_k| − k`, maximized; 0 for the empty matching.
    pub value: usize,
    pub witness: Vec<Subset>,
}

impl SimplicialComplex {
    pub fn from_facets(
        vertices: Arc<VariableSet>,
        sets: impl IntoIterator<Item = Subset>,
    ) -> Result<Self> {
        let n = vertices.count();
        if n > 64 {
            return Err(Error::TooManyVariables(n));
        }
        let sets: Vec<Subset> = sets.into_iter().collect();
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(Subset::full(n))) {
            return Err(Error::OutOfRange(format!("{bad:?} outside {n} vertices")));
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximal_sets(sets),
            faces: OnceLock::new(),
        })
    }

    pub fn void(vertices: Arc<VariableSet>) -> Result<Self> {
        Self::from_facets(vertices, [])
    }

    pub fn irrelevant(vertices: Arc<VariableSet>) -> Result<Self> {
        Self::from_facets(vertices, [Subset::EMPTY])
    }

    /// The full simplex on all vertices.
    pub fn simplex(vertices: Arc<VariableSet>) -> Result<Self> {
        let full = Subset::full(vertices.count().min(64));
        Self::from_facets(vertices, [full])
    }

    /// The complex whose facets are the generator supports of a squarefree
    /// ideal.
    pub fn facet_complex(ideal: &MonomialIdeal) -> Result<Self> {
        let gens = ideal.gen_subsets()?;
        Self::from_facets(ideal.ambient().clone(), gens)
    }

    /// The Stanley-Reisner complex of a squarefree proper ideal: subsets
    /// whose product avoids the ideal. Its facets are the complements of the
    /// minimal primes.
    pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.is_unit() {
            return Err(Error::ZeroOrUnitIdeal);
        }
        if ideal.is_zero() {
            return Self::simplex(ideal.ambient().clone());
        }
        let full = Subset::full(ideal.nvars());
        let primes = ideal.minimal_primes()?;
        Self::from_facets(
            ideal.ambient().clone(),
            primes.into_iter().map(|p| full.difference(p)),
        )
    }

    pub fn vertices(&self) -> &Arc<VariableSet> {
        &self.vertices
    }

    pub fn facets(&self) -> &[Subset] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [Subset::EMPTY]
    }

    /// Largest facet size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains_face(&self, face: Subset) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face grouped by cardinality: entry `k` lists the faces with `k`
    /// vertices in ascending bit order. Computed once per complex.
    pub fn faces_by_size(&self) -> Arc<Vec<Vec<Subset>>> {
        self.faces
            .get_or_init(|| {
                let top = self.facets.iter().map(|f| f.len()).max();
                let Some(top) = top else {
                    return Arc::new(Vec::new());
                };
                let mut seen: HashSet<Subset> = HashSet::new();
                for f in &self.facets {
                    for s in f.subsets() {
                        seen.insert(s);
                    }
                }
                let mut by_size = vec![Vec::new(); top + 1];
                for s in seen {
                    by_size[s.len()].push(s);
                }
                for layer in &mut by_size {
                    layer.sort_unstable();
                }
                Arc::new(by_size)
            })
            .clone()
    }

    /// `Δ|_A`: the faces of Δ contained in `a`.
    pub fn induced_subcomplex(&self, a: Subset) -> Result<Self> {
        if !a.is_subset(Subset::full(self.vertices.count())) {
            return Err(Error::OutOfRange(format!(
                "{a:?} is not a subset of the {} vertices",
                self.vertices.count()
            )));
        }
        Self::from_facets(
            self.vertices.clone(),
            self.facets.iter().map(|f| f.intersection(a)).collect::<Vec<_>>(),
        )
    }

    /// The facet ideal: one squarefree generator per facet.
    pub fn facet_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_subsets(self.facets.iter().copied(), self.vertices.clone())
    }

    /// The Stanley-Reisner ideal, generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self) -> Result<MonomialIdeal> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        // N is a non-face iff it meets the complement of every facet
        let full = Subset::full(self.vertices.count());
        let complements: Vec<Subset> = self.facets.iter().map(|f| full.difference(*f)).collect();
        MonomialIdeal::from_subsets(minimal_transversals(&complements), self.vertices.clone())
    }

    /// All minimal vertex covers, in lexicographic order.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<Subset>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(minimal_transversals(&self.facets))
    }

    /// Whether `m` is a set of pairwise-disjoint facets such that no other
    /// facet lies inside their union (the clutter notion, which is the one
    /// the regularity lower bound needs).
    pub fn is_induced_matching(&self, m: &[Subset]) -> bool {
        if !m.iter().all(|f| self.facets.contains(f)) {
            return false;
        }
        for (i, a) in m.iter().enumerate() {
            if m[i + 1..].iter().any(|b| a.intersects(*b)) {
                return false;
            }
        }
        let union = m.iter().fold(Subset::EMPTY, |acc, f| acc.union(*f));
        self.facets
            .iter()
            .all(|g| !g.is_subset(union) || m.contains(g))
    }

    /// Best `|∪F_i| − k` over induced matchings of at most `k_max` facets.
    /// Matchings are visited by size, then lexicographically by facet index;
    /// the first one reaching the maximum is the witness.
    pub fn induced_matching_bound(&self, k_max: usize) -> Result<InducedMatching> {
        if k_max == 0 {
            return Err(Error::InvalidArgument("k_max must be >= 1".into()));
        }
        let mut best = InducedMatching {
            value: 0,
            witness: Vec::new(),
        };
        for k in 1..=k_max.min(self.facets.len()) {
            let mut chosen = Vec::with_capacity(k);
            self.matching_search(k, 0, Subset::EMPTY, &mut chosen, &mut best);
        }
        Ok(best)
    }

    fn matching_search(
        &self,
        k: usize,
        start: usize,
        used: Subset,
        chosen: &mut Vec<Subset>,
        best: &mut InducedMatching,
    ) {
        if chosen.len() == k {
            let value = used.len() as isize - k as isize;
            if value > best.value as isize && self.is_induced_matching(chosen) {
                *best = InducedMatching {
                    value: value as usize,
                    witness: chosen.clone(),
                };
            }
            return;
        }
        for idx in start..self.facets.len() {
            let f = self.facets[idx];
            if f.intersects(used) {
                continue;
            }
            chosen.push(f);
            self.matching_search(k, idx + 1, used.union(f), chosen, best);
            chosen.pop();
        }
    }

    pub fn format_facets(&self) -> Vec<String> {
        self.facets
            .iter()
            .map(|f| self.vertices.format_subset(*f))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(n: usize) -> Arc<VariableSet> {
        Arc::new(VariableSet::new(n))
    }

    fn s(ix: &[usize]) -> Subset {
        Subset::from_indices(ix.iter().copied())
    }

    #[test]
    fn from_facets_prunes_and_keeps_degenerate_forms() {
        let c = SimplicialComplex::from_facets(vars(3), [s(&[0, 1]), s(&[0])]).unwrap();
        assert_eq!(c.facets(), &[s(&[0, 1])]);
        let void = SimplicialComplex::void(vars(3)).unwrap();
        let irr = SimplicialComplex::irrelevant(vars(3)).unwrap();
        assert!(void.is_void() && !void.is_irrelevant());
        assert!(irr.is_irrelevant() && !irr.is_void());
        assert_ne!(void, irr);
        assert_eq!(irr.dimension(), Some(-1));
        assert!(SimplicialComplex::from_facets(vars(2), [s(&[2])]).is_err());
    }

    #[test]
    fn induced_subcomplexes() {
        // 2x2 board: x11=0, x12=1, x21=2, x22=3
        let d = SimplicialComplex::from_facets(vars(4), [s(&[0, 3]), s(&[1, 2])]).unwrap();
        assert_eq!(d.induced_subcomplex(s(&[0, 3])).unwrap().facets(), &[s(&[0, 3])]);
        assert!(d.induced_subcomplex(Subset::EMPTY).unwrap().is_irrelevant());
        let void = SimplicialComplex::void(vars(4)).unwrap();
        assert!(void.induced_subcomplex(Subset::EMPTY).unwrap().is_void());
        assert!(d.induced_subcomplex(s(&[4])).is_err());
    }

    #[test]
    fn stanley_reisner_round_trip_small() {
        let hollow = SimplicialComplex::from_facets(vars(3), [s(&[0, 1]), s(&[1, 2]), s(&[0, 2])])
            .unwrap();
        let i = hollow.stanley_reisner_ideal().unwrap();
        assert_eq!(i.display_gens(), vec!["x1*x2*x3"]);
        assert_eq!(SimplicialComplex::stanley_reisner_complex(&i).unwrap(), hollow);

        let full = SimplicialComplex::simplex(vars(3)).unwrap();
        assert!(full.stanley_reisner_ideal().unwrap().is_zero());
        let zero = MonomialIdeal::zero(vars(3));
        assert_eq!(SimplicialComplex::stanley_reisner_complex(&zero).unwrap(), full);

        let edge = MonomialIdeal::from_subsets([s(&[0, 1])], vars(2)).unwrap();
        let d = SimplicialComplex::stanley_reisner_complex(&edge).unwrap();
        assert_eq!(d.facets(), &[s(&[0]), s(&[1])]);
        assert_eq!(
            SimplicialComplex::void(vars(2)).unwrap().stanley_reisner_ideal(),
            Err(Error::VoidComplex)
        );
    }

    /// Brute-force minimal transversals by scanning every subset.
    fn transversal_oracle(n: usize, family: &[Subset]) -> Vec<Subset> {
        let covers: Vec<Subset> = Subset::full(n)
            .subsets()
            .filter(|c| family.iter().all(|f| f.intersects(*c)))
            .collect();
        let mut minimal: Vec<Subset> = covers
            .iter()
            .copied()
            .filter(|c| !covers.iter().any(|d| d != c && d.is_subset(*c)))
            .collect();
        minimal.sort_by(|a, b| a.cmp_lex(*b));
        minimal
    }

    #[test]
    fn covers_of_small_complexes() {
        let edge = SimplicialComplex::from_facets(vars(2), [s(&[0, 1])]).unwrap();
        assert_eq!(edge.minimal_vertex_covers().unwrap(), vec![s(&[0]), s(&[1])]);

        let d22 = SimplicialComplex::from_facets(vars(4), [s(&[0, 3]), s(&[1, 2])]).unwrap();
        let covers = d22.minimal_vertex_covers().unwrap();
        assert_eq!(covers, transversal_oracle(4, d22.facets()));
        assert_eq!(covers.len(), 4);
        assert_eq!(
            SimplicialComplex::void(vars(2)).unwrap().minimal_vertex_covers(),
            Err(Error::VoidComplex)
        );
        let irr = SimplicialComplex::irrelevant(vars(2)).unwrap();
        assert!(irr.minimal_vertex_covers().unwrap().is_empty());
    }

    #[test]
    fn transversals_match_brute_force_on_random_families() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..=8);
            let k = rng.random_range(1..=6);
            let family: Vec<Subset> = (0..k)
                .map(|_| Subset(rng.random_range(1..(1u64 << n))))
                .collect();
            assert_eq!(minimal_transversals(&family), transversal_oracle(n, &family));
        }
    }

    #[test]
    fn induced_matchings() {
        let single = SimplicialComplex::from_facets(vars(4), [s(&[0, 1, 2])]).unwrap();
        let b = single.induced_matching_bound(3).unwrap();
        assert_eq!(b.value, 2);
        assert_eq!(b.witness, vec![s(&[0, 1, 2])]);

        // two disjoint facets covering everything form an induced matching
        let d22 = SimplicialComplex::from_facets(vars(4), [s(&[0, 3]), s(&[1, 2])]).unwrap();
        let b = d22.induced_matching_bound(2).unwrap();
        assert_eq!(b.value, 2);
        assert!(d22.is_induced_matching(&b.witness));

        let void = SimplicialComplex::void(vars(2)).unwrap();
        let b = void.induced_matching_bound(3).unwrap();
        assert_eq!((b.value, b.witness.len()), (0, 0));

        // a path of three edges: {0,1},{2,3} is not induced because {1,2}
        let path =
            SimplicialComplex::from_facets(vars(4), [s(&[0, 1]), s(&[1, 2]), s(&[2, 3])]).unwrap();
        assert!(!path.is_induced_matching(&[s(&[0, 1]), s(&[2, 3])]));
        assert_eq!(path.induced_matching_bound(3).unwrap().value, 1);
    }
}

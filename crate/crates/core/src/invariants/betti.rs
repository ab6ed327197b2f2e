//! Graded Betti tables by two independent routes.
//!
//! Upper Koszul: for `b` in the lcm lattice, `β_{i,b}(I) = b̃_{i-1}(K^b)`
//! where `K^b` is generated by `T_g = {v : g_v < b_v}` over generators
//! `g | b`. Off the lattice `K^b` is a cone.
//!
//! Hochster: `β_{i,σ}(I) = b̃_{|σ|-i-2}(δ(I)|_σ)` for squarefree `I`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::homology::{reduced_betti_of_faces, FieldSpec, ReducedBetti};
use crate::ring::{Monomial, MonomialIdeal};
use crate::{Error, Result, Subset};

/// Whether a table describes `I` itself or `S/I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Ideal,
    Quotient,
}

/// `β_{i,j}` keyed by homological index `i` and total degree `j`. Zero
/// entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    subject: Subject,
    nvars: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    subject: Subject,
    field: FieldSpec,
    nvars: usize,
    entries: Vec<(usize, u32, u64)>,
    reg: Option<i64>,
    pd: Option<usize>,
    depth: Option<usize>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BettiJson {
            subject: self.subject,
            field: self.field,
            nvars: self.nvars,
            entries: self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect(),
            reg: self.reg(),
            pd: self.pd(),
            depth: self.depth(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BettiJson::deserialize(d)?;
        Ok(BettiTable::new(
            raw.subject,
            raw.nvars,
            raw.field,
            raw.entries.into_iter().map(|(i, j, b)| ((i, j), b)),
        ))
    }
}

impl BettiTable {
    pub fn new(
        subject: Subject,
        nvars: usize,
        field: FieldSpec,
        entries: impl IntoIterator<Item = ((usize, u32), u64)>,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, b) in entries {
            if b != 0 {
                *map.entry(k).or_insert(0) += b;
            }
        }
        BettiTable {
            subject,
            nvars,
            field,
            entries: map,
        }
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((i, j), β)` in ascending `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(_, &b)| b)
            .sum()
    }

    /// `max(j - i)`; `None` for the zero module.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `nvars - pd` (Auslander-Buchsbaum).
    pub fn depth(&self) -> Option<usize> {
        self.pd().map(|p| self.nvars.saturating_sub(p))
    }

    /// The same resolution viewed in a polynomial ring with `nvars`
    /// variables.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = nvars;
        self
    }

    /// `β_{i+1,j}(S/I) = β_{i,j}(I)` plus `β_{0,0}(S/I) = 1`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.subject {
            Subject::Quotient => self.clone(),
            Subject::Ideal => BettiTable::new(
                Subject::Quotient,
                self.nvars,
                self.field,
                std::iter::once(((0, 0), 1)).chain(self.entries().map(|((i, j), b)| ((i + 1, j), b))),
            ),
        }
    }

    pub fn to_ideal(&self) -> BettiTable {
        match self.subject {
            Subject::Ideal => self.clone(),
            Subject::Quotient => BettiTable::new(
                Subject::Ideal,
                self.nvars,
                self.field,
                self.entries()
                    .filter(|&((i, _), _)| i > 0)
                    .map(|((i, j), b)| ((i - 1, j), b)),
            ),
        }
    }

    /// Numerator of the Hilbert series of `S/I` over `(1-t)^nvars`, as
    /// coefficients by degree: `Σ (-1)^i β_{i,j}(S/I) t^j`.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let q = self.to_quotient();
        let top = q.entries.keys().map(|&(_, j)| j as usize).max().unwrap_or(0);
        let mut poly = vec![0i64; top + 1];
        for ((i, j), b) in q.entries() {
            let b = b as i64;
            poly[j as usize] += if i % 2 == 0 { b } else { -b };
        }
        while poly.len() > 1 && poly.last() == Some(&0) {
            poly.pop();
        }
        poly
    }

    /// Aligned table with rows `j - i` and columns `i`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let Some(pd) = self.pd() else {
            let _ = writeln!(out, "zero module");
            return out;
        };
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap_or(0);
        let hi = self.reg().unwrap_or(0);
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut rows: Vec<(String, Vec<String>)> = Vec::new();
        rows.push((String::new(), (0..=pd).map(|i| i.to_string()).collect()));
        rows.push(("total:".into(), (0..=pd).map(|i| cell(self.total(i))).collect()));
        for r in lo..=hi {
            let cells = (0..=pd)
                .map(|i| {
                    let j = r + i as i64;
                    if j < 0 {
                        ".".to_string()
                    } else {
                        cell(self.get(i, j as u32))
                    }
                })
                .collect();
            rows.push((format!("{r}:"), cells));
        }
        let head = rows.iter().map(|(h, _)| h.len()).max().unwrap_or(0);
        let width = rows
            .iter()
            .flat_map(|(_, c)| c.iter().map(String::len))
            .max()
            .unwrap_or(1);
        for (h, cells) in rows {
            let _ = write!(out, "{h:>head$}");
            for c in cells {
                let _ = write!(out, " {c:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

/// Faces of the downward-closed family `{τ ⊆ ground : is_face(τ)}`, grouped
/// by size and ascending within a size. Empty when `∅` is not a face.
pub(crate) fn downward_closed_faces(
    ground: Subset,
    is_face: impl Fn(Subset) -> bool,
) -> Vec<Vec<Subset>> {
    if !is_face(Subset::EMPTY) {
        return Vec::new();
    }
    let verts = ground.to_vec();
    let mut layers: Vec<Vec<Subset>> = vec![vec![Subset::EMPTY]];
    // (face, index of the next vertex allowed)
    let mut stack: Vec<(Subset, usize)> = vec![(Subset::EMPTY, 0)];
    while let Some((face, from)) = stack.pop() {
        for (k, &v) in verts.iter().enumerate().skip(from) {
            let next = face.with(v);
            if is_face(next) {
                let size = next.len();
                if layers.len() <= size {
                    layers.resize(size + 1, Vec::new());
                }
                layers[size].push(next);
                stack.push((next, k + 1));
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    layers
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    if ideal.nvars() > 64 {
        return Err(Error::TooManyVariables(ideal.nvars()));
    }
    Ok(())
}

/// Join closure of squarefree generators.
pub(crate) fn lcm_lattice_squarefree(gens: &[Subset]) -> Vec<Subset> {
    let mut seen: HashSet<Subset> = gens.iter().copied().collect();
    let mut frontier: Vec<Subset> = seen.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &g in gens {
                let j = a.union(g);
                if seen.insert(j) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Subset> = seen.into_iter().collect();
    all.sort_unstable();
    all
}

/// Join closure of arbitrary monomial generators.
pub(crate) fn lcm_lattice(gens: &[Monomial]) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut frontier: Vec<Monomial> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens {
                let j = a.zip_with(g, u32::max);
                if !seen.contains(&j) {
                    seen.insert(j.clone());
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Monomial> = seen.into_iter().collect();
    all.sort_unstable_by(|a, b| a.cmp_canonical(b));
    all
}

fn collect_table(
    subject: Subject,
    nvars: usize,
    field: FieldSpec,
    parts: Vec<Vec<((usize, u32), u64)>>,
) -> BettiTable {
    BettiTable::new(subject, nvars, field, parts.into_iter().flatten())
}

/// Upper-Koszul (lcm-lattice) Betti table of a nonzero proper ideal.
pub fn betti_table_koszul(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    if ideal.is_squarefree() {
        koszul_squarefree(ideal, field)
    } else {
        koszul_general(ideal, field)
    }
}

fn koszul_entries(sigma_degree: u32, betti: &ReducedBetti) -> Vec<((usize, u32), u64)> {
    betti
        .nonzero()
        .filter(|&(d, _)| d >= -1)
        .map(|(d, b)| (((d + 1) as usize, sigma_degree), b as u64))
        .collect()
}

fn koszul_squarefree(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    let gens = ideal.gen_subsets()?;
    let lattice = lcm_lattice_squarefree(&gens);
    let parts: Vec<_> = lattice
        .par_iter()
        .map(|&sigma| {
            let below: Vec<Subset> = gens.iter().copied().filter(|g| g.is_subset(sigma)).collect();
            // τ is a face iff σ∖τ still contains a generator
            let faces = downward_closed_faces(sigma, |tau| below.iter().any(|g| !g.intersects(tau)));
            koszul_entries(sigma.len() as u32, &reduced_betti_of_faces(&faces, field))
        })
        .collect();
    Ok(collect_table(Subject::Ideal, ideal.nvars(), field, parts))
}

pub(crate) fn koszul_general(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    let gens = ideal.gens();
    let lattice = lcm_lattice(gens);
    let parts: Vec<_> = lattice
        .par_iter()
        .map(|b| {
            let support = Subset::from_indices(b.support());
            let tops: Vec<Subset> = gens
                .iter()
                .filter(|g| g.divides_unchecked(b))
                .map(|g| {
                    Subset::from_indices(
                        support.iter().filter(|&v| g.exponents()[v] < b.exponents()[v]),
                    )
                })
                .collect();
            let faces = downward_closed_faces(support, |tau| tops.iter().any(|t| tau.is_subset(*t)));
            koszul_entries(b.degree(), &reduced_betti_of_faces(&faces, field))
        })
        .collect();
    Ok(collect_table(Subject::Ideal, ideal.nvars(), field, parts))
}

/// Deposit the bits of `k` into the positions of `mask`.
fn scatter(k: u64, mask: &[usize]) -> Subset {
    let mut s = Subset::EMPTY;
    for (bit, &v) in mask.iter().enumerate() {
        if k >> bit & 1 == 1 {
            s = s.with(v);
        }
    }
    s
}

/// Hochster's formula summed over every subset of the support.
pub fn betti_table_hochster(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    require_proper_nonzero(ideal)?;
    let gens = ideal.gen_subsets()?;
    let support: Vec<usize> = ideal.support();
    if support.len() > 40 {
        return Err(Error::TooManyVariables(support.len()));
    }
    let parts: Vec<_> = (0..1u64 << support.len())
        .into_par_iter()
        .filter_map(|k| {
            let sigma = scatter(k, &support);
            let cover = gens
                .iter()
                .filter(|g| g.is_subset(sigma))
                .fold(Subset::EMPTY, |acc, g| acc.union(*g));
            // off the lcm lattice the restriction is a cone
            if cover != sigma || sigma.is_empty() {
                return None;
            }
            let faces = downward_closed_faces(sigma, |tau| !gens.iter().any(|g| g.is_subset(tau)));
            let size = sigma.len() as isize;
            let entries: Vec<_> = reduced_betti_of_faces(&faces, field)
                .nonzero()
                .filter_map(|(d, b)| {
                    let i = size - d - 2;
                    (i >= 0).then_some(((i as usize, size as u32), b as u64))
                })
                .collect();
            Some(entries)
        })
        .collect();
    Ok(collect_table(Subject::Ideal, ideal.nvars(), field, parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableSet;
    use crate::Board;
    use std::sync::Arc;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_subsets(
            gens.iter().map(|g| Subset::from_indices(g.iter().copied())),
            Arc::new(VariableSet::new(n)),
        )
        .unwrap()
    }

    #[test]
    fn principal_ideal() {
        let i = ideal(2, &[&[0, 1]]);
        for t in [
            betti_table_koszul(&i, FieldSpec::large()).unwrap(),
            betti_table_hochster(&i, FieldSpec::large()).unwrap(),
        ] {
            assert_eq!(t.entries().collect::<Vec<_>>(), [((0, 2), 1)]);
            assert_eq!((t.reg(), t.pd()), (Some(2), Some(0)));
        }
    }

    #[test]
    fn regular_sequence_of_two_quadrics() {
        let b = Board::new(2, 2).unwrap();
        let t = betti_table_koszul(&b.facet_ideal(), FieldSpec::gf2()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), [((0, 2), 2), ((1, 4), 1)]);
        let q = t.to_quotient();
        assert_eq!(q.get(0, 0), 1);
        assert_eq!(q.to_ideal(), t);
        assert_eq!((q.reg(), q.pd(), q.depth()), (Some(2), Some(2), Some(2)));
    }

    #[test]
    fn general_route_agrees_on_squarefree_input() {
        for (m, n) in [(2, 3), (3, 3), (2, 4)] {
            let i = Board::new(m, n).unwrap().facet_ideal();
            let f = FieldSpec::large();
            assert_eq!(
                koszul_general(&i, f).unwrap(),
                betti_table_koszul(&i, f).unwrap(),
                "({m},{n})"
            );
        }
    }

    #[test]
    fn square_of_two_by_two() {
        let i = Board::new(2, 2).unwrap().facet_ideal().power(2).unwrap();
        let q = betti_table_koszul(&i, FieldSpec::large()).unwrap().to_quotient();
        assert_eq!(q.reg(), Some(4));
        assert_eq!(q.depth(), Some(2));
    }

    #[test]
    fn rejects_degenerate_ideals() {
        let vars = Arc::new(VariableSet::new(3));
        let f = FieldSpec::large();
        assert!(betti_table_koszul(&MonomialIdeal::zero(vars.clone()), f).is_err());
        assert!(betti_table_koszul(&MonomialIdeal::unit(vars.clone()), f).is_err());
        let sq = MonomialIdeal::min_gens(vec![Monomial::new(vec![2, 1, 0])], vars).unwrap();
        assert_eq!(betti_table_hochster(&sq, f), Err(Error::NotSquarefree));
    }

    #[test]
    fn json_and_text() {
        let t = betti_table_koszul(&Board::new(2, 2).unwrap().facet_ideal(), FieldSpec::large())
            .unwrap()
            .to_quotient();
        let js = serde_json::to_value(&t).unwrap();
        assert_eq!(js["subject"], "quotient");
        assert_eq!(js["field"], 32003);
        assert_eq!(js["reg"], 2);
        assert_eq!(js["entries"][1], serde_json::json!([1, 2, 2]));
        let back: BettiTable = serde_json::from_value(js).unwrap();
        assert_eq!(back, t);
        let text = t.render();
        assert!(text.contains("total:"), "{text}");
        assert_eq!(text.lines().count(), 2 + 3);
    }

    #[test]
    fn face_enumeration_matches_submasks() {
        let ground = Subset::from_indices([0, 2, 3, 5]);
        let faces = downward_closed_faces(ground, |t| t.len() <= 2);
        assert_eq!(faces.iter().map(Vec::len).collect::<Vec<_>>(), [1, 4, 6]);
        assert!(downward_closed_faces(ground, |_| false).is_empty());
    }
}

//! Regularity and depth bounds from colon sequences, duality and
//! disjoint-variable sums. All regularities of ideals use the convention
//! `reg(J) = reg(S/J) + 1`, so the zero ideal has regularity 1 and the unit
//! ideal (zero quotient) has none.

use serde::{Deserialize, Serialize};

use super::betti::betti_table_koszul;
use crate::homology::FieldSpec;
use crate::ring::{Monomial, MonomialIdeal};
use crate::{Error, Result};

/// `reg(S/J)`: 0 for `J = 0`, `None` for the unit ideal.
pub fn quotient_reg(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Option<i64>> {
    if ideal.is_unit() {
        return Ok(None);
    }
    if ideal.is_zero() {
        return Ok(Some(0));
    }
    Ok(betti_table_koszul(ideal, field)?.to_quotient().reg())
}

pub fn ideal_reg(ideal: &MonomialIdeal, field: FieldSpec) -> Result<Option<i64>> {
    Ok(quotient_reg(ideal, field)?.map(|r| r + 1))
}

/// `depth(S/J)` in `ambient` variables: `ambient` for `J = 0`, `None` for
/// the unit ideal.
pub fn quotient_depth(ideal: &MonomialIdeal, ambient: usize, field: FieldSpec) -> Result<Option<usize>> {
    if ideal.is_unit() {
        return Ok(None);
    }
    if ideal.is_zero() {
        return Ok(Some(ambient));
    }
    let pd = betti_table_koszul(ideal, field)?.to_quotient().pd().unwrap_or(0);
    ambient
        .checked_sub(pd)
        .map(Some)
        .ok_or_else(|| Error::InvalidArgument(format!("ambient {ambient} below pd {pd}")))
}

/// Both sides of `pd(S/I) = reg(I^∨)`, each from its own Betti table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeraiCheck {
    pub pd_quotient: usize,
    pub reg_dual: i64,
    pub holds: bool,
}

pub fn terai_check(ideal: &MonomialIdeal, field: FieldSpec) -> Result<TeraiCheck> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let pd_quotient = betti_table_koszul(ideal, field)?.to_quotient().pd().unwrap_or(0);
    let dual = ideal.alexander_dual()?;
    let reg_dual = betti_table_koszul(&dual, field)?.reg().ok_or(Error::ZeroOrUnitIdeal)?;
    Ok(TeraiCheck {
        pd_quotient,
        reg_dual,
        holds: pd_quotient as i64 == reg_dual,
    })
}

/// `|supp I| - |G(I)| + 1` when every generator of the squarefree ideal has
/// a variable dividing no other generator.
pub fn private_variable_reg(ideal: &MonomialIdeal) -> Option<i64> {
    if !ideal.is_proper_nonzero() || !ideal.is_squarefree() {
        return None;
    }
    let gens = ideal.gen_subsets().ok()?;
    let all_private = gens.iter().enumerate().all(|(k, g)| {
        let others = gens
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != k)
            .fold(crate::Subset::EMPTY, |acc, (_, h)| acc.union(*h));
        !g.difference(others).is_empty()
    });
    all_private.then(|| ideal.support().len() as i64 - gens.len() as i64 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColonMode {
    /// `J_0 = I`, `J_j = J_{j-1} + (f_j)`; term `reg(J_{j-1} : f_j) + d_j`.
    AddGenerators,
    /// Order is `G(I)`; `J_j = (u_{j+1}, …, u_r)`; term
    /// `reg(J_j : u_j) + d_j - 1`.
    PeelGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonStep {
    pub monomial: Monomial,
    pub degree: u32,
    /// Regularity of the colon ideal; `None` when it is the unit ideal.
    pub colon_reg: Option<i64>,
    pub term: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonSequenceBound {
    pub bound: i64,
    /// Regularity of the last ideal in the sequence.
    pub final_reg: i64,
    pub steps: Vec<ColonStep>,
}

/// Replay a colon sequence and return the resulting upper bound on
/// `reg(I)`.
pub fn colon_sequence_reg_bound(
    ideal: &MonomialIdeal,
    order: &[Monomial],
    mode: ColonMode,
    field: FieldSpec,
) -> Result<ColonSequenceBound> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    let ambient = ideal.ambient().clone();
    let mut steps = Vec::with_capacity(order.len());
    let final_ideal = match mode {
        ColonMode::AddGenerators => {
            let mut j = ideal.clone();
            for f in order {
                if f.nvars() != ideal.nvars() {
                    return Err(Error::AmbientMismatch {
                        left: ideal.nvars(),
                        right: f.nvars(),
                    });
                }
                if f.is_one() {
                    return Err(Error::InvalidArgument("cannot adjoin the unit monomial".into()));
                }
                let colon_reg = ideal_reg(&j.colon_by_monomial(f)?, field)?;
                steps.push(ColonStep {
                    monomial: f.clone(),
                    degree: f.degree(),
                    colon_reg,
                    term: colon_reg.map(|r| r + f.degree() as i64),
                });
                j = j.adjoin(f)?;
            }
            j
        }
        ColonMode::PeelGenerators => {
            let mut sorted = order.to_vec();
            sorted.sort_by(|a, b| a.cmp_canonical(b));
            if sorted.as_slice() != ideal.gens() {
                return Err(Error::InvalidArgument(
                    "peel order must list the minimal generators exactly once".into(),
                ));
            }
            for (k, u) in order.iter().enumerate() {
                let rest = MonomialIdeal::min_gens(order[k + 1..].to_vec(), ambient.clone())?;
                let colon_reg = ideal_reg(&rest.colon_by_monomial(u)?, field)?;
                steps.push(ColonStep {
                    monomial: u.clone(),
                    degree: u.degree(),
                    colon_reg,
                    term: colon_reg.map(|r| r + u.degree() as i64 - 1),
                });
            }
            MonomialIdeal::zero(ambient)
        }
    };
    let final_reg = ideal_reg(&final_ideal, field)?.ok_or_else(|| {
        Error::InvalidArgument("the sequence ends in the unit ideal".into())
    })?;
    let bound = steps
        .iter()
        .filter_map(|s| s.term)
        .fold(final_reg, i64::max);
    Ok(ColonSequenceBound {
        bound,
        final_reg,
        steps,
    })
}

/// `reg(S_k/I^k)` and `depth(S_k/I^k)` of one summand, for one power `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerInvariants {
    pub reg: i64,
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumPrediction {
    pub reg: i64,
    pub depth: usize,
}

/// Regularity and depth of `S/(I+J)^t` for `I`, `J` in disjoint variables,
/// from the invariants of their powers: `first[k-1]` describes `S_1/I^k`
/// and `second[k-1]` describes `S_2/J^k`.
pub fn sum_formula_predict(
    first: &[PowerInvariants],
    second: &[PowerInvariants],
    t: usize,
) -> Result<SumPrediction> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be >= 1".into()));
    }
    let have = first.len().min(second.len());
    if have < t {
        return Err(Error::IncompleteTable { needed: t, have });
    }
    let a = |k: usize| first[k - 1];
    let b = |k: usize| second[k - 1];
    let mut reg = i64::MIN;
    let mut depth = usize::MAX;
    for i in 1..t {
        reg = reg.max(a(t - i).reg + b(i).reg + 1);
        depth = depth.min(a(t - i).depth + b(i).depth + 1);
    }
    for j in 1..=t {
        reg = reg.max(a(t - j + 1).reg + b(j).reg);
        depth = depth.min(a(t - j + 1).depth + b(j).depth);
    }
    Ok(SumPrediction { reg, depth })
}

/// One term of the subset-colon bound: `F_W = (I : ∏W) + (W^c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetColonCase {
    /// Indices into the monomial list.
    pub subset: Vec<usize>,
    pub ideal: MonomialIdeal,
    pub degree: u32,
    /// `None` when `F_W` is the unit ideal.
    pub reg: Option<i64>,
    pub depth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetColonBound {
    /// `max_W reg(F_W) + d_W`, an upper bound on `reg(I)`.
    pub reg_bound: Option<i64>,
    /// `min_W depth(S/F_W)`, a lower bound on `depth(S/I)`.
    pub depth_bound: Option<usize>,
    pub cases: Vec<SubsetColonCase>,
}

/// Evaluate the bound over every subset `W` of `monomials` (at most 16).
pub fn subset_colon_bound(
    ideal: &MonomialIdeal,
    monomials: &[Monomial],
    ambient: usize,
    field: FieldSpec,
) -> Result<SubsetColonBound> {
    if monomials.len() > 16 {
        return Err(Error::InvalidArgument("at most 16 monomials".into()));
    }
    let nv = ideal.nvars();
    let mut cases = Vec::new();
    for mask in 0u32..1 << monomials.len() {
        let inside: Vec<usize> = (0..monomials.len()).filter(|k| mask >> k & 1 == 1).collect();
        let mut product = Monomial::one(nv);
        for &k in &inside {
            product = product.mul(&monomials[k])?;
        }
        let complement: Vec<Monomial> = (0..monomials.len())
            .filter(|k| mask >> k & 1 == 0)
            .map(|k| monomials[k].clone())
            .collect();
        let rest = MonomialIdeal::min_gens(complement, ideal.ambient().clone())?;
        let fw = ideal.colon_by_monomial(&product)?.sum(&rest)?;
        let reg = ideal_reg(&fw, field)?;
        let depth = quotient_depth(&fw, ambient, field)?;
        cases.push(SubsetColonCase {
            subset: inside,
            ideal: fw,
            degree: product.degree(),
            reg,
            depth,
        });
    }
    let reg_bound = cases
        .iter()
        .filter_map(|c| c.reg.map(|r| r + c.degree as i64))
        .max();
    let depth_bound = cases.iter().filter_map(|c| c.depth).min();
    Ok(SubsetColonBound {
        reg_bound,
        depth_bound,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VariableSet;
    use crate::{Board, Subset};
    use std::sync::Arc;

    fn sq(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_subsets(
            gens.iter().map(|g| Subset::from_indices(g.iter().copied())),
            Arc::new(VariableSet::new(n)),
        )
        .unwrap()
    }

    const F: FieldSpec = FieldSpec::large_const();

    #[test]
    fn terai_small() {
        let c = terai_check(&sq(2, &[&[0, 1]]), F).unwrap();
        assert_eq!((c.pd_quotient, c.reg_dual, c.holds), (1, 1, true));
        let c = terai_check(&Board::new(2, 2).unwrap().facet_ideal(), F).unwrap();
        assert_eq!((c.pd_quotient, c.reg_dual, c.holds), (2, 2, true));
    }

    #[test]
    fn private_variables() {
        assert_eq!(private_variable_reg(&sq(4, &[&[0, 1], &[2, 3]])), Some(3));
        assert_eq!(private_variable_reg(&Board::new(2, 3).unwrap().facet_ideal()), None);
    }

    #[test]
    fn peel_two_disjoint_edges() {
        let i = sq(4, &[&[0, 1], &[2, 3]]);
        let b = colon_sequence_reg_bound(&i, i.gens(), ColonMode::PeelGenerators, F).unwrap();
        assert_eq!(b.bound, 3);
        assert_eq!(b.steps.len(), 2);
        assert_eq!(b.steps[0].term, Some(3));
        assert!(colon_sequence_reg_bound(&i, &i.gens()[..1], ColonMode::PeelGenerators, F).is_err());
    }

    #[test]
    fn add_with_empty_order_is_exact() {
        let i = Board::new(2, 3).unwrap().facet_ideal();
        let b = colon_sequence_reg_bound(&i, &[], ColonMode::AddGenerators, F).unwrap();
        assert_eq!((b.bound, b.final_reg), (3, 3));
        let one = Monomial::one(6);
        assert!(colon_sequence_reg_bound(&i, &[one], ColonMode::AddGenerators, F).is_err());
    }

    #[test]
    fn sum_formula_small() {
        let edge = |k: i64| PowerInvariants { reg: 2 * k - 1, depth: 1 };
        let comp: Vec<_> = (1..=3).map(edge).collect();
        let p = sum_formula_predict(&comp, &comp, 2).unwrap();
        assert_eq!((p.reg, p.depth), (4, 2));
        let p = sum_formula_predict(&comp, &comp, 1).unwrap();
        assert_eq!(p.reg, 2);
        assert_eq!(
            sum_formula_predict(&comp[..1], &comp, 2),
            Err(Error::IncompleteTable { needed: 2, have: 1 })
        );
    }

    #[test]
    fn degenerate_regularities() {
        let vars = Arc::new(VariableSet::new(2));
        assert_eq!(ideal_reg(&MonomialIdeal::zero(vars.clone()), F).unwrap(), Some(1));
        assert_eq!(ideal_reg(&MonomialIdeal::unit(vars.clone()), F).unwrap(), None);
        assert_eq!(quotient_depth(&MonomialIdeal::zero(vars), 2, F).unwrap(), Some(2));
    }
}

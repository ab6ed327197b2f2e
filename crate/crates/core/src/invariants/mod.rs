//! Betti tables, the invariants derived from them and bound calculators.

mod betti;
mod bounds;
mod report;

pub use betti::{betti_table_hochster, betti_table_koszul, BettiTable, Subject};
pub use bounds::{
    colon_sequence_reg_bound, ideal_reg, private_variable_reg, quotient_depth, quotient_reg,
    subset_colon_bound, sum_formula_predict, terai_check, ColonMode, ColonSequenceBound,
    ColonStep, PowerInvariants, SubsetColonBound, SubsetColonCase, SumPrediction, TeraiCheck,
};
pub use report::{hilbert_series, invariant_report, HilbertSeries, InvariantReport, ReportOptions};

use crate::ring::MonomialIdeal;

/// Predicted homology work for the lcm-lattice route: `Σ_b 2^{|supp b|}`
/// over every `b` below the generator lcm, i.e. `∏_v (1 + 2 e_v)` with `e_v`
/// the largest exponent of `v`.
pub fn work_estimate(ideal: &MonomialIdeal) -> u128 {
    let mut top = vec![0u32; ideal.nvars()];
    for g in ideal.gens() {
        for (t, &e) in top.iter_mut().zip(g.exponents()) {
            *t = (*t).max(e);
        }
    }
    top.iter()
        .fold(1u128, |acc, &e| acc.saturating_mul(1 + 2 * e as u128))
}

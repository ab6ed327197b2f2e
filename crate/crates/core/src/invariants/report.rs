//! Invariants of `S/I` read off a Betti table, and the Hilbert series.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::betti::{betti_table_koszul, downward_closed_faces, BettiTable};
use crate::chessboard::PrimeProfile;
use crate::homology::FieldSpec;
use crate::ring::MonomialIdeal;
use crate::{Error, Result, Subset};

/// Invariants of `S/I` in a polynomial ring with `ambient` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub ambient: usize,
    pub generators: usize,
    pub support: usize,
    pub reg: i64,
    pub pd: usize,
    pub depth: usize,
    pub dim: usize,
    pub height: usize,
    pub bight: usize,
    /// Only for squarefree ideals.
    pub a_invariant: Option<i64>,
    pub field: FieldSpec,
    /// The second characteristic the table was recomputed in, if any.
    pub cross_field: Option<FieldSpec>,
    /// Set when the two characteristics give different tables.
    pub torsion_warning: bool,
    pub betti: BettiTable,
    pub wall_time_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReportOptions {
    /// Recompute the table in the partner characteristic.
    pub cross_check: bool,
}

/// `|supp I|` must not exceed `ambient`.
fn check_ambient(ideal: &MonomialIdeal, ambient: usize) -> Result<()> {
    let support = ideal.support().len();
    if ambient < support {
        return Err(Error::InvalidArgument(format!(
            "ambient {ambient} is smaller than the support size {support}"
        )));
    }
    Ok(())
}

/// Minimal primes of the radical.
fn prime_profile(ideal: &MonomialIdeal, ambient: usize) -> Result<PrimeProfile> {
    let primes = ideal.radical().minimal_primes()?;
    PrimeProfile::from_primes(&primes, ambient).ok_or(Error::ZeroOrUnitIdeal)
}

pub fn invariant_report(
    ideal: &MonomialIdeal,
    ambient: usize,
    field: FieldSpec,
    options: ReportOptions,
) -> Result<InvariantReport> {
    let start = Instant::now();
    check_ambient(ideal, ambient)?;
    let table = betti_table_koszul(ideal, field)?;
    let (cross_field, torsion_warning) = if options.cross_check {
        let other = field.cross_partner();
        let alt = betti_table_koszul(ideal, other)?;
        let same = alt.entries().eq(table.entries());
        (Some(other), !same)
    } else {
        (None, false)
    };
    let quotient = table.to_quotient().with_nvars(ambient);
    let profile = prime_profile(ideal, ambient)?;
    let a_invariant = if ideal.is_squarefree() {
        let series = hilbert_series(ideal, ambient)?;
        assert_eq!(
            series.raw_numerator,
            quotient.k_polynomial(),
            "face-count and Betti K-polynomials differ"
        );
        Some(series.a_invariant())
    } else {
        None
    };
    let pd = quotient.pd().expect("quotient has beta_00");
    Ok(InvariantReport {
        ambient,
        generators: ideal.gens().len(),
        support: ideal.support().len(),
        reg: quotient.reg().expect("quotient has beta_00"),
        pd,
        depth: ambient - pd,
        dim: profile.dim,
        height: profile.height,
        bight: profile.bight,
        a_invariant,
        field,
        cross_field,
        torsion_warning,
        betti: quotient,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// `H(S/I) = numerator / (1-t)^denominator_exp`, in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denominator_exp: usize,
    /// Numerator over `(1-t)^ambient` before cancellation.
    pub raw_numerator: Vec<i64>,
}

impl HilbertSeries {
    /// Degree of the series as a rational function.
    pub fn a_invariant(&self) -> i64 {
        let deg = self.numerator.iter().rposition(|&c| c != 0).unwrap_or(0);
        deg as i64 - self.denominator_exp as i64
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// From the f-vector of `δ(I)` on the support: the K-polynomial is
/// `Σ_i f_{i-1} t^i (1-t)^{s-i}`, independent of the ambient ring.
pub fn hilbert_series(ideal: &MonomialIdeal, ambient: usize) -> Result<HilbertSeries> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::ZeroOrUnitIdeal);
    }
    check_ambient(ideal, ambient)?;
    let gens = ideal.gen_subsets()?;
    let support = Subset::from_indices(ideal.support());
    let s = support.len();
    let faces = downward_closed_faces(support, |tau| !gens.iter().any(|g| g.is_subset(tau)));
    let mut k = vec![0i64; s + 1];
    for (i, layer) in faces.iter().enumerate() {
        let f = layer.len() as i64;
        for (e, c) in k.iter_mut().enumerate().skip(i).take(s - i + 1) {
            let r = e - i;
            let term = f * binomial(s - i, r);
            *c += if r % 2 == 0 { term } else { -term };
        }
    }
    while k.len() > 1 && k.last() == Some(&0) {
        k.pop();
    }
    let raw = k.clone();
    let mut exp = ambient;
    while exp > 0 && k.iter().sum::<i64>() == 0 {
        // divide by (1 - t): q_e = Σ_{l ≤ e} k_l
        let mut acc = 0;
        let mut q: Vec<i64> = k
            .iter()
            .map(|&c| {
                acc += c;
                acc
            })
            .collect();
        q.pop();
        k = q;
        exp -= 1;
    }
    Ok(HilbertSeries {
        numerator: k,
        denominator_exp: exp,
        raw_numerator: raw,
    })
}

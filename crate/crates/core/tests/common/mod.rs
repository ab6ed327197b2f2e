#![allow(dead_code)]

use std::sync::Arc;

use chessboard_core::{Board, Fixture, Monomial, MonomialIdeal, Subset, VariableSet};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Squarefree corpus: facet ideals for `m ≤ 3, n ≤ 4`, every fixture at its
/// admissible sizes and Stanley-Reisner ideals for `m ≤ n ≤ 3`.
pub fn squarefree_corpus() -> Vec<(String, MonomialIdeal)> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in m..=4 {
            out.push((format!("F({m},{n})"), Board::new(m, n).unwrap().facet_ideal()));
        }
    }
    out.push(("L_six".into(), Fixture::LSix.ideal(0).unwrap()));
    for n in 3..=5 {
        out.push((format!("L_2n3({n})"), Fixture::L2n3.ideal(n).unwrap()));
    }
    for n in 4..=5 {
        out.push((format!("L_2n5({n})"), Fixture::L2n5.ideal(n).unwrap()));
    }
    for m in 1..=3 {
        for n in m..=3 {
            if m * n > 1 {
                out.push((format!("SR({m},{n})"), Board::new(m, n).unwrap().stanley_reisner_ideal()));
            }
        }
    }
    out
}

/// A nonzero proper ideal with generators supported on `offset..offset+k`
/// inside `nvars` variables and exponents below `max_exp + 1`.
pub fn random_ideal(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    offset: usize,
    k: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let vars = Arc::new(VariableSet::new(nvars));
    loop {
        let count = rng.random_range(1..=4);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| {
                let mut e = vec![0u32; nvars];
                for slot in e.iter_mut().skip(offset).take(k) {
                    if rng.random_bool(0.5) {
                        *slot = rng.random_range(1..=max_exp);
                    }
                }
                Monomial::new(e)
            })
            .collect();
        let ideal = MonomialIdeal::min_gens(gens, vars.clone()).unwrap();
        if ideal.is_proper_nonzero() {
            return ideal;
        }
    }
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_exp: u32) -> Monomial {
    loop {
        let e: Vec<u32> = (0..nvars).map(|_| rng.random_range(0..=max_exp)).collect();
        let m = Monomial::new(e);
        if !m.is_one() {
            return m;
        }
    }
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        p.swap(i, j);
    }
    p
}

pub fn subset(ix: &[usize]) -> Subset {
    Subset::from_indices(ix.iter().copied())
}

//! The reproduction catalog behind `chessboard verify`.
//!
//! Every case yields named integer values. A case passes iff each expected
//! value equals the computed value of the same name. Betti tables are
//! computed in characteristic 32003 and again in characteristic 2; any
//! difference fails the case with a torsion diagnostic.

use std::sync::Arc;
use std::time::Instant;

use chessboard_core::homology::reduced_betti;
use chessboard_core::invariants::{
    betti_table_hochster, betti_table_koszul, colon_sequence_reg_bound, hilbert_series,
    subset_colon_bound, sum_formula_predict, terai_check, work_estimate, BettiTable, ColonMode,
    PowerInvariants,
};
use chessboard_core::ring::{path_ideal, PathKind};
use chessboard_core::{
    Board, FieldSpec, Fixture, Monomial, MonomialIdeal, PrimeProfile, SimplicialComplex, Subset,
    VariableSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Stated values that finish at desk scale.
    #[value(name = "paper")]
    #[serde(rename = "paper")]
    Stated,
    /// Identities and inequalities checked on generated instances.
    Properties,
    /// Large powers and the 4×4 board.
    Long,
    /// Everything.
    All,
}

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A published value for this instance.
    Stated,
    /// A closed-form expression evaluated at this instance.
    Formula,
    /// An independent computation.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedLong,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedLong => "SKIPPED-LONG",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub name: String,
    pub value: i64,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub name: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyCase {
    pub id: String,
    pub criterion: u8,
    pub description: String,
    pub expected: Vec<Expected>,
    pub computed: Vec<Computed>,
    pub status: Status,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A numbered acceptance criterion and its wall-clock budget, if any.
#[derive(Debug, Clone, Copy)]
pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub budget_ms: Option<u64>,
}

pub const CRITERIA: [Criterion; 11] = [
    Criterion { number: 1, title: "minimal primes: formula equals cover enumeration", budget_ms: Some(10_000) },
    Criterion { number: 2, title: "height, dim and bight closed forms", budget_ms: None },
    Criterion { number: 3, title: "one-row powers: depth 0, reg t-1", budget_ms: Some(5_000) },
    Criterion { number: 4, title: "two-row powers: reg 2t and depth 2 or 1", budget_ms: None },
    Criterion { number: 5, title: "three-row boards: reg 4, depth 4", budget_ms: None },
    Criterion { number: 6, title: "fixture regularities", budget_ms: None },
    Criterion { number: 7, title: "induced-matching lower bound 2(m-1)", budget_ms: None },
    Criterion { number: 8, title: "a-invariant 0", budget_ms: None },
    Criterion { number: 9, title: "depth of the Stanley-Reisner ring", budget_ms: None },
    Criterion { number: 10, title: "4x4 board: reg = depth = 6", budget_ms: None },
    Criterion { number: 11, title: "property suites", budget_ms: None },
];

#[derive(Debug, Default)]
struct Outcome {
    expected: Vec<Expected>,
    computed: Vec<Computed>,
    note: Option<String>,
}

impl Outcome {
    fn expect(mut self, name: &str, value: i64, source: Source) -> Self {
        self.expected.push(Expected { name: name.into(), value, source });
        self
    }

    fn got(mut self, name: &str, value: i64) -> Self {
        self.computed.push(Computed { name: name.into(), value });
        self
    }

    fn note(mut self, note: Option<String>) -> Self {
        self.note = note;
        self
    }

    fn passes(&self) -> bool {
        self.expected.iter().all(|e| {
            self.computed
                .iter()
                .any(|c| c.name == e.name && c.value == e.value)
        })
    }
}

type Check = Box<dyn Fn() -> Result<Outcome, String> + Send + Sync>;

/// A case before it runs.
pub struct CaseDef {
    pub id: String,
    pub criterion: u8,
    pub description: String,
    pub suite: Suite,
    /// Predicted homology work; compared against the long-case budget.
    pub work: u128,
    check: Check,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Long cases predicted above this much work are skipped.
    pub long_budget: Option<u128>,
}

const P: FieldSpec = FieldSpec::large_const();
const TWO: FieldSpec = FieldSpec::gf2_const();

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

#[derive(Clone, Copy)]
enum Route {
    Koszul,
    Hochster,
}

/// Betti table of `I` over 32003, recomputed over GF(2).
fn table(ideal: &MonomialIdeal) -> Result<BettiTable, String> {
    table_by(ideal, Route::Koszul)
}

fn table_by(ideal: &MonomialIdeal, route: Route) -> Result<BettiTable, String> {
    let compute = |f| match route {
        Route::Koszul => betti_table_koszul(ideal, f),
        Route::Hochster => betti_table_hochster(ideal, f),
    };
    let main = compute(P).map_err(err)?;
    let other = compute(TWO).map_err(err)?;
    if !main.entries().eq(other.entries()) {
        return Err(format!(
            "torsion: Betti tables differ between characteristic {} and {}",
            P.characteristic(),
            TWO.characteristic()
        ));
    }
    Ok(main)
}

/// `(reg, depth)` of `S/I` with `ambient` variables.
fn quotient_invariants(ideal: &MonomialIdeal, ambient: usize) -> Result<(i64, i64), String> {
    quotient_invariants_by(ideal, ambient, Route::Koszul)
}

fn quotient_invariants_by(
    ideal: &MonomialIdeal,
    ambient: usize,
    route: Route,
) -> Result<(i64, i64), String> {
    if ideal.is_zero() {
        return Ok((0, ambient as i64));
    }
    let q = table_by(ideal, route)?.to_quotient();
    Ok((q.reg().unwrap(), ambient as i64 - q.pd().unwrap() as i64))
}

fn ideal_reg(ideal: &MonomialIdeal) -> Result<Option<i64>, String> {
    if ideal.is_unit() {
        return Ok(None);
    }
    Ok(Some(quotient_invariants(ideal, ideal.nvars())?.0 + 1))
}

fn board(m: usize, n: usize) -> Result<Board, String> {
    Board::new(m, n).map_err(err)
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

fn case(
    id: impl Into<String>,
    criterion: u8,
    description: impl Into<String>,
    suite: Suite,
    work: u128,
    check: impl Fn() -> Result<Outcome, String> + Send + Sync + 'static,
) -> CaseDef {
    CaseDef {
        id: id.into(),
        criterion,
        description: description.into(),
        suite,
        work,
        check: Box::new(check),
    }
}

fn decomposition_boards() -> Vec<(usize, usize)> {
    (1..=3)
        .flat_map(|m| (m..=5).map(move |n| (m, n)))
        .chain([(4, 4)])
        .collect()
}

fn reproduction_cases() -> Vec<CaseDef> {
    let mut cases = Vec::new();
    for (m, n) in decomposition_boards() {
        cases.push(case(
            format!("primes-{m}x{n}"),
            1,
            format!("formula primes of F({m},{n}) equal the minimal vertex covers"),
            Suite::Stated,
            0,
            move || {
                let b = board(m, n)?;
                let formula = b.minimal_primes_formula();
                let covers = b.facet_ideal().minimal_primes().map_err(err)?;
                let count: i64 = (0..m).map(|s| binomial(m, s) * binomial(n, m - 1 - s)).sum();
                Ok(Outcome::default()
                    .expect("count", count, Source::Formula)
                    .expect("sets_equal", 1, Source::Oracle)
                    .got("count", covers.len() as i64)
                    .got("sets_equal", (formula == covers) as i64))
            },
        ));
        cases.push(case(
            format!("profile-{m}x{n}"),
            2,
            format!("height, dim, bight of F({m},{n}) from the enumerated primes"),
            Suite::Stated,
            0,
            move || {
                let b = board(m, n)?;
                let closed = b.prime_profile();
                let covers = b.facet_ideal().minimal_primes().map_err(err)?;
                let found = PrimeProfile::from_primes(&covers, b.nvars()).ok_or("no primes")?;
                Ok(Outcome::default()
                    .expect("height", closed.height as i64, Source::Formula)
                    .expect("dim", closed.dim as i64, Source::Formula)
                    .expect("bight", closed.bight as i64, Source::Formula)
                    .got("height", found.height as i64)
                    .got("dim", found.dim as i64)
                    .got("bight", found.bight as i64))
            },
        ));
    }
    for n in 1..=4 {
        for t in 1..=3u32 {
            cases.push(case(
                format!("one-row-{n}-t{t}"),
                3,
                format!("S/F(1,{n})^{t} is zero-dimensional with reg {}", t - 1),
                Suite::Stated,
                0,
                move || {
                    let i = board(1, n)?.facet_ideal().power(t).map_err(err)?;
                    let (reg, depth) = quotient_invariants(&i, n)?;
                    Ok(Outcome::default()
                        .expect("reg", t as i64 - 1, Source::Stated)
                        .expect("depth", 0, Source::Stated)
                        .got("reg", reg)
                        .got("depth", depth))
                },
            ));
        }
    }
    let two_row: Vec<(usize, u32)> = [2, 3]
        .iter()
        .flat_map(|&n| (1..=3).map(move |t| (n, t)))
        .chain([(4, 1), (4, 2), (3, 4), (4, 3)])
        .collect();
    for (n, t) in two_row {
        let deep = (n == 3 && t >= 4) || (n >= 4 && t >= 3);
        let depth = if deep { 1 } else { 2 };
        let power = board(2, n).unwrap().facet_ideal().power(t).unwrap();
        let work = work_estimate(&power);
        cases.push(case(
            format!("two-row-{n}-t{t}"),
            4,
            format!("S/F(2,{n})^{t}: reg {}, depth {depth}", 2 * t),
            if deep { Suite::Long } else { Suite::Stated },
            work,
            move || {
                let (reg, d) = quotient_invariants(&power, 2 * n)?;
                Ok(Outcome::default()
                    .expect("reg", 2 * t as i64, Source::Stated)
                    .expect("depth", depth, Source::Stated)
                    .got("reg", reg)
                    .got("depth", d))
            },
        ));
    }
    for n in [3, 4] {
        cases.push(case(
            format!("three-row-{n}"),
            5,
            format!("S/F(3,{n}): reg 4, depth 4"),
            Suite::Stated,
            0,
            move || {
                let (reg, depth) = quotient_invariants(&board(3, n)?.facet_ideal(), 3 * n)?;
                Ok(Outcome::default()
                    .expect("reg", 4, Source::Stated)
                    .expect("depth", 4, Source::Stated)
                    .got("reg", reg)
                    .got("depth", depth))
            },
        ));
    }
    let fixtures = [
        (Fixture::LSix, 0),
        (Fixture::L2n3, 3),
        (Fixture::L2n3, 4),
        (Fixture::L2n3, 5),
        (Fixture::L2n5, 4),
        (Fixture::L2n5, 5),
    ];
    for (fx, n) in fixtures {
        let id = if fx == Fixture::LSix { fx.name().to_string() } else { format!("{}-{n}", fx.name()) };
        cases.push(case(
            format!("fixture-{id}"),
            6,
            format!("reg({id}) = {}", fx.expected_reg(n)),
            Suite::Stated,
            0,
            move || {
                let i = fx.ideal(n).map_err(err)?;
                let reg = ideal_reg(&i)?.ok_or("unit ideal")?;
                Ok(Outcome::default()
                    .expect("reg", fx.expected_reg(n), if fx == Fixture::LSix { Source::Stated } else { Source::Formula })
                    .got("reg", reg))
            },
        ));
    }
    for m in [2, 3] {
        for n in m..=4 {
            cases.push(case(
                format!("matching-{m}x{n}"),
                7,
                format!("induced matching of value 2(m-1) in the ({m},{n}) complex bounds reg"),
                Suite::Stated,
                0,
                move || {
                    let b = board(m, n)?;
                    let cx = b.chessboard_complex();
                    let found = cx.induced_matching_bound(3).map_err(err)?;
                    let union = found.witness.iter().fold(Subset::EMPTY, |a, f| a.union(*f));
                    let valid = cx.is_induced_matching(&found.witness)
                        && union.len() - found.witness.len() == found.value;
                    let (reg, _) = quotient_invariants(&b.facet_ideal(), b.nvars())?;
                    let bound = 2 * (m as i64 - 1);
                    Ok(Outcome::default()
                        .expect("bound_reached", 1, Source::Formula)
                        .expect("witness_valid", 1, Source::Oracle)
                        .expect("reg_at_least_bound", 1, Source::Stated)
                        .got("bound_reached", (found.value as i64 >= bound) as i64)
                        .got("witness_valid", valid as i64)
                        .got("reg_at_least_bound", (reg >= found.value as i64) as i64)
                        .got("value", found.value as i64)
                        .got("reg", reg))
                },
            ));
        }
    }
    for m in 1..=3 {
        for n in m..=4 {
            cases.push(case(
                format!("a-invariant-{m}x{n}"),
                8,
                format!("a(S/F({m},{n})) = 0"),
                Suite::Stated,
                0,
                move || {
                    let b = board(m, n)?;
                    let i = b.facet_ideal();
                    let h = hilbert_series(&i, b.nvars()).map_err(err)?;
                    let k = table(&i)?.k_polynomial();
                    Ok(Outcome::default()
                        .expect("a", 0, Source::Stated)
                        .expect("k_polynomials_agree", 1, Source::Oracle)
                        .got("a", h.a_invariant())
                        .got("k_polynomials_agree", (h.raw_numerator == k) as i64))
                },
            ));
        }
    }
    for m in 1..=4usize {
        for n in 1..=4usize {
            cases.push(case(
                format!("sr-depth-{m}x{n}"),
                9,
                format!("depth of the Stanley-Reisner ring of the ({m},{n}) complex"),
                Suite::Stated,
                0,
                move || {
                    // the complex of an m×n board is that of its transpose
                    let b = board(m.min(n), m.max(n))?;
                    // induced subcomplexes of a chessboard complex are small
                    let sr = b.stanley_reisner_ideal();
                    let (_, depth) = quotient_invariants_by(&sr, m * n, Route::Hochster)?;
                    let v = m.min(n).min((m + n + 1) / 3);
                    Ok(Outcome::default()
                        .expect("depth", v as i64, Source::Formula)
                        .got("depth", depth))
                },
            ));
        }
    }
    let big = board(4, 4).unwrap().facet_ideal();
    cases.push(case(
        "four-by-four",
        10,
        "S/F(4,4): reg 6, depth 6",
        Suite::Long,
        work_estimate(&big),
        move || {
            let (reg, depth) = quotient_invariants(&big, 16)?;
            Ok(Outcome::default()
                .expect("reg", 6, Source::Stated)
                .expect("depth", 6, Source::Stated)
                .got("reg", reg)
                .got("depth", depth))
        },
    ));
    cases
}

/// Squarefree ideals exercised by the property cases.
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
                let sr = Board::new(m, n).unwrap().stanley_reisner_ideal();
                out.push((format!("SR({m},{n})"), sr));
            }
        }
    }
    out
}

fn random_ideal(rng: &mut ChaCha8Rng, nvars: usize, offset: usize, k: usize, max_exp: u32) -> MonomialIdeal {
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

/// Collects the first few violations of a property.
#[derive(Default)]
struct Violations {
    count: i64,
    first: Vec<String>,
}

impl Violations {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.count += 1;
            if self.first.len() < 3 {
                self.first.push(what());
            }
        }
    }

    fn outcome(self, checked: i64) -> Outcome {
        let note = (!self.first.is_empty()).then(|| self.first.join("; "));
        Outcome::default()
            .expect("violations", 0, Source::Oracle)
            .got("violations", self.count)
            .got("checked", checked)
            .note(note)
    }
}

fn facet_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal, String> {
    c.facet_ideal().map_err(err)
}

fn property_cases() -> Vec<CaseDef> {
    let mut cases = Vec::new();
    let mut add = |id: &str, description: &str, check: fn() -> Result<Outcome, String>| {
        cases.push(case(id, 11, description, Suite::Properties, 0, check));
    };
    add("hochster-equals-koszul", "Hochster and lcm-lattice tables agree on the squarefree corpus", || {
        let mut v = Violations::default();
        let corpus = squarefree_corpus();
        for (name, i) in &corpus {
            for f in [P, TWO] {
                let k = betti_table_koszul(i, f).map_err(err)?;
                let h = betti_table_hochster(i, f).map_err(err)?;
                v.check(k == h, || format!("{name} over {}", f.characteristic()));
            }
        }
        Ok(v.outcome(2 * corpus.len() as i64))
    });
    add("dual-involution", "Alexander duality is an involution on F(m,n), m <= 3, n <= 4", || {
        let mut v = Violations::default();
        let mut checked = 0;
        for m in 1..=3 {
            for n in m..=4 {
                let i = board(m, n)?.facet_ideal();
                let back = i.alexander_dual().and_then(|d| d.alexander_dual()).map_err(err)?;
                v.check(back == i, || format!("F({m},{n})"));
                checked += 1;
            }
        }
        Ok(v.outcome(checked))
    });
    add("terai", "pd(S/I) = reg of the Alexander dual on the squarefree corpus", || {
        let mut v = Violations::default();
        let corpus = squarefree_corpus();
        for (name, i) in &corpus {
            let c = terai_check(i, P).map_err(err)?;
            v.check(c.holds, || format!("{name}: pd {} reg {}", c.pd_quotient, c.reg_dual));
        }
        Ok(v.outcome(corpus.len() as i64))
    });
    add("quotient-shift", "reg(S/I) = reg(I) - 1 and pd(S/I) = pd(I) + 1 on the corpus", || {
        let mut v = Violations::default();
        let corpus = squarefree_corpus();
        for (name, i) in &corpus {
            let t = table(i)?;
            let q = t.to_quotient();
            v.check(q.reg() == t.reg().map(|r| r - 1), || format!("{name} reg"));
            v.check(q.pd() == t.pd().map(|p| p + 1), || format!("{name} pd"));
        }
        Ok(v.outcome(corpus.len() as i64))
    });
    add("disjoint-sums", "reg and depth of I+J and IJ in disjoint variables, 50 random pairs", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut v = Violations::default();
        for case in 0..50 {
            let a = rng.random_range(2..=4);
            let b = rng.random_range(2..=4);
            let e = rng.random_range(1..=2);
            let i = random_ideal(&mut rng, a + b, 0, a, e);
            let j = random_ideal(&mut rng, a + b, a, b, e);
            let (ti, tj) = (table(&i)?, table(&j)?);
            let sum = table(&i.sum(&j).map_err(err)?)?;
            let prod = table(&i.product(&j).map_err(err)?)?;
            let (ri, rj) = (ti.reg().unwrap(), tj.reg().unwrap());
            let di = (a - ti.pd().unwrap()) as i64;
            let dj = (b - tj.pd().unwrap()) as i64;
            v.check(sum.reg() == Some(ri + rj - 1), || format!("case {case}: reg of sum"));
            v.check(prod.reg() == Some(ri + rj), || format!("case {case}: reg of product"));
            v.check((a + b - sum.pd().unwrap()) as i64 == di + dj - 1, || format!("case {case}: depth of sum"));
            v.check((a + b - prod.pd().unwrap()) as i64 == di + dj, || format!("case {case}: depth of product"));
        }
        Ok(v.outcome(50))
    });
    add("adjoin-bound", "reg(S/(I,f)) <= reg(S/I) + deg f - 1 on 50 random pairs", || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut v = Violations::default();
        for case in 0..50 {
            let i = random_ideal(&mut rng, 5, 0, 5, 2);
            let f = loop {
                let e: Vec<u32> = (0..5).map(|_| rng.random_range(0..=2)).collect();
                let f = Monomial::new(e);
                if !f.is_one() {
                    break f;
                }
            };
            let before = quotient_invariants(&i, 5)?.0;
            let j = i.adjoin(&f).map_err(err)?;
            if !j.is_unit() {
                let after = quotient_invariants(&j, 5)?.0;
                v.check(after < before + f.degree() as i64, || format!("case {case}"));
            }
        }
        Ok(v.outcome(50))
    });
    add("power-sum-formula", "power formula for sums predicts F(2,2)^t, t <= 3", || {
        let vars = Arc::new(VariableSet::new(2));
        let edge = MonomialIdeal::from_subsets([Subset::from_indices([0, 1])], vars).map_err(err)?;
        let mut comp = Vec::new();
        for k in 1..=3 {
            let (reg, depth) = quotient_invariants(&edge.power(k).map_err(err)?, 2)?;
            comp.push(PowerInvariants { reg, depth: depth as usize });
        }
        let f = board(2, 2)?.facet_ideal();
        let mut v = Violations::default();
        for t in 1..=3u32 {
            let p = sum_formula_predict(&comp, &comp, t as usize).map_err(err)?;
            let (reg, depth) = quotient_invariants(&f.power(t).map_err(err)?, 4)?;
            v.check(p.reg == reg && p.depth as i64 == depth, || {
                format!("t={t}: predicted ({}, {}) direct ({reg}, {depth})", p.reg, p.depth)
            });
        }
        Ok(v.outcome(3))
    });
    add("bottom-row-colons", "colon and sum identities for the A and B subcomplexes, m <= 3, n <= 4", || {
        let mut v = Violations::default();
        let mut checked = 0;
        for m in 1..=3 {
            for n in m..=4 {
                let b = board(m, n)?;
                let fi = |i| b.subcomplex_a(i).map_err(err).and_then(|c| facet_ideal(&c));
                let gi = |i| b.subcomplex_b(i).map_err(err).and_then(|c| facet_ideal(&c));
                v.check(fi(n)?.is_zero(), || format!("({m},{n}): last A is not void"));
                let mut sum_g = MonomialIdeal::zero(b.vars().clone());
                for i in 1..=n {
                    let x = b.var(m, i).map_err(err)?;
                    let colon = fi(i - 1)?.colon_by_monomial(&x).map_err(err)?;
                    v.check(colon == fi(i)?.sum(&gi(i)?).map_err(err)?, || format!("({m},{n}) colon {i}"));
                    let left = fi(i - 1)?.adjoin(&x).map_err(err)?;
                    v.check(left == fi(i)?.adjoin(&x).map_err(err)?, || format!("({m},{n}) sum {i}"));
                    sum_g = sum_g.sum(&gi(i)?).map_err(err)?;
                    checked += 2;
                }
                v.check(sum_g == facet_ideal(&b.row_reduced_complex())?, || format!("({m},{n}) sum of B"));
            }
        }
        Ok(v.outcome(checked))
    });
    add("subset-colon-depth", "depth(S/F(3,3)) >= min over W of depth(S/F_W), F_W = sum of G_i + (W^c)", || {
        let b = board(3, 3)?;
        let i = b.facet_ideal();
        let bottom = b.bottom_row();
        let bound = subset_colon_bound(&i, &bottom, 9, P).map_err(err)?;
        let mut v = Violations::default();
        for c in &bound.cases {
            let mut want = MonomialIdeal::zero(b.vars().clone());
            for (k, x) in bottom.iter().enumerate() {
                want = if c.subset.contains(&k) {
                    want.sum(&facet_ideal(&b.subcomplex_b(k + 1).map_err(err)?)?)
                } else {
                    want.adjoin(x)
                }
                .map_err(err)?;
            }
            v.check(c.ideal == want, || format!("W = {:?}", c.subset));
        }
        let (_, depth) = quotient_invariants(&i, 9)?;
        let floor = bound.depth_bound.ok_or("no admissible W")? as i64;
        v.check(depth >= floor, || format!("depth {depth} < {floor}"));
        Ok(v.outcome(bound.cases.len() as i64 + 1))
    });
    add("colon-sequence", "adjoining the two-row products bounds reg(F(3,n)) by 5, n = 3, 4", || {
        let mut v = Violations::default();
        for n in [3, 4] {
            let b = board(3, n)?;
            let mut order: Vec<Monomial> = board(2, n)?
                .facet_ideal()
                .gens()
                .iter()
                .map(|g| {
                    let mut e = g.exponents().to_vec();
                    e.resize(3 * n, 0);
                    Monomial::new(e)
                })
                .collect();
            order.sort_by(|x, y| y.cmp_lex(x));
            let i = b.facet_ideal();
            let r = colon_sequence_reg_bound(&i, &order, ColonMode::AddGenerators, P).map_err(err)?;
            let truth = ideal_reg(&i)?.ok_or("unit")?;
            v.check(r.bound <= 5 && r.bound >= truth, || format!("n={n}: bound {}", r.bound));
            v.check(r.final_reg == 3, || format!("n={n}: final reg {}", r.final_reg));
            for s in &r.steps {
                v.check(s.colon_reg.is_none_or(|c| c <= 3), || format!("n={n}: step reg {:?}", s.colon_reg));
            }
        }
        Ok(v.outcome(2))
    });
    add("path-ideals", "reg(P_2) = floor((n+1)/3) + 1 and reg(P_{n-1}) = n - 1 on paths and cycles, n <= 7", || {
        let mut v = Violations::default();
        let mut checked = 0;
        for n in 3..=7usize {
            for kind in [PathKind::Path, PathKind::Cycle] {
                let p2 = path_ideal(kind, n, 2).map_err(err)?;
                let pn = path_ideal(kind, n, n - 1).map_err(err)?;
                v.check(ideal_reg(&p2)? == Some((n as i64 + 1) / 3 + 1), || format!("{kind:?} {n} P2"));
                v.check(ideal_reg(&pn)? == Some(n as i64 - 1), || format!("{kind:?} {n} P(n-1)"));
                checked += 2;
            }
        }
        Ok(v.outcome(checked))
    });
    add("relabeling", "Betti tables are unchanged by 20 random variable permutations", || {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        let corpus = squarefree_corpus();
        let mut v = Violations::default();
        for round in 0..20 {
            let (name, i) = &corpus[rng.random_range(0..corpus.len())];
            let mut perm: Vec<usize> = (0..i.nvars()).collect();
            for k in (1..perm.len()).rev() {
                perm.swap(k, rng.random_range(0..=k));
            }
            let moved = i.permute(&perm).map_err(err)?;
            v.check(table(&moved)? == table(i)?, || format!("round {round}: {name}"));
        }
        Ok(v.outcome(20))
    });
    add("homology-sanity", "cones are acyclic and Euler characteristics match face counts", || {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let mut v = Violations::default();
        for round in 0..40 {
            let n = rng.random_range(2..=7);
            let facets: Vec<Subset> = (0..rng.random_range(1..=5))
                .map(|_| Subset(rng.random_range(0..1u64 << n)))
                .collect();
            let vars = Arc::new(VariableSet::new(n + 1));
            let cx = SimplicialComplex::from_facets(vars.clone(), facets.clone()).map_err(err)?;
            let cone = SimplicialComplex::from_facets(vars, facets.iter().map(|f| f.with(n)).collect::<Vec<_>>())
                .map_err(err)?;
            let faces = cx.faces_by_size();
            let alternating: i64 = faces
                .iter()
                .enumerate()
                .map(|(k, l)| if k % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
                .sum();
            for f in [P, TWO] {
                v.check(reduced_betti(&cone, f).is_acyclic(), || format!("round {round}: cone"));
                v.check(reduced_betti(&cx, f).euler_characteristic() == alternating, || {
                    format!("round {round}: Euler")
                });
            }
        }
        Ok(v.outcome(40))
    });
    cases
}

/// Every case, in catalog order.
pub fn catalog() -> Vec<CaseDef> {
    let mut all = reproduction_cases();
    all.extend(property_cases());
    all
}

fn selected(suite: Suite, case: Suite) -> bool {
    suite == Suite::All || suite == case
}

pub fn run_case(def: &CaseDef, options: RunOptions) -> VerifyCase {
    let mut result = VerifyCase {
        id: def.id.clone(),
        criterion: def.criterion,
        description: def.description.clone(),
        expected: Vec::new(),
        computed: Vec::new(),
        status: Status::SkippedLong,
        runtime_ms: 0,
        note: None,
    };
    if def.suite == Suite::Long {
        if let Some(budget) = options.long_budget {
            if def.work > budget {
                result.note = Some(format!("predicted work {} exceeds budget {budget}", def.work));
                return result;
            }
        }
    }
    let start = Instant::now();
    let outcome = (def.check)();
    result.runtime_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(o) => {
            result.status = if o.passes() { Status::Pass } else { Status::Fail };
            result.expected = o.expected;
            result.computed = o.computed;
            result.note = o.note;
        }
        Err(e) => {
            result.status = Status::Fail;
            result.note = Some(e);
        }
    }
    result
}

pub fn run_suite(suite: Suite, options: RunOptions) -> Vec<VerifyCase> {
    catalog()
        .iter()
        .filter(|c| selected(suite, c.suite))
        .map(|c| run_case(c, options))
        .collect()
}

/// One aligned line per case.
pub fn format_case(c: &VerifyCase) -> String {
    let values: Vec<String> = c
        .expected
        .iter()
        .map(|e| {
            let got = c
                .computed
                .iter()
                .find(|v| v.name == e.name)
                .map_or("-".to_string(), |v| v.value.to_string());
            format!("{}={}/{}", e.name, got, e.value)
        })
        .collect();
    let mut line = format!(
        "{:<12} {:<26} {:>7}ms  {}",
        c.status.label(),
        c.id,
        c.runtime_ms,
        values.join(" ")
    );
    if let Some(note) = &c.note {
        line.push_str("  # ");
        line.push_str(note);
    }
    line
}

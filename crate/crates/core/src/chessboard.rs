//! The m×n chessboard: its rook complex, facet and Stanley-Reisner ideals,
//! closed-form prime data, the A/B/D subcomplexes and fixture ideals.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::ring::{Monomial, MonomialIdeal, VariableSet};
use crate::simplicial::SimplicialComplex;
use crate::{Error, Result, Subset};

/// An `m × n` board with `1 ≤ m ≤ n`. Cell `(i, j)` (1-based) is variable
/// `(i-1)·n + (j-1)`, so the variable order is row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    m: usize,
    n: usize,
    vars: Arc<VariableSet>,
}

/// Height, dimension and big height of the facet ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeProfile {
    pub height: usize,
    pub dim: usize,
    pub bight: usize,
}

impl PrimeProfile {
    /// Profile read off an explicit list of minimal primes in `nvars`
    /// variables. `None` for an empty list.
    pub fn from_primes(primes: &[Subset], nvars: usize) -> Option<Self> {
        let height = primes.iter().map(|p| p.len()).min()?;
        let bight = primes.iter().map(|p| p.len()).max()?;
        Some(PrimeProfile {
            height,
            dim: nvars - height,
            bight,
        })
    }
}

fn label(i: usize, j: usize, n: usize) -> String {
    if n <= 9 {
        format!("x{i}{j}")
    } else {
        format!("x{i}_{j}")
    }
}

/// All `k`-element subsets of `items`, each in the given order.
fn choose(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            if items.len() - idx < k - cur.len() {
                break;
            }
            cur.push(items[idx]);
            go(items, k, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

impl Board {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m > n {
            return Err(Error::InvalidBoard { m, n });
        }
        if m * n > 64 {
            return Err(Error::TooManyVariables(m * n));
        }
        let labels = (1..=m).flat_map(|i| (1..=n).map(move |j| label(i, j, n)));
        Ok(Board {
            m,
            n,
            vars: Arc::new(VariableSet::with_labels(labels)?),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    /// Flat variable index of the 1-based cell `(i, j)`.
    pub fn index(&self, i: usize, j: usize) -> Result<usize> {
        if !(1..=self.m).contains(&i) || !(1..=self.n).contains(&j) {
            return Err(Error::OutOfRange(format!(
                "cell ({i},{j}) outside a {}x{} board",
                self.m, self.n
            )));
        }
        Ok((i - 1) * self.n + (j - 1))
    }

    /// The 1-based cell of a flat variable index.
    pub fn cell(&self, index: usize) -> Result<(usize, usize)> {
        if index >= self.nvars() {
            return Err(Error::OutOfRange(format!("variable {index}")));
        }
        Ok((index / self.n + 1, index % self.n + 1))
    }

    /// The monomial `x_{i j}`.
    pub fn var(&self, i: usize, j: usize) -> Result<Monomial> {
        Ok(Monomial::var(self.nvars(), self.index(i, j)?))
    }

    /// Product of the given cells.
    pub fn monomial(&self, cells: &[(usize, usize)]) -> Result<Monomial> {
        let mut exps = vec![0u32; self.nvars()];
        for &(i, j) in cells {
            exps[self.index(i, j)?] += 1;
        }
        Ok(Monomial::new(exps))
    }

    /// Bottom-row variables `x_{m1}, …, x_{mn}`.
    pub fn bottom_row(&self) -> Vec<Monomial> {
        (1..=self.n)
            .map(|j| Monomial::var(self.nvars(), (self.m - 1) * self.n + (j - 1)))
            .collect()
    }

    fn cells(&self, rows: &[usize], cols: &[usize]) -> Subset {
        let mut s = Subset::EMPTY;
        for &i in rows {
            for &j in cols {
                s = s.with((i - 1) * self.n + (j - 1));
            }
        }
        s
    }

    fn check_lines(&self, rows: &[usize], cols: &[usize]) -> Result<()> {
        let strictly_up = |xs: &[usize]| xs.windows(2).all(|w| w[0] < w[1]);
        if !strictly_up(rows) || !strictly_up(cols) {
            return Err(Error::InvalidArgument(
                "row and column lists must be strictly increasing".into(),
            ));
        }
        if rows.iter().any(|&i| !(1..=self.m).contains(&i))
            || cols.iter().any(|&j| !(1..=self.n).contains(&j))
        {
            return Err(Error::OutOfRange(format!(
                "rows {rows:?} / columns {cols:?} outside a {}x{} board",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// Rook complex of the sub-board on `rows × cols`, in this board's
    /// variables: facets are the non-attacking placements of
    /// `min(|rows|, |cols|)` rooks. No rows or no columns gives the
    /// irrelevant complex.
    pub fn complex_on(&self, rows: &[usize], cols: &[usize]) -> Result<SimplicialComplex> {
        self.check_lines(rows, cols)?;
        let mut facets = Vec::new();
        let size = rows.len().min(cols.len());
        let mut used = vec![false; cols.len()];
        self.placements(rows, cols, 0, size, &mut used, Subset::EMPTY, &mut facets);
        SimplicialComplex::from_facets(self.vars.clone(), facets)
    }

    #[allow(clippy::too_many_arguments)]
    fn placements(
        &self,
        rows: &[usize],
        cols: &[usize],
        r: usize,
        left: usize,
        used: &mut [bool],
        acc: Subset,
        out: &mut Vec<Subset>,
    ) {
        if left == 0 {
            out.push(acc);
            return;
        }
        if rows.len() - r < left {
            return;
        }
        // either place a rook in row r or, when rows outnumber rooks, skip it
        for c in 0..cols.len() {
            if !used[c] {
                used[c] = true;
                let v = (rows[r] - 1) * self.n + (cols[c] - 1);
                self.placements(rows, cols, r + 1, left - 1, used, acc.with(v), out);
                used[c] = false;
            }
        }
        self.placements(rows, cols, r + 1, left, used, acc, out);
    }

    fn all_rows(&self) -> Vec<usize> {
        (1..=self.m).collect()
    }

    fn all_cols(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    /// `Δ_{m,n}`.
    pub fn chessboard_complex(&self) -> SimplicialComplex {
        self.complex_on(&self.all_rows(), &self.all_cols())
            .expect("full board is in range")
    }

    /// `F(Δ_{m,n})`: one generator per rook placement, `n!/(n-m)!` in all.
    pub fn facet_ideal(&self) -> MonomialIdeal {
        self.chessboard_complex()
            .facet_ideal()
            .expect("board has at most 64 cells")
    }

    /// Same-row and same-column quadrics: the minimal non-faces of the
    /// complex.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let mut pairs = Vec::new();
        for a in 0..self.nvars() {
            for b in a + 1..self.nvars() {
                let (ra, ca) = (a / self.n, a % self.n);
                let (rb, cb) = (b / self.n, b % self.n);
                if ra == rb || ca == cb {
                    pairs.push(Subset::from_indices([a, b]));
                }
            }
        }
        MonomialIdeal::from_subsets(pairs, self.vars.clone()).expect("board has at most 64 cells")
    }

    /// Minimal primes by deleting `s` rows and `m-1-s` columns for every
    /// `s < m`, in lexicographic order.
    pub fn minimal_primes_formula(&self) -> Vec<Subset> {
        let rows = self.all_rows();
        let cols = self.all_cols();
        let mut primes = Vec::new();
        for s in 0..self.m {
            let c = self.m - 1 - s;
            for dr in choose(&rows, s) {
                for dc in choose(&cols, c) {
                    let kr: Vec<usize> = rows.iter().copied().filter(|i| !dr.contains(i)).collect();
                    let kc: Vec<usize> = cols.iter().copied().filter(|j| !dc.contains(j)).collect();
                    primes.push(self.cells(&kr, &kc));
                }
            }
        }
        primes.sort_by(|a, b| a.cmp_lex(*b));
        primes.dedup();
        primes
    }

    /// Closed forms: height `n`, dimension `(m-1)n`, and big height
    /// `⌊(n+1)²/4⌋` when `n < 2m-1`, else `(n-m+1)m`.
    pub fn prime_profile(&self) -> PrimeProfile {
        let (m, n) = (self.m, self.n);
        let bight = if n < 2 * m - 1 {
            (n + 1) * (n + 1) / 4
        } else {
            (n - m + 1) * m
        };
        PrimeProfile {
            height: n,
            dim: (m - 1) * n,
            bight,
        }
    }

    /// `A_{m,i}`: facets avoiding `x_{m1}, …, x_{mi}`. `i = 0` is the whole
    /// complex and `i = n` the void complex.
    pub fn subcomplex_a(&self, i: usize) -> Result<SimplicialComplex> {
        if i > self.n {
            return Err(Error::OutOfRange(format!("column {i} > {}", self.n)));
        }
        let banned = self.cells(&[self.m], &(1..=i).collect::<Vec<_>>());
        let whole = self.chessboard_complex();
        SimplicialComplex::from_facets(
            self.vars.clone(),
            whole.facets().iter().copied().filter(|f| !f.intersects(banned)).collect::<Vec<_>>(),
        )
    }

    /// `B_{m,i}`: the rook complex with row `m` and column `i` removed.
    pub fn subcomplex_b(&self, i: usize) -> Result<SimplicialComplex> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::OutOfRange(format!("column {i} outside 1..={}", self.n)));
        }
        let rows: Vec<usize> = (1..self.m).collect();
        let cols: Vec<usize> = self.all_cols().into_iter().filter(|&j| j != i).collect();
        self.complex_on(&rows, &cols)
    }

    /// `D_{i_1,…,i_m}`: the rook complex of the `m × m` board on the chosen
    /// columns.
    pub fn subcomplex_d(&self, cols: &[usize]) -> Result<SimplicialComplex> {
        if cols.len() != self.m {
            return Err(Error::InvalidArgument(format!(
                "expected {} columns, got {}",
                self.m,
                cols.len()
            )));
        }
        self.complex_on(&self.all_rows(), cols)
    }

    /// Every strictly increasing choice of `m` columns.
    pub fn column_choices(&self) -> Vec<Vec<usize>> {
        choose(&self.all_cols(), self.m)
    }

    /// `Δ_{m-1,n}` on the first `m-1` rows, in this board's variables.
    pub fn row_reduced_complex(&self) -> SimplicialComplex {
        self.complex_on(&(1..self.m).collect::<Vec<_>>(), &self.all_cols())
            .expect("rows and columns in range")
    }
}

/// Named ideals whose regularity is known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fixture {
    /// Nine quadrics in six variables: two triangles joined by a matching.
    #[serde(rename = "L_six")]
    LSix,
    /// Two row products plus, for each column pair, the product of both
    /// rows with that pair removed. Regularity `2n-3`.
    #[serde(rename = "L_2n3")]
    L2n3,
    /// Row products with one column removed plus the `L_2n3` pair products
    /// on the first `n-1` columns. Regularity `2n-5`.
    #[serde(rename = "L_2n5")]
    L2n5,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::LSix, Fixture::L2n3, Fixture::L2n5];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::LSix => "L_six",
            Fixture::L2n3 => "L_2n3",
            Fixture::L2n5 => "L_2n5",
        }
    }

    /// Smallest admissible `n`; `L_six` ignores `n`.
    pub fn min_n(self) -> usize {
        match self {
            Fixture::LSix => 0,
            Fixture::L2n3 => 3,
            Fixture::L2n5 => 4,
        }
    }

    /// The closed-form regularity of the ideal.
    pub fn expected_reg(self, n: usize) -> i64 {
        match self {
            Fixture::LSix => 3,
            Fixture::L2n3 => 2 * n as i64 - 3,
            Fixture::L2n5 => 2 * n as i64 - 5,
        }
    }

    pub fn ideal(self, n: usize) -> Result<MonomialIdeal> {
        fixture_ideal(self, n)
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown fixture {s:?}")))
    }
}

/// Product over both rows of the first `width` columns, minus the columns in
/// `skip`.
fn two_row_product(board: &Board, width: usize, skip: &[usize]) -> Monomial {
    let cells: Vec<(usize, usize)> = (1..=2)
        .flat_map(|k| (1..=width).filter(|j| !skip.contains(j)).map(move |j| (k, j)))
        .collect();
    board.monomial(&cells).expect("cells in range")
}

fn row_product(board: &Board, row: usize, width: usize, skip: Option<usize>) -> Monomial {
    let cells: Vec<(usize, usize)> = (1..=width)
        .filter(|&j| Some(j) != skip)
        .map(|j| (row, j))
        .collect();
    board.monomial(&cells).expect("cells in range")
}

/// Two row products over the first `width` columns and the pair-deleted
/// two-row products.
fn pair_products(board: &Board, width: usize) -> Vec<Monomial> {
    let mut gens = vec![row_product(board, 1, width, None), row_product(board, 2, width, None)];
    for i in 1..=width {
        for j in i + 1..=width {
            gens.push(two_row_product(board, width, &[i, j]));
        }
    }
    gens
}

pub fn fixture_ideal(fixture: Fixture, n: usize) -> Result<MonomialIdeal> {
    if n < fixture.min_n() {
        return Err(Error::InvalidArgument(format!(
            "{fixture} needs n >= {}, got {n}",
            fixture.min_n()
        )));
    }
    match fixture {
        Fixture::LSix => {
            let edges = [
                [0, 1], [0, 2], [1, 2], [3, 4], [3, 5], [4, 5], [0, 3], [1, 4], [2, 5],
            ];
            MonomialIdeal::from_subsets(
                edges.iter().map(|e| Subset::from_indices(e.iter().copied())),
                Arc::new(VariableSet::new(6)),
            )
        }
        Fixture::L2n3 => {
            let board = Board::new(2, n)?;
            MonomialIdeal::min_gens(pair_products(&board, n), board.vars().clone())
        }
        Fixture::L2n5 => {
            let board = Board::new(2, n)?;
            let mut gens: Vec<Monomial> = (1..=n)
                .flat_map(|j| [row_product(&board, 1, n, Some(j)), row_product(&board, 2, n, Some(j))])
                .collect();
            gens.extend(pair_products(&board, n - 1).into_iter().skip(2));
            MonomialIdeal::min_gens(gens, board.vars().clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(b: &Board, ideal: &MonomialIdeal) -> Vec<String> {
        ideal.gens().iter().map(|g| b.vars().format_monomial(g)).collect()
    }

    #[test]
    fn board_indexing_round_trips() {
        let b = Board::new(3, 4).unwrap();
        for idx in 0..12 {
            let (i, j) = b.cell(idx).unwrap();
            assert_eq!(b.index(i, j).unwrap(), idx);
        }
        assert_eq!(b.vars().label(5), "x22");
        assert!(b.index(4, 1).is_err());
        assert!(Board::new(3, 2).is_err());
        assert!(Board::new(0, 2).is_err());
    }

    #[test]
    fn facet_counts() {
        for (m, n, count) in [(1, 5, 5), (2, 4, 12), (3, 3, 6), (3, 4, 24), (4, 4, 24)] {
            let b = Board::new(m, n).unwrap();
            assert_eq!(b.chessboard_complex().facets().len(), count, "({m},{n})");
        }
    }

    #[test]
    fn small_facet_ideals() {
        let b = Board::new(3, 3).unwrap();
        let mut g = names(&b, &b.facet_ideal());
        g.sort();
        let mut want = vec![
            "x11*x22*x33", "x11*x23*x32", "x12*x21*x33", "x12*x23*x31", "x13*x21*x32",
            "x13*x22*x31",
        ];
        want.sort();
        assert_eq!(g, want);
        let b = Board::new(1, 3).unwrap();
        assert_eq!(names(&b, &b.facet_ideal()), ["x11", "x12", "x13"]);
        let b = Board::new(2, 2).unwrap();
        assert_eq!(names(&b, &b.facet_ideal()), ["x11*x22", "x12*x21"]);
    }

    #[test]
    fn stanley_reisner_quadrics() {
        let b = Board::new(2, 2).unwrap();
        let sr = b.stanley_reisner_ideal();
        assert_eq!(sr, b.chessboard_complex().stanley_reisner_ideal().unwrap());
        assert_eq!(sr.gens().len(), 4);
        assert_eq!(Board::new(1, 4).unwrap().stanley_reisner_ideal().gens().len(), 6);
        assert_eq!(Board::new(3, 3).unwrap().stanley_reisner_ideal().gens().len(), 18);
    }

    #[test]
    fn formula_primes_match_covers() {
        for m in 1..=3 {
            for n in m..=5 {
                let b = Board::new(m, n).unwrap();
                let formula = b.minimal_primes_formula();
                let covers = b.facet_ideal().minimal_primes().unwrap();
                assert_eq!(formula, covers, "({m},{n})");
                assert_eq!(
                    PrimeProfile::from_primes(&formula, b.nvars()),
                    Some(b.prime_profile()),
                    "({m},{n})"
                );
            }
        }
    }

    #[test]
    fn prime_sizes_at_three_by_three() {
        let b = Board::new(3, 3).unwrap();
        let mut sizes: Vec<usize> = b.minimal_primes_formula().iter().map(|p| p.len()).collect();
        sizes.sort();
        sizes.dedup();
        assert_eq!(sizes, [3, 4]);
        assert_eq!(b.prime_profile(), PrimeProfile { height: 3, dim: 6, bight: 4 });
        assert_eq!(
            Board::new(2, 3).unwrap().prime_profile(),
            PrimeProfile { height: 3, dim: 3, bight: 4 }
        );
    }

    #[test]
    fn subcomplexes_of_two_by_three() {
        let b = Board::new(2, 3).unwrap();
        let a = b.subcomplex_a(2).unwrap();
        assert_eq!(a.format_facets(), ["{x11,x23}", "{x12,x23}"]);
        let bb = b.subcomplex_b(2).unwrap();
        assert_eq!(bb.format_facets(), ["{x11}", "{x13}"]);
        assert!(b.subcomplex_a(3).unwrap().is_void());
        assert_eq!(b.subcomplex_a(0).unwrap(), b.chessboard_complex());
        let sq = Board::new(3, 3).unwrap();
        assert_eq!(sq.subcomplex_d(&[1, 2, 3]).unwrap(), sq.chessboard_complex());
        assert!(b.subcomplex_d(&[2, 1]).is_err());
        assert!(b.subcomplex_b(4).is_err());
        assert!(Board::new(1, 3).unwrap().subcomplex_b(1).unwrap().is_irrelevant());
    }

    #[test]
    fn fixtures() {
        let six = fixture_ideal(Fixture::LSix, 0).unwrap();
        assert_eq!(six.gens().len(), 9);
        assert!(six.gens().iter().all(|g| g.degree() == 2));

        let b = Board::new(2, 3).unwrap();
        let l = fixture_ideal(Fixture::L2n3, 3).unwrap();
        let mut g = names(&b, &l);
        g.sort();
        assert_eq!(g, ["x11*x12*x13", "x11*x21", "x12*x22", "x13*x23", "x21*x22*x23"]);

        let l = fixture_ideal(Fixture::L2n5, 4).unwrap();
        let mut degrees: Vec<u32> = l.gens().iter().map(|g| g.degree()).collect();
        degrees.dedup();
        assert_eq!(degrees, [2, 3]);
        assert_eq!(l.gens().len(), 8 + 3);
        assert!(fixture_ideal(Fixture::L2n5, 3).is_err());
        assert!(fixture_ideal(Fixture::L2n3, 2).is_err());
        assert_eq!("l_2n3".parse::<Fixture>().unwrap(), Fixture::L2n3);
    }
}

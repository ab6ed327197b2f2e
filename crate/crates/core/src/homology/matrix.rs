use super::field::Fp;
use super::FieldSpec;
use crate::{Error, Result};

/// A sparse matrix over a prime field in coordinate form.
///
/// Positions are unique, in range, and never hold a stored zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    /// `(row, col, value)` sorted by column, then row.
    entries: Vec<(usize, usize, u32)>,
}

impl SparseMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        mut entries: Vec<(usize, usize, u32)>,
        field: FieldSpec,
    ) -> Result<Self> {
        let p = field.characteristic();
        for &(r, c, v) in &entries {
            if r >= rows || c >= cols {
                return Err(Error::OutOfRange(format!(
                    "entry ({r}, {c}) outside {rows}x{cols}"
                )));
            }
            if v == 0 || v >= p {
                return Err(Error::InvalidArgument(format!(
                    "entry value {v} is not a nonzero element of GF({p})"
                )));
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (c, r));
        if entries.windows(2).any(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::InvalidArgument("duplicate matrix position".into()));
        }
        Ok(SparseMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, 1)).collect(),
        }
    }

    /// Build from columns already in canonical form (sorted rows, nonzero
    /// values reduced mod p).
    pub(crate) fn from_columns(rows: usize, columns: &[Vec<(u32, u32)>]) -> Self {
        let mut entries = Vec::with_capacity(columns.iter().map(Vec::len).sum());
        for (c, col) in columns.iter().enumerate() {
            entries.extend(col.iter().map(|&(r, v)| (r as usize, c, v)));
        }
        SparseMatrix {
            rows,
            cols: columns.len(),
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, u32)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries
            .binary_search_by_key(&(col, row), |&(r, c, _)| (c, r))
            .map(|i| self.entries[i].2)
            .unwrap_or(0)
    }

    pub(crate) fn columns(&self) -> Vec<Vec<(u32, u32)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for &(r, c, v) in &self.entries {
            cols[c].push((r as u32, v));
        }
        cols
    }

    /// Matrix product over GF(p).
    pub fn multiply(&self, other: &SparseMatrix, field: FieldSpec) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let fp = field.arith();
        let left = self.columns();
        let mut out = Vec::with_capacity(other.cols);
        for col in other.columns() {
            let mut acc = vec![0u32; self.rows];
            for (k, v) in col {
                for &(r, w) in &left[k as usize] {
                    acc[r as usize] = fp.add(acc[r as usize], fp.mul(v, w));
                }
            }
            out.push(
                acc.into_iter()
                    .enumerate()
                    .filter(|&(_, v)| v != 0)
                    .map(|(r, v)| (r as u32, v))
                    .collect(),
            );
        }
        Ok(SparseMatrix::from_columns(self.rows, &out))
    }
}

/// Dense elimination is used while the matrix has at most this many cells.
const DENSE_CELLS: usize = 1 << 20;

/// Rank over the field; dense kernels for small matrices, sparse column
/// reduction otherwise.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows.saturating_mul(m.cols) <= DENSE_CELLS {
        rank_dense(m, field)
    } else {
        rank_sparse(m, field)
    }
}

pub fn rank_dense(m: &SparseMatrix, field: FieldSpec) -> usize {
    if field.characteristic() == 2 {
        rank_gf2_dense(m)
    } else {
        rank_modp_dense(m, field.arith())
    }
}

pub fn rank_sparse(m: &SparseMatrix, field: FieldSpec) -> usize {
    let mut reducer = ColumnReducer::new(m.rows, field.arith());
    m.columns()
        .into_iter()
        .filter(|c| reducer.reduce(c.clone()).is_some())
        .count()
}

/// Bit-packed row elimination over GF(2).
fn rank_gf2_dense(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows];
    for &(r, c, _) in &m.entries {
        rows[r][c / 64] |= 1 << (c % 64);
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if row[w] & bit != 0 {
                for (x, y) in row[w..].iter_mut().zip(&pivot_row[w..]) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Row elimination with word-sized residues modulo an odd prime.
fn rank_modp_dense(m: &SparseMatrix, fp: Fp) -> usize {
    let mut rows = vec![vec![0u32; m.cols]; m.rows];
    for &(r, c, v) in &m.entries {
        rows[r][c] = v;
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let inv = fp.inv(pivot_row[c]);
        for row in rest.iter_mut() {
            if row[c] != 0 {
                let factor = fp.mul(row[c], inv);
                for (x, &y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if y != 0 {
                        *x = fp.sub(*x, fp.mul(factor, y));
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Incremental column reduction: each column is reduced against earlier
/// pivots (lowest nonzero row) and kept with its pivot normalized to 1.
pub(crate) struct ColumnReducer {
    fp: Fp,
    pivot_of_row: Vec<u32>,
    kept: Vec<Vec<(u32, u32)>>,
}

const NONE: u32 = u32::MAX;

impl ColumnReducer {
    pub fn new(rows: usize, fp: Fp) -> Self {
        ColumnReducer {
            fp,
            pivot_of_row: vec![NONE; rows],
            kept: Vec::new(),
        }
    }

    /// Reduce `col`; returns its pivot row when it survives.
    pub fn reduce(&mut self, mut col: Vec<(u32, u32)>) -> Option<u32> {
        let fp = self.fp;
        let mut scratch = Vec::new();
        loop {
            let &(low, value) = col.last()?;
            let owner = self.pivot_of_row[low as usize];
            if owner == NONE {
                let inv = fp.inv(value);
                if inv != 1 {
                    for e in &mut col {
                        e.1 = fp.mul(e.1, inv);
                    }
                }
                self.pivot_of_row[low as usize] = self.kept.len() as u32;
                self.kept.push(col);
                return Some(low);
            }
            // col -= value * kept[owner]; the pivot entries cancel
            let other = &self.kept[owner as usize];
            scratch.clear();
            let (mut i, mut j) = (0, 0);
            while i < col.len() || j < other.len() {
                let take_left = j == other.len() || (i < col.len() && col[i].0 < other[j].0);
                let take_right = i == col.len() || (j < other.len() && other[j].0 < col[i].0);
                if take_left {
                    scratch.push(col[i]);
                    i += 1;
                } else if take_right {
                    scratch.push((other[j].0, fp.neg(fp.mul(value, other[j].1))));
                    j += 1;
                } else {
                    let v = fp.sub(col[i].1, fp.mul(value, other[j].1));
                    if v != 0 {
                        scratch.push((col[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            std::mem::swap(&mut col, &mut scratch);
        }
    }
}

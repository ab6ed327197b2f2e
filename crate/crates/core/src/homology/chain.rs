use super::matrix::{rank_dense, ColumnReducer, SparseMatrix};
use super::FieldSpec;
use crate::simplicial::SimplicialComplex;
use crate::Subset;

/// Reduced Betti numbers `b̃_{-1}, b̃_0, …` of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedBetti {
    /// `values[k]` is `b̃_{k-1}`.
    values: Vec<usize>,
}

impl ReducedBetti {
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.values.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// `(d, b̃_d)` for every nonzero entry.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(k, &b)| (k as isize - 1, b))
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `Σ (-1)^d b̃_d`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating(&self.values)
    }

    pub fn as_vec(&self) -> Vec<usize> {
        self.values.clone()
    }
}

/// `Σ_k (-1)^(k-1) x_k`, the reduced-Euler sign convention for size-indexed
/// counts.
fn alternating(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) })
        .sum()
}

/// The `d`-faces (`d + 1` vertices) in ascending bit order. `d = -1` gives
/// the empty face of a non-void complex.
pub fn faces_of_dim(cx: &SimplicialComplex, d: isize) -> Vec<Subset> {
    if d < -1 {
        return Vec::new();
    }
    cx.faces_by_size()
        .get((d + 1) as usize)
        .cloned()
        .unwrap_or_default()
}

/// Columns of the boundary map from `faces` (all of one size `k ≥ 1`) to
/// `rows` (all faces of size `k - 1`, ascending). Deleting the vertex in
/// position `i` contributes `(-1)^i`.
fn boundary_columns(faces: &[Subset], rows: &[Subset], field: FieldSpec) -> Vec<Vec<(u32, u32)>> {
    let fp = field.arith();
    faces
        .iter()
        .map(|&f| {
            let mut col: Vec<(u32, u32)> = f
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let r = rows
                        .binary_search(&f.without(v))
                        .expect("complex is closed under taking faces");
                    (r as u32, fp.sign(pos))
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// `∂_d`: columns are the `d`-faces, rows the `(d-1)`-faces; for `d = 0` the
/// single row is the empty face.
pub fn boundary_matrix(cx: &SimplicialComplex, d: usize, field: FieldSpec) -> SparseMatrix {
    let faces = faces_of_dim(cx, d as isize);
    let rows = faces_of_dim(cx, d as isize - 1);
    SparseMatrix::from_columns(rows.len(), &boundary_columns(&faces, &rows, field))
}

pub fn reduced_betti(cx: &SimplicialComplex, field: FieldSpec) -> ReducedBetti {
    reduced_betti_of_faces(&cx.faces_by_size(), field)
}

/// Below this many matrix cells a boundary rank goes through the dense
/// kernels.
const DENSE_CELLS: usize = 1 << 12;

/// Reduced homology of the complex whose faces are listed by size
/// (`faces[k]` holds the faces with `k` vertices, ascending). An empty list
/// is the void complex.
///
/// Ranks are taken from the top dimension down. When a boundary map is
/// reduced sparsely, the faces that became pivots are cleared from the next
/// map down: their columns are known to reduce to zero.
pub fn reduced_betti_of_faces(faces: &[Vec<Subset>], field: FieldSpec) -> ReducedBetti {
    if faces.is_empty() || faces[0].is_empty() {
        return ReducedBetti::default();
    }
    let top = faces.len() - 1;
    // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; top + 2];
    let mut cleared: Option<Vec<bool>> = None;
    for k in (1..=top).rev() {
        let (cols, rows) = (&faces[k], &faces[k - 1]);
        if cols.is_empty() {
            cleared = None;
            continue;
        }
        if cols.len() * rows.len() <= DENSE_CELLS {
            let m = SparseMatrix::from_columns(rows.len(), &boundary_columns(cols, rows, field));
            ranks[k] = rank_dense(&m, field);
            cleared = None;
            continue;
        }
        let live: Vec<Subset> = match &cleared {
            Some(mask) => cols
                .iter()
                .zip(mask)
                .filter(|(_, &c)| !c)
                .map(|(f, _)| *f)
                .collect(),
            None => cols.clone(),
        };
        let mut reducer = ColumnReducer::new(rows.len(), field.arith());
        let mut next = vec![false; rows.len()];
        for col in boundary_columns(&live, rows, field) {
            if let Some(r) = reducer.reduce(col) {
                next[r as usize] = true;
                ranks[k] += 1;
            }
        }
        cleared = Some(next);
    }

    let values: Vec<usize> = (0..=top)
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    let counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    assert_eq!(
        alternating(&values),
        alternating(&counts),
        "reduced Euler characteristic mismatch"
    );
    // trim trailing zeros so equal homology compares equal
    let mut values = values;
    while values.last() == Some(&0) {
        values.pop();
    }
    ReducedBetti { values }
}

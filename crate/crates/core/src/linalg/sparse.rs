use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::int::Int;
use crate::error::{Error, Result};

/// Sparse integer matrix in sorted triplet form (row-major, no duplicates,
/// no stored zeros).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixDocument", into = "MatrixDocument")]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Int)>,
}

/// On-disk matrix form: `{rows, cols, entries: [[i, j, "v"], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, Int)>,
}

impl TryFrom<MatrixDocument> for SparseIntMatrix {
    type Error = Error;
    fn try_from(doc: MatrixDocument) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (i, j, _) in &doc.entries {
            if !seen.insert((*i, *j)) {
                return Err(Error::InvalidArgument(format!("duplicate entry ({i}, {j})")));
            }
        }
        SparseIntMatrix::from_triplets(doc.rows, doc.cols, doc.entries)
    }
}

impl From<SparseIntMatrix> for MatrixDocument {
    fn from(m: SparseIntMatrix) -> Self {
        MatrixDocument {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries,
        }
    }
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseIntMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, Int::ONE)).collect(),
        }
    }

    /// Duplicate positions are summed and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Int)>,
    {
        let mut acc: BTreeMap<(usize, usize), Int> = BTreeMap::new();
        for (i, j, v) in triplets {
            if i >= rows || j >= cols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i}, {j}) outside {rows}x{cols}"
                )));
            }
            let slot = acc.entry((i, j)).or_default();
            *slot = &*slot + &v;
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j), v)| (i, j, v))
            .collect();
        Ok(SparseIntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let triplets = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &v)| (i, j, Int::from(v)))
        });
        SparseIntMatrix::from_triplets(r, c, triplets).expect("dense shape is consistent")
    }

    pub fn from_dense_int(rows: usize, cols: usize, dense: &[Vec<Int>]) -> Self {
        let triplets = dense.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
        });
        SparseIntMatrix::from_triplets(rows, cols, triplets).expect("dense shape is consistent")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, Int)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Int {
        self.entries
            .binary_search_by(|(a, b, _)| (*a, *b).cmp(&(i, j)))
            .map(|k| self.entries[k].2.clone())
            .unwrap_or_default()
    }

    pub fn to_dense(&self) -> Vec<Vec<Int>> {
        let mut d = vec![vec![Int::ZERO; self.cols]; self.rows];
        for (i, j, v) in &self.entries {
            d[*i][*j] = v.clone();
        }
        d
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(i, j, v)| (*j, *i, v.clone()))
            .collect();
        entries.sort_by_key(|a| (a.0, a.1));
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Rows as sorted `(column, value)` lists.
    pub fn row_lists(&self) -> Vec<Vec<(usize, Int)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (i, j, v) in &self.entries {
            out[*i].push((*j, v.clone()));
        }
        out
    }

    /// Columns as sorted `(row, value)` lists.
    pub fn col_lists(&self) -> Vec<Vec<(usize, Int)>> {
        let mut out = vec![Vec::new(); self.cols];
        for (i, j, v) in &self.entries {
            out[*j].push((*i, v.clone()));
        }
        out
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let other_rows = other.row_lists();
        let mut acc: BTreeMap<(usize, usize), Int> = BTreeMap::new();
        for (i, k, a) in &self.entries {
            for (j, b) in &other_rows[*k] {
                let slot = acc.entry((*i, *j)).or_default();
                *slot = &*slot + &(a * b);
            }
        }
        SparseIntMatrix::from_triplets(
            self.rows,
            other.cols,
            acc.into_iter().map(|((i, j), v)| (i, j, v)),
        )
    }

    pub fn mul_vec(&self, x: &[Int]) -> Result<Vec<Int>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut y = vec![Int::ZERO; self.rows];
        for (i, j, v) in &self.entries {
            y[*i] = &y[*i] + &(v * &x[*j]);
        }
        Ok(y)
    }

    /// `true` when every entry vanishes modulo `p` (or exactly, for `p = 0`).
    pub fn is_zero_mod(&self, p: u64) -> bool {
        if p == 0 {
            return self.is_zero();
        }
        self.entries.iter().all(|(_, _, v)| v.mod_p(p) == 0)
    }
}

//! Linear algebra over `F_p`: sparse column reduction and small dense matrices.

use serde::{Deserialize, Serialize};

use super::sparse::SparseIntMatrix;
use crate::arith::mod_inv;
use crate::error::{Error, Result};

/// Sparse vector over `F_p`: sorted `(index, nonzero residue)` pairs.
pub type SparseVec = Vec<(usize, u64)>;

/// `x + c·y` over `F_p`.
pub fn axpy(x: &SparseVec, c: u64, y: &SparseVec, p: u64) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut a, mut b) = (0, 0);
    while a < x.len() || b < y.len() {
        let ia = x.get(a).map_or(usize::MAX, |e| e.0);
        let ib = y.get(b).map_or(usize::MAX, |e| e.0);
        if ia < ib {
            out.push(x[a]);
            a += 1;
        } else if ib < ia {
            let v = c * y[b].1 % p;
            if v != 0 {
                out.push((ib, v));
            }
            b += 1;
        } else {
            let v = (x[a].1 + c * y[b].1) % p;
            if v != 0 {
                out.push((ia, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Columns of an integer matrix reduced mod `p`.
pub fn columns_mod_p(m: &SparseIntMatrix, p: u64) -> Vec<SparseVec> {
    m.col_lists()
        .into_iter()
        .map(|col| {
            col.into_iter()
                .map(|(i, v)| (i, v.mod_p(p)))
                .filter(|&(_, v)| v != 0)
                .collect()
        })
        .collect()
}

/// Which end of a column acts as its pivot during reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationOrder {
    /// Columns left to right, pivot at the largest row index.
    LowestPivot,
    /// Columns right to left, pivot at the smallest row index.
    HighestPivot,
}

#[derive(Clone)]
/// Column reduction with distinct pivots. Returns the reduced nonzero
/// columns keyed by pivot row, plus the indices of columns that vanished.
pub struct ColumnReduction {
    pub p: u64,
    pub order: EliminationOrder,
    /// `pivots[row] = Some(k)` when reduced column `k` has pivot `row`.
    pivots: Vec<Option<usize>>,
    pub reduced: Vec<SparseVec>,
}

impl ColumnReduction {
    pub fn new(rows: usize, p: u64, order: EliminationOrder) -> Self {
        ColumnReduction {
            p,
            order,
            pivots: vec![None; rows],
            reduced: Vec::new(),
        }
    }

    fn pivot_of(&self, v: &SparseVec) -> Option<(usize, u64)> {
        match self.order {
            EliminationOrder::LowestPivot => v.last().copied(),
            EliminationOrder::HighestPivot => v.first().copied(),
        }
    }

    /// Reduces `v` against the stored columns; calls `on_step(k, c)` for
    /// every `v += c · reduced[k]` performed.
    pub fn reduce_with(
        &self,
        mut v: SparseVec,
        mut on_step: impl FnMut(usize, u64),
    ) -> SparseVec {
        let p = self.p;
        while let Some((row, val)) = self.pivot_of(&v) {
            let Some(k) = self.pivots[row] else { break };
            let (_, pv) = self.pivot_of(&self.reduced[k]).expect("stored columns are nonzero");
            let c = (p - val) * mod_inv(pv, p) % p;
            v = axpy(&v, c, &self.reduced[k], p);
            on_step(k, c);
        }
        v
    }

    /// Inserts a column; returns its slot if it survived reduction.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let v = self.reduce_with(v, |_, _| {});
        self.push_reduced(v)
    }

    /// Stores an already reduced column.
    pub fn push_reduced(&mut self, v: SparseVec) -> Option<usize> {
        let (row, _) = self.pivot_of(&v)?;
        debug_assert!(self.pivots[row].is_none());
        let k = self.reduced.len();
        self.pivots[row] = Some(k);
        self.reduced.push(v);
        Some(k)
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }
}

/// Rank of `m` over `F_p`.
pub fn rank_mod_p(m: &SparseIntMatrix, p: u64, order: EliminationOrder) -> usize {
    let cols = columns_mod_p(m, p);
    let mut red = ColumnReduction::new(m.rows(), p, order);
    match order {
        EliminationOrder::LowestPivot => cols.into_iter().for_each(|c| {
            red.insert(c);
        }),
        EliminationOrder::HighestPivot => cols.into_iter().rev().for_each(|c| {
            red.insert(c);
        }),
    }
    red.rank()
}

/// Kernel basis of `m` over `F_p` (as sparse vectors over the columns).
pub fn kernel_mod_p(m: &SparseIntMatrix, p: u64) -> Vec<SparseVec> {
    let cols = columns_mod_p(m, p);
    let mut red = ColumnReduction::new(m.rows(), p, EliminationOrder::LowestPivot);
    // transform[k] expresses reduced column k in the original columns
    let mut transform: Vec<SparseVec> = Vec::new();
    let mut kernel = Vec::new();
    for (j, col) in cols.into_iter().enumerate() {
        let mut combo: SparseVec = vec![(j, 1)];
        let mut steps = Vec::new();
        let reduced = red.reduce_with(col, |k, c| steps.push((k, c)));
        for (k, c) in steps {
            combo = axpy(&combo, c, &transform[k], p);
        }
        if reduced.is_empty() {
            kernel.push(combo);
        } else {
            red.push_reduced(reduced);
            transform.push(combo);
        }
    }
    kernel
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = FpMatrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = FpMatrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, crate::arith::mod_i64(v, p));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let mut out = FpMatrix::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<FpMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        let p = self.p;
        FpMatrix {
            p,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| (a + p - b) % p)
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(piv) = (rank..a.rows).find(|&r| a.get(r, col) != 0) else {
                continue;
            };
            for j in 0..a.cols {
                a.data.swap(rank * a.cols + j, piv * a.cols + j);
            }
            let inv = mod_inv(a.get(rank, col), p);
            for r in 0..a.rows {
                if r == rank {
                    continue;
                }
                let f = a.get(r, col) * inv % p;
                if f == 0 {
                    continue;
                }
                for j in col..a.cols {
                    let v = (a.get(r, j) + p - f * a.get(rank, j) % p) % p;
                    a.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let p = self.p;
        let mut a = self.clone();
        let mut inv = FpMatrix::identity(p, n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0)?;
            for j in 0..n {
                a.data.swap(col * n + j, piv * n + j);
                inv.data.swap(col * n + j, piv * n + j);
            }
            let s = mod_inv(a.get(col, col), p);
            for j in 0..n {
                a.set(col, j, a.get(col, j) * s);
                inv.set(col, j, inv.get(col, j) * s);
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r == col || f == 0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j) + p - f * a.get(col, j) % p);
                    inv.set(r, j, inv.get(r, j) + p - f * inv.get(col, j) % p);
                }
            }
        }
        Some(inv)
    }

    /// Smallest `m ≥ 1` with `self^m = I`, searched up to `bound`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        let mut acc = self.clone();
        for m in 1..=bound {
            if acc.is_identity() {
                return Some(m);
            }
            acc = acc.mul(self).ok()?;
        }
        None
    }
}

//! Smith normal form over the integers.
//!
//! Pivoting: the smallest nonzero absolute value in the active submatrix,
//! ties broken by the leftmost column and then the topmost row.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::int::Int;
use super::sparse::SparseIntMatrix;

/// `U·A·V = diag(D)` with unimodular `U` (rows×rows) and `V` (cols×cols).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfResult {
    pub diagonal: Vec<Int>,
    pub u: Vec<Vec<Int>>,
    pub v: Vec<Vec<Int>>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// `diag(D)` padded to `rows × cols`.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> SparseIntMatrix {
        SparseIntMatrix::from_triplets(
            rows,
            cols,
            self.diagonal
                .iter()
                .enumerate()
                .map(|(i, d)| (i, i, d.clone())),
        )
        .expect("rank fits the shape")
    }
}

struct Dense {
    a: Vec<Vec<Int>>,
    u: Option<Vec<Vec<Int>>>,
    v: Option<Vec<Vec<Int>>>,
}

fn identity(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Int::ONE } else { Int::ZERO })
                .collect()
        })
        .collect()
}

impl Dense {
    fn rows(&self) -> usize {
        self.a.len()
    }

    fn cols(&self) -> usize {
        self.a.first().map_or(0, Vec::len)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            if let Some(u) = &mut self.u {
                u.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in v {
                    row.swap(i, j);
                }
            }
        }
    }

    /// row_i += q · row_j
    fn add_row(&mut self, i: usize, j: usize, q: &Int) {
        fn op(m: &mut [Vec<Int>], i: usize, j: usize, q: &Int) {
            let (src, dst) = if i < j {
                let (a, b) = m.split_at_mut(j);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = m.split_at_mut(i);
                (&a[j], &mut b[0])
            };
            for (d, s) in dst.iter_mut().zip(src) {
                if !s.is_zero() {
                    *d = &*d + &(q * s);
                }
            }
        }
        op(&mut self.a, i, j, q);
        if let Some(u) = &mut self.u {
            op(u, i, j, q);
        }
    }

    /// col_i += q · col_j
    fn add_col(&mut self, i: usize, j: usize, q: &Int) {
        fn op(m: &mut [Vec<Int>], i: usize, j: usize, q: &Int) {
            for row in m {
                if !row[j].is_zero() {
                    row[i] = &row[i] + &(q * &row[j]);
                }
            }
        }
        op(&mut self.a, i, j, q);
        if let Some(v) = &mut self.v {
            op(v, i, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -&*x;
            }
        }
    }

    fn run(&mut self) -> Vec<Int> {
        let (m, n) = (self.rows(), self.cols());
        let mut diag = Vec::new();
        for t in 0..m.min(n) {
            let mut best: Option<(usize, usize)> = None;
            for j in t..n {
                for i in t..m {
                    let x = &self.a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => x.cmp_abs(&self.a[bi][bj]).is_lt(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            self.swap_rows(t, bi);
            self.swap_cols(t, bj);
            loop {
                let pivot = self.a[t][t].clone();
                for i in t + 1..m {
                    if !self.a[i][t].is_zero() {
                        let q = -self.a[i][t].div_round(&pivot);
                        self.add_row(i, t, &q);
                    }
                }
                for j in t + 1..n {
                    if !self.a[t][j].is_zero() {
                        let q = -self.a[t][j].div_round(&pivot);
                        self.add_col(j, t, &q);
                    }
                }
                let mut smaller: Option<(bool, usize)> = None;
                let mut smallest = pivot.clone();
                for i in t + 1..m {
                    let x = &self.a[i][t];
                    if !x.is_zero() && x.cmp_abs(&smallest).is_lt() {
                        smallest = x.clone();
                        smaller = Some((true, i));
                    }
                }
                for j in t + 1..n {
                    let x = &self.a[t][j];
                    if !x.is_zero() && x.cmp_abs(&smallest).is_lt() {
                        smallest = x.clone();
                        smaller = Some((false, j));
                    }
                }
                match smaller {
                    Some((true, i)) => {
                        self.swap_rows(t, i);
                        continue;
                    }
                    Some((false, j)) => {
                        self.swap_cols(t, j);
                        continue;
                    }
                    None => {}
                }
                let offender = (t + 1..n)
                    .flat_map(|j| (t + 1..m).map(move |i| (i, j)))
                    .find(|&(i, j)| !pivot.divides(&self.a[i][j]));
                match offender {
                    Some((i, _)) => self.add_row(t, i, &Int::ONE),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            diag.push(self.a[t][t].clone());
        }
        diag
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form(a: &SparseIntMatrix) -> SnfResult {
    let mut d = Dense {
        a: a.to_dense(),
        u: Some(identity(a.rows())),
        v: Some(identity(a.cols())),
    };
    if a.rows() == 0 || a.cols() == 0 {
        d.a = vec![Vec::new(); a.rows()];
    }
    let diagonal = d.run();
    SnfResult {
        diagonal,
        u: d.u.take().unwrap_or_default(),
        v: d.v.take().unwrap_or_default(),
    }
}

fn dense_invariant_factors(a: Vec<Vec<Int>>) -> Vec<Int> {
    let mut d = Dense { a, u: None, v: None };
    d.run()
}

/// Invariant factors only, for large sparse matrices: eliminates unit
/// pivots sparsely (each contributes a `1`), then finishes the remaining
/// unit-free block densely.
pub fn invariant_factors(a: &SparseIntMatrix) -> Vec<Int> {
    let mut elim = UnitEliminator::new(a);
    let units = elim.run();
    let rest = elim.remaining_dense();
    let mut out = vec![Int::ONE; units];
    out.extend(dense_invariant_factors(rest));
    out
}

struct UnitEliminator {
    rows: Vec<Vec<(usize, Int)>>,
    col_rows: Vec<HashSet<usize>>,
    unit_count: Vec<usize>,
    unit_cols: BTreeSet<usize>,
}

impl UnitEliminator {
    fn new(a: &SparseIntMatrix) -> Self {
        let rows = a.row_lists();
        let mut col_rows = vec![HashSet::new(); a.cols()];
        let mut unit_count = vec![0; a.cols()];
        let mut unit_cols = BTreeSet::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row {
                col_rows[*j].insert(i);
                if v.is_unit() {
                    unit_count[*j] += 1;
                    unit_cols.insert(*j);
                }
            }
        }
        UnitEliminator {
            rows,
            col_rows,
            unit_count,
            unit_cols,
        }
    }

    fn note_change(&mut self, row: usize, col: usize, old: &Int, new: &Int) {
        match (old.is_zero(), new.is_zero()) {
            (true, false) => {
                self.col_rows[col].insert(row);
            }
            (false, true) => {
                self.col_rows[col].remove(&row);
            }
            _ => {}
        }
        if old.is_unit() {
            self.unit_count[col] -= 1;
            if self.unit_count[col] == 0 {
                self.unit_cols.remove(&col);
            }
        }
        if new.is_unit() {
            if self.unit_count[col] == 0 {
                self.unit_cols.insert(col);
            }
            self.unit_count[col] += 1;
        }
    }

    /// row_i -= q · row_r
    fn subtract(&mut self, i: usize, r: usize, q: &Int) {
        let target = std::mem::take(&mut self.rows[i]);
        let source = &self.rows[r];
        let mut merged = Vec::with_capacity(target.len() + source.len());
        let mut changes: Vec<(usize, Int, Int)> = Vec::new();
        let (mut a, mut b) = (0, 0);
        while a < target.len() || b < source.len() {
            let ca = target.get(a).map_or(usize::MAX, |x| x.0);
            let cb = source.get(b).map_or(usize::MAX, |x| x.0);
            if ca < cb {
                merged.push(target[a].clone());
                a += 1;
            } else {
                let old = if ca == cb {
                    a += 1;
                    target[a - 1].1.clone()
                } else {
                    Int::ZERO
                };
                let new = &old - &(q * &source[b].1);
                if !new.is_zero() {
                    merged.push((cb, new.clone()));
                }
                changes.push((cb, old, new));
                b += 1;
            }
        }
        self.rows[i] = merged;
        for (c, old, new) in changes {
            self.note_change(i, c, &old, &new);
        }
    }

    fn run(&mut self) -> usize {
        let mut units = 0;
        while let Some(&c) = self.unit_cols.first() {
            let r = *self.col_rows[c]
                .iter()
                .filter(|&&i| self.value(i, c).is_unit())
                .min_by_key(|&&i| (self.rows[i].len(), i))
                .expect("unit column has a unit entry");
            let pivot = self.value(r, c);
            let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                // pivot is ±1, so the quotient is value · pivot
                let q = &self.value(i, c) * &pivot;
                self.subtract(i, r, &q);
            }
            let row = std::mem::take(&mut self.rows[r]);
            for (j, v) in &row {
                self.note_change(r, *j, v, &Int::ZERO);
            }
            units += 1;
        }
        units
    }

    fn value(&self, i: usize, c: usize) -> Int {
        let row = &self.rows[i];
        row.binary_search_by_key(&c, |x| x.0)
            .map(|k| row[k].1.clone())
            .unwrap_or_default()
    }

    fn remaining_dense(&self) -> Vec<Vec<Int>> {
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&i| !self.rows[i].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.col_rows.len())
            .filter(|&j| !self.col_rows[j].is_empty())
            .collect();
        let col_pos: std::collections::HashMap<usize, usize> =
            live_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        live_rows
            .iter()
            .map(|&i| {
                let mut dense = vec![Int::ZERO; live_cols.len()];
                for (j, v) in &self.rows[i] {
                    dense[col_pos[j]] = v.clone();
                }
                dense
            })
            .collect()
    }
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::ONE;
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::ONE;
    let mut prev = Int::ONE;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Int::ZERO,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_floor(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    &sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    fn check(a: &SparseIntMatrix) -> SnfResult {
        let r = smith_normal_form(a);
        let u = SparseIntMatrix::from_dense_int(a.rows(), a.rows(), &r.u);
        let v = SparseIntMatrix::from_dense_int(a.cols(), a.cols(), &r.v);
        let uav = u.mul(a).unwrap().mul(&v).unwrap();
        assert_eq!(uav, r.diagonal_matrix(a.rows(), a.cols()));
        for w in r.diagonal.windows(2) {
            assert!(w[0].divides(&w[1]));
        }
        assert!(determinant(&r.u).is_unit());
        assert!(determinant(&r.v).is_unit());
        r
    }

    #[test]
    fn examples() {
        let r = check(&SparseIntMatrix::from_dense(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(r.diagonal, ints(&[1, 6]));
        let r = check(&SparseIntMatrix::zeros(3, 2));
        assert!(r.diagonal.is_empty());
        let r = check(&SparseIntMatrix::from_dense(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(r.diagonal, ints(&[2, 4]));
    }

    #[test]
    fn degenerate_shapes() {
        assert!(check(&SparseIntMatrix::zeros(0, 3)).diagonal.is_empty());
        assert!(check(&SparseIntMatrix::zeros(2, 0)).diagonal.is_empty());
    }

    #[test]
    fn sparse_path_agrees_with_dense() {
        let a = SparseIntMatrix::from_dense(&[
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, -4, -16],
        ]);
        assert_eq!(invariant_factors(&a), check(&a).diagonal);
        assert_eq!(invariant_factors(&a), ints(&[2, 6, 12]));
        let b = SparseIntMatrix::from_dense(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(invariant_factors(&b), ints(&[1, 1, 2]));
        assert_eq!(check(&b).diagonal, ints(&[1, 1, 2]));
    }

    #[test]
    fn determinants() {
        let m = vec![ints(&[2, 4]), ints(&[6, 8])];
        assert_eq!(determinant(&m), Int::from(-8));
        let m = vec![ints(&[0, 1, 0]), ints(&[1, 0, 0]), ints(&[0, 0, 1])];
        assert_eq!(determinant(&m), Int::from(-1));
    }
}

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl BigIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: alloc::vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from equal-length rows of small integers.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch);
            }
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Ok(Self { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc += a * &rhs[(k, j)];
                }
            }
            acc
        }))
    }

    /// The matrix with row `row` and column `col` deleted.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != row) {
            for j in (0..self.cols).filter(|&j| j != col) {
                entries.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, entries }
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<BigInt>> {
        let cols = self.cols;
        if cols == 0 {
            return (0..self.rows).map(|_| Vec::new()).collect();
        }
        let mut it = self.entries.into_iter();
        (0..self.rows).map(|_| it.by_ref().take(cols).collect()).collect()
    }
}

impl Index<(usize, usize)> for BigIntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for BigIntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

/// Exact determinant by Bareiss elimination. The empty matrix has determinant 1.
///
/// A row whose entry in the pivot column is zero would only be rescaled by
/// `pivot / prev`; those factors telescope, so such rows are left alone and
/// brought up to date when they are next touched. On banded matrices such as
/// BFS-ordered Laplacians most rows are skipped at every step.
pub fn determinant(m: &BigIntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut rows: Vec<LazyRow> = m.clone().into_rows().into_iter().map(|values| LazyRow { values, since: 0 }).collect();
    // prevs[k] is the divisor used at step k: 1, then each pivot in turn
    let mut prevs = alloc::vec![BigInt::one()];
    let mut negate = false;
    for k in 0..n - 1 {
        if rows[k].values[k].is_zero() {
            match (k + 1..n).find(|&i| !rows[i].values[k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot_row = &mut head[k];
        pivot_row.bring_up_to(k, &prevs);
        eliminate_rows(&pivot_row.values, tail, k, &prevs);
        prevs.push(pivot_row.values[k].clone());
    }
    let last = &mut rows[n - 1];
    last.bring_up_to(n - 1, &prevs);
    let det = last.values[n - 1].clone();
    Ok(if negate { -det } else { det })
}

struct LazyRow {
    values: Vec<BigInt>,
    /// the stored values are current as of the start of this step
    since: usize,
}

impl LazyRow {
    /// Applies the skipped rescalings `prevs[k] / prevs[since]` to the live
    /// columns `k..`.
    fn bring_up_to(&mut self, k: usize, prevs: &[BigInt]) {
        if self.since == k {
            return;
        }
        let (num, den) = (&prevs[k], &prevs[self.since]);
        for v in &mut self.values[k..] {
            if !v.is_zero() {
                *v = &*v * num / den;
            }
        }
        self.since = k;
    }
}

fn bareiss_row(pivot_row: &[BigInt], row: &mut LazyRow, k: usize, prevs: &[BigInt]) {
    if row.values[k].is_zero() {
        return;
    }
    row.bring_up_to(k, prevs);
    let prev = &prevs[k];
    let pivot = &pivot_row[k];
    let factor = core::mem::take(&mut row.values[k]);
    for (v, p) in row.values[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
        if v.is_zero() && p.is_zero() {
            continue;
        }
        let mut x = &*v * pivot;
        if !p.is_zero() {
            x -= &factor * p;
        }
        *v = if prev.is_one() { x } else { x / prev };
    }
    row.since = k + 1;
}

#[cfg(feature = "parallel")]
fn eliminate_rows(pivot_row: &[BigInt], rows: &mut [LazyRow], k: usize, prevs: &[BigInt]) {
    use rayon::prelude::*;
    if rows.len() * rows.len() < 4096 {
        rows.iter_mut().for_each(|row| bareiss_row(pivot_row, row, k, prevs));
    } else {
        rows.par_iter_mut().for_each(|row| bareiss_row(pivot_row, row, k, prevs));
    }
}

#[cfg(not(feature = "parallel"))]
fn eliminate_rows(pivot_row: &[BigInt], rows: &mut [LazyRow], k: usize, prevs: &[BigInt]) {
    rows.iter_mut().for_each(|row| bareiss_row(pivot_row, row, k, prevs));
}

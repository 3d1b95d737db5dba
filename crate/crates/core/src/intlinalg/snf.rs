use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// Invariant factors of an integer matrix, optionally with unimodular
/// witnesses `left` and `right` such that `left * m * right` is diagonal
/// with diagonal `factors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub rows: usize,
    pub cols: usize,
    /// `d_1 | d_2 | ... | d_k`, `k = min(rows, cols)`, zeros last.
    pub factors: Vec<BigUint>,
    pub left: Option<IntMatrix>,
    pub right: Option<IntMatrix>,
}

impl SnfResult {
    /// Dimension of the rational kernel: zero factors plus surplus columns.
    pub fn nullity(&self) -> usize {
        let zeros = self.factors.iter().filter(|d| d.is_zero()).count();
        zeros + self.cols - self.factors.len()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().filter(|d| !d.is_zero()).count()
    }
}

struct Work {
    a: IntMatrix,
    left: Option<IntMatrix>,
    right: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(l) = &mut self.left {
            l.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(r) = &mut self.right {
            r.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(l) = &mut self.left {
            l.add_row_multiple(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(r) = &mut self.right {
            r.add_col_multiple(dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(l) = &mut self.left {
            l.negate_row(i);
        }
    }

    /// Nonzero entry of least absolute value in the trailing submatrix at
    /// `t`, ties broken by lowest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), &BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a.get(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(_, b)| v.magnitude() < b.magnitude()) {
                    best = Some(((i, j), v));
                }
            }
        }
        best.map(|(ij, _)| ij)
    }

    /// Clears row and column `t` by division with remainder. Returns true
    /// when a nonzero remainder is left behind.
    fn eliminate(&mut self, t: usize) -> bool {
        let mut dirty = false;
        for i in t + 1..self.a.rows() {
            if self.a.get(i, t).is_zero() {
                continue;
            }
            let q = self.a.get(i, t) / self.a.get(t, t);
            self.add_row(i, t, &-q);
            dirty |= !self.a.get(i, t).is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a.get(t, j).is_zero() {
                continue;
            }
            let q = self.a.get(t, j) / self.a.get(t, t);
            self.add_col(j, t, &-q);
            dirty |= !self.a.get(t, j).is_zero();
        }
        dirty
    }

    /// A row below `t` holding an entry the pivot does not divide.
    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.a.get(t, t);
        (t + 1..self.a.rows())
            .find(|&i| (t + 1..self.a.cols()).any(|j| !self.a.get(i, j).is_multiple_of(p)))
    }
}

/// Smith normal form by unimodular row and column operations.
pub fn smith_normal_form(m: &IntMatrix, want_transforms: bool) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let k = rows.min(cols);
    let mut w = Work {
        a: m.clone(),
        left: want_transforms.then(|| IntMatrix::identity(rows)),
        right: want_transforms.then(|| IntMatrix::identity(cols)),
    };

    let mut t = 0;
    while t < k {
        let Some((pi, pj)) = w.pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        if w.eliminate(t) {
            // A remainder smaller than the pivot appeared; re-pivot.
            continue;
        }
        if let Some(i) = w.non_divisible_row(t) {
            w.add_row(t, i, &BigInt::one());
            continue;
        }
        if w.a.get(t, t).sign() == Sign::Minus {
            w.negate_row(t);
        }
        t += 1;
    }

    let factors = (0..k)
        .map(|i| {
            if i < t {
                w.a.get(i, i).magnitude().clone()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    SnfResult {
        rows,
        cols,
        factors,
        left: w.left,
        right: w.right,
    }
}

/// The link determinant of a coloring matrix: the absolute value of any
/// first minor, read off the invariant factors. Zero when the rational
/// kernel has dimension two or more. An empty matrix has determinant 1.
pub fn link_determinant(m: &IntMatrix) -> Result<BigUint, LinalgError> {
    if let Some(row) = m.first_nonzero_row_sum() {
        return Err(LinalgError::RowSumNonZero { row });
    }
    if m.cols() == 0 {
        return Ok(BigUint::one());
    }
    let snf = smith_normal_form(m, false);
    if snf.nullity() >= 2 {
        return Ok(BigUint::zero());
    }
    Ok(snf.factors.iter().filter(|d| !d.is_zero()).product())
}

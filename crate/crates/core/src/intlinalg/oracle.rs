use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// Determinant of `m` with `del_row` and `del_col` removed, by cofactor
/// expansion. Exponential in the size; meant for cross-checking
/// [`super::link_determinant`] on small matrices. A 1x1 matrix has the
/// empty minor, whose determinant is 1.
pub fn first_minor_oracle(
    m: &IntMatrix,
    del_row: usize,
    del_col: usize,
) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if del_row >= m.rows() || del_col >= m.cols() {
        return Err(LinalgError::IndexOutOfRange {
            row: del_row,
            col: del_col,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let minor = m.minor(del_row, del_col);
    let n = minor.rows();
    let mut used = vec![false; n];
    Ok(expand(&minor, 0, &mut used))
}

fn expand(m: &IntMatrix, row: usize, used: &mut [bool]) -> BigInt {
    if row == m.rows() {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    // Sign of a column is its position among the still unused columns.
    let mut position = 0;
    for col in 0..m.cols() {
        if used[col] {
            continue;
        }
        let entry = m.get(row, col);
        if !entry.is_zero() {
            used[col] = true;
            let sub = entry * expand(m, row + 1, used);
            used[col] = false;
            if position % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        position += 1;
    }
    total
}

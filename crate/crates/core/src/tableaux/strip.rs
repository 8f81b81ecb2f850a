//! The bijection between Motzkin paths and tableaux on strip shapes
//! `(n-k, n-k, n-2k) / (n-2k, n-2k)`, and cyclic descents on those shapes.

use super::{rectify, SkewShape, SkewTableau};
use crate::error::{Error, Result};
use crate::paths::{MotzkinPath, Step};
use crate::sets::CyclicDescentSet;

/// Puts `i` in row 1, 2 or 3 according as step `i` is `U`, `D` or `L`.
/// The shape is `strip(n, k)` with `k` the number of up steps.
pub fn gamma(path: &MotzkinPath) -> SkewTableau {
    let n = path.len();
    let k = path.count(Step::U);
    let mut rows = vec![Vec::new(), Vec::new(), Vec::new()];
    for (i, step) in path.steps().iter().enumerate() {
        let r = match step {
            Step::U => 0,
            Step::D => 1,
            Step::L => 2,
        };
        rows[r].push(i + 1);
    }
    let shape = SkewShape::strip(n, k).expect("2k <= n for a Motzkin path");
    rows.truncate(shape.num_rows());
    SkewTableau::from_rows_unchecked(shape, rows)
}

/// Reads step `i` off the row holding `i`.
pub fn gamma_inverse(t: &SkewTableau) -> Result<MotzkinPath> {
    if t.shape().as_strip().is_none() {
        return Err(Error::WrongShape(t.shape().to_string()));
    }
    let row_of = t.row_index();
    let steps = row_of[1..]
        .iter()
        .map(|r| match r {
            1 => Step::U,
            2 => Step::D,
            _ => Step::L,
        })
        .collect();
    Ok(MotzkinPath::from_steps_unchecked(steps))
}

/// `rectify(gamma(path))`: a straight tableau with at most three rows.
pub fn gamma_tilde(path: &MotzkinPath) -> SkewTableau {
    rectify(&gamma(path))
}

/// Cyclic descent set on `strip(n, k)`, `0 < k <= n/2`.
///
/// `n` is added when 1 is in row 3 and `n` in row 2, or when 1 is in row 1,
/// `n` in row 2, and `T[2][i-1] > T[1][i]` for `2 <= i <= k`, counting the
/// `k` cells of rows 1 and 2 from their left ends.
pub fn cyclic_descent_set_3row(t: &SkewTableau) -> Result<CyclicDescentSet> {
    let (n, k) = match t.shape().as_strip() {
        Some((n, k)) if k > 0 => (n, k),
        _ => return Err(Error::WrongShape(t.shape().to_string())),
    };
    let row_of = t.row_index();
    let (top, middle) = (&t.rows()[0], &t.rows()[1]);
    let wraps = row_of[n] == 2
        && match row_of[1] {
            3 => true,
            1 => (2..=k).all(|i| middle[i - 2] > top[i - 1]),
            _ => false,
        };
    Ok(CyclicDescentSet::extend(&t.descent_set(), wraps))
}

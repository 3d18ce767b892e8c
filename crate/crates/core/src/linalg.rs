//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Brings `rows` to reduced row echelon form, eliminating only in the first
/// `ncols` columns (further columns ride along, e.g. an augmented right-hand
/// side). Zero rows are dropped. Returns the pivot column of each remaining row.
pub(crate) fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|x| !x.is_zero()));
    pivots
}

/// Solution of `M x = v` as a particular solution (free variables zero) and a
/// nullspace basis, one vector per free column with a 1 in that column.
pub(crate) struct AffineSolution {
    pub particular: Option<Vec<Rational>>,
    pub nullspace: Vec<Vec<Rational>>,
}

/// `matrix` is row-major with `ncols` columns; `rhs` has one entry per row.
pub(crate) fn solve(
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    ncols: usize,
) -> AffineSolution {
    let mut rows: Vec<Vec<Rational>> = matrix
        .into_iter()
        .zip(rhs)
        .map(|(mut row, v)| {
            row.push(v);
            row
        })
        .collect();
    let pivots = rref(&mut rows, ncols);
    // a surviving row with no pivot reads 0 = nonzero
    let consistent = rows.len() == pivots.len();
    let particular = consistent.then(|| {
        let mut x = vec![Rational::zero(); ncols];
        for (row, &p) in rows.iter().zip(&pivots) {
            x[p] = row[ncols].clone();
        }
        x
    });
    let nullspace = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect();
    AffineSolution {
        particular,
        nullspace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn unique_solution() {
        // x + y = 3, x - y = 1
        let s = solve(vec![row(&[1, 1]), row(&[1, -1])], row(&[3, 1]), 2);
        assert_eq!(s.particular, Some(row(&[2, 1])));
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        let s = solve(vec![row(&[1, 1]), row(&[2, 2])], row(&[1, 3]), 2);
        assert!(s.particular.is_none());
        assert_eq!(s.nullspace, vec![row(&[-1, 1])]);
    }

    #[test]
    fn underdetermined_system() {
        let s = solve(vec![row(&[0, 1, 2])], row(&[4]), 3);
        assert_eq!(s.particular, Some(row(&[0, 4, 0])));
        assert_eq!(s.nullspace, vec![row(&[1, 0, 0]), row(&[0, -2, 1])]);
    }
}

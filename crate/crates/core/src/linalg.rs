//! Small exact dense linear algebra over the rationals: just enough for the
//! triangular joint-eigenfunction solves (matrices of dimension a few dozen).

use crate::Rat;
use num_traits::Zero;

/// Basis of the right nullspace of the given matrix (rows of equal length).
/// Plain fraction-free-enough Gaussian elimination; sizes here are tiny.
pub fn nullspace(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let ncols = rows.first().map(Vec::len).unwrap_or(0);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        // Find a pivot in column c at or below row r.
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let s = &rows[r][j] * &f;
                    rows[i][j] -= s;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![Rat::zero(); ncols];
        v[fc] = Rat::from_integer(1.into());
        for (row_idx, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -rows[row_idx][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Matrix-vector product.
pub fn matvec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

//! Exact linear algebra over the rationals: determinants and linear solves
//! by Gaussian elimination with pivoting on the first non-zero entry.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Dense row-major matrix of exact rationals.
pub type Matrix = Vec<Vec<BigRational>>;

#[allow(clippy::needless_range_loop)]
pub fn determinant(mut m: Matrix) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Solve `a · x = b` for square, non-singular `a`.
#[allow(clippy::needless_range_loop)]
pub fn solve(mut a: Matrix, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidArgument("solve needs a square system".into()));
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(pivot, col);
        b.swap(pivot, col);
        let p = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Ok(b.into_iter()
        .zip(a.iter().enumerate())
        .map(|(v, (i, row))| v / &row[i])
        .collect())
}

//! Catalan numbers, the brute-force count of paths below a path, and the
//! Narayana determinant that counts them in closed form.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::limits::Limits;
use crate::linalg;
use crate::path::{LatticePath, Step};
use crate::{Error, Result};

/// `C_n = binom(2n, n) / (n + 1)`, exact for any `n`.
pub fn catalan_big(n: u32) -> BigUint {
    // C_{k+1} = C_k · 2(2k + 1) / (k + 2); each partial result is an integer.
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * BigUint::from(2 * (2 * k as u64 + 1)) / BigUint::from(k as u64 + 2);
    }
    c
}

/// `C_n` as a machine integer. Panics when `C_n` does not fit, i.e. `n > 35`.
pub fn catalan(n: u32) -> u64 {
    catalan_big(n)
        .to_u64()
        .unwrap_or_else(|| panic!("C_{n} overflows u64"))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Every path with the endpoints of `omega` lying weakly below it (touching
/// allowed), generated letter by letter: a prefix is extended by N only while
/// it stays at or under the matching prefix of `omega`.
pub fn paths_below(omega: &LatticePath, limits: &Limits) -> Result<Vec<LatticePath>> {
    let len = omega.len();
    if len > limits.max_path_len {
        return Err(Error::CapExceeded {
            what: "path length",
            requested: len,
            cap: limits.max_path_len,
        });
    }
    fn extend(
        ceiling: &[usize],
        ups_left: usize,
        rights_left: usize,
        cur: &mut Vec<Step>,
        height: usize,
        out: &mut Vec<LatticePath>,
    ) {
        if ups_left == 0 && rights_left == 0 {
            out.push(LatticePath::new(cur.clone()));
            return;
        }
        let next = cur.len() + 1;
        if ups_left > 0 && height < ceiling[next] {
            cur.push(Step::N);
            extend(ceiling, ups_left - 1, rights_left, cur, height + 1, out);
            cur.pop();
        }
        if rights_left > 0 {
            cur.push(Step::E);
            extend(ceiling, ups_left, rights_left - 1, cur, height, out);
            cur.pop();
        }
    }
    let ceiling = omega.prefix_heights();
    let mut out = Vec::new();
    extend(
        &ceiling,
        omega.count_n(),
        omega.count_e(),
        &mut Vec::with_capacity(len),
        0,
        &mut out,
    );
    Ok(out)
}

/// Number of paths weakly below `omega` with the same endpoints; the
/// brute-force reference count.
pub fn count_paths_below(omega: &LatticePath, limits: &Limits) -> Result<u64> {
    Ok(paths_below(omega, limits)?.len() as u64)
}

/// Row lengths of the region between `omega` and the lowest path with the same
/// endpoints (all E steps, then all N steps), listed from the top row down,
/// i.e. starting at the endpoint side.
pub fn staircase_rows(omega: &LatticePath) -> Vec<usize> {
    let width = omega.count_e();
    let mut x = 0;
    let mut rows = Vec::with_capacity(omega.count_n());
    for s in omega.steps() {
        match s {
            Step::E => x += 1,
            Step::N => rows.push(width - x),
        }
    }
    rows.reverse();
    rows
}

/// `det(binom(λ_i + 1, j − i + 1))` over the staircase rows of `omega`.
pub fn narayana_count(omega: &LatticePath) -> BigInt {
    let lambda = staircase_rows(omega);
    let k = lambda.len();
    let m: linalg::Matrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    BigRational::from_integer(binomial(
                        lambda[i] as i64 + 1,
                        j as i64 - i as i64 + 1,
                    ))
                })
                .collect()
        })
        .collect();
    let det = linalg::determinant(m);
    debug_assert!(det.is_integer());
    det.to_integer()
}

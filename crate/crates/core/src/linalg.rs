//! Fraction-free elimination over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by Bareiss elimination.
///
/// Every intermediate value is itself a minor of the input, so all
/// divisions are exact.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank of an integer matrix (any shape) by fraction-free row reduction.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..height).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..height {
            if m[r][col].is_zero() {
                continue;
            }
            let (pivot, lead) = (m[rank][col].clone(), m[r][col].clone());
            let top = m[rank].clone();
            for (x, t) in m[r][col..].iter_mut().zip(&top[col..]) {
                *x = &*x * &pivot - t * &lead;
            }
        }
        rank += 1;
        if rank == height {
            break;
        }
    }
    rank
}

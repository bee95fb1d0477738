//! Small exact integer matrix helpers.
//!
//! Matrices are row-major `Vec<Vec<_>>`. Everything here is exact: `i64`
//! routines use `i128` intermediates with checked narrowing, `BigInt`
//! routines use fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Determinant by Bareiss elimination.
pub fn det_big(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Leading principal minors `det(m[..k][..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            det_big(&sub)
        })
        .collect()
}

fn minor_big(m: &[Vec<BigInt>], skip_row: usize, skip_col: usize) -> Vec<Vec<BigInt>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Diagonal of the adjugate: `adj[i][i] = det` of `m` with row and column `i` removed.
pub fn adjugate_diagonal_big(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    (0..m.len()).map(|i| det_big(&minor_big(m, i, i))).collect()
}

/// Floor of the square root of a non-negative big integer.
pub fn isqrt_big(x: &BigInt) -> BigInt {
    assert!(!x.is_negative(), "isqrt of a negative number");
    x.sqrt()
}

pub fn det_i64(m: &[Vec<i64>]) -> i128 {
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let d = det_big(&big);
    i128::try_from(d).expect("determinant overflows i128")
}

/// Adjugate of a small integer matrix, so that `m * adj = det * I`.
pub fn adjugate_i64(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let sub: Vec<Vec<i64>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != j)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let cof = det_i64(&sub);
            adj[i][j] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    adj
}

#[cfg(test)]
pub fn mat_mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec_i64(a: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn identity_i64(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Inverse of a unimodular matrix. Returns `None` if `|det| != 1`.
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let d = det_i64(m);
    if d.abs() != 1 {
        return None;
    }
    let adj = adjugate_i64(m);
    adj.iter()
        .map(|row| row.iter().map(|&v| i64::try_from(v * d).ok()).collect())
        .collect()
}

/// Rank over the rationals, by fraction-free elimination on a copy.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].clone();
            let g = a[rank][c].clone();
            for k in c..cols {
                let v = &a[r][k] * &g - &a[rank][k] * &f;
                a[r][k] = v;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Gcd of all maximal (n x n) minors of the n x m matrix whose columns are
/// `vectors`. It is 1 exactly when the vectors generate the whole of `Z^n`.
pub fn maximal_minor_gcd(vectors: &[Vec<i64>], n: usize) -> i128 {
    let mut g: i128 = 0;
    let mut idx: Vec<usize> = (0..n).collect();
    if vectors.len() < n {
        return 0;
    }
    loop {
        let cols: Vec<Vec<i64>> = idx.iter().map(|&i| vectors[i].clone()).collect();
        g = g.gcd(&det_i64(&cols));
        if g == 1 {
            return 1;
        }
        let mut i = n;
        while i > 0 && idx[i - 1] == i - 1 + vectors.len() - n {
            i -= 1;
        }
        if i == 0 {
            return g;
        }
        idx[i - 1] += 1;
        for j in i..n {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

//! Integer matrix normal forms over arbitrary-precision integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect()
        })
        .collect()
}

/// Row-style Hermite normal form of the lattice spanned by the rows: zero rows
/// dropped, pivots positive and strictly to the right row by row, entries
/// above a pivot reduced into `[0, pivot)`.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> IntMatrix {
    let mut m: IntMatrix = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        // Euclid on column c below row r.
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by(|&&i, &&j| m[i][c].abs().cmp(&m[j][c].abs())).unwrap();
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                for j in 0..ncols {
                    let t = &q * &m[r][j];
                    m[i][j] -= t;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for v in m[r].iter_mut() {
                *v = -&*v;
            }
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                for j in 0..ncols {
                    let t = &q * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// Smith normal form: returns `(p, d, q)` with `p·a·q = d`, `p` and `q`
/// unimodular and `d` diagonal with `d_1 | d_2 | ...`, all nonnegative.
pub fn smith(a: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix, IntMatrix) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut d: IntMatrix = a.to_vec();
    let mut p = identity(rows);
    let mut q = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero() && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap(t, bi);
        p.swap(t, bi);
        for row in d.iter_mut() {
            row.swap(t, bj);
        }
        for row in q.iter_mut() {
            row.swap(t, bj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            if d[i][t].is_zero() {
                continue;
            }
            let f = d[i][t].div_floor(&d[t][t]);
            row_sub(&mut d, i, t, &f);
            row_sub(&mut p, i, t, &f);
            if !d[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if d[t][j].is_zero() {
                continue;
            }
            let f = d[t][j].div_floor(&d[t][t]);
            col_sub(&mut d, j, t, &f);
            col_sub(&mut q, j, t, &f);
            if !d[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold a offending row into row t and redo.
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
        if let Some(i) = bad {
            row_sub(&mut d, t, i, &-BigInt::one());
            row_sub(&mut p, t, i, &-BigInt::one());
            continue;
        }
        if d[t][t].is_negative() {
            for v in d[t].iter_mut() {
                *v = -&*v;
            }
            for v in p[t].iter_mut() {
                *v = -&*v;
            }
        }
        t += 1;
    }
    (p, d, q)
}

// row_i -= f * row_k
fn row_sub(m: &mut IntMatrix, i: usize, k: usize, f: &BigInt) {
    for j in 0..m[i].len() {
        let t = f * &m[k][j];
        m[i][j] -= t;
    }
}

// col_j -= f * col_k
fn col_sub(m: &mut IntMatrix, j: usize, k: usize, f: &BigInt) {
    for row in m.iter_mut() {
        let t = f * &row[k];
        row[j] -= t;
    }
}

/// Inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    let rows: Vec<Vec<crate::linalg::Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<_> = row.iter().map(|x| crate::linalg::rat(x.clone())).collect();
            r.extend((0..n).map(|j| crate::linalg::rat(i64::from(i == j))));
            r
        })
        .collect();
    let (red, _) = crate::linalg::rref(&rows);
    assert_eq!(red.len(), n, "matrix is singular");
    red.iter()
        .map(|r| {
            r[n..]
                .iter()
                .map(|x| {
                    assert!(x.is_integer(), "matrix is not unimodular");
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
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

/// All `k`-element subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Nonzero maximal minors of the matrix whose rows are `vectors`
/// (each of length `n`), taken over all `n`-subsets of rows.
pub fn maximal_minors(vectors: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    subsets(vectors.len(), n)
        .into_iter()
        .map(|s| determinant(&s.iter().map(|&i| vectors[i].clone()).collect::<Vec<_>>()))
        .filter(|d| !d.is_zero())
        .collect()
}

pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
    vec![vec![BigInt::zero(); cols]; rows]
}

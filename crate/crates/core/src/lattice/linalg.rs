//! Exact linear algebra over the intersection matrix.
//!
//! [`solve_star`] is the production solver: Gaussian elimination in
//! leaves-first order, which on a tree produces no fill-in. The dense routines
//! exist for cross-checks.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{StarGraph, CENTER};
use crate::rational::{qi, Q};
use crate::{Error, Result};

/// Solves `I x = rhs` for the intersection matrix `I` of `g`.
pub fn solve_star(g: &StarGraph, rhs: Vec<Q>) -> Result<Vec<Q>> {
    let n = g.vertex_count();
    if rhs.len() != n {
        return Err(Error::IndexMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    let mut diag: Vec<Q> = g.eulers().iter().map(|&b| qi(b)).collect();
    let mut r = rhs;
    let singular = || Error::Internal("singular intersection matrix".into());

    // Eliminate each leg from its end toward the center. Off-diagonal
    // entries are all 1.
    for leg in g.legs() {
        for j in (0..leg.len()).rev() {
            let v = leg[j];
            let parent = if j == 0 { CENTER } else { leg[j - 1] };
            if diag[v].is_zero() {
                return Err(singular());
            }
            let inv = diag[v].recip();
            diag[parent] -= &inv;
            let t = &r[v] * &inv;
            r[parent] -= t;
        }
    }
    if diag[CENTER].is_zero() {
        return Err(singular());
    }
    let mut x = vec![Q::zero(); n];
    x[CENTER] = &r[CENTER] / &diag[CENTER];
    for leg in g.legs() {
        for j in 0..leg.len() {
            let v = leg[j];
            let parent = if j == 0 { CENTER } else { leg[j - 1] };
            x[v] = (&r[v] - &x[parent]) / &diag[v];
        }
    }
    Ok(x)
}

pub fn intersection_matrix(g: &StarGraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    (0..n)
        .map(|u| (0..n).map(|v| g.intersection(u, v)).collect())
        .collect()
}

fn to_q(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter()
        .map(|row| row.iter().map(|&x| qi(x)).collect())
        .collect()
}

/// Dense Gaussian elimination; `None` when the matrix is singular.
pub fn solve_dense(m: &[Vec<i64>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a = to_q(m);
    let mut b = rhs.to_vec();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] / &a[col][col];
            for k in col..n {
                let t = &f * &a[col][k];
                a[row][k] -= t;
            }
            let t = &f * &b[col];
            b[row] -= t;
        }
    }
    let mut x = vec![Q::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..n {
            acc -= &a[row][k] * &x[k];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

pub fn determinant(m: &[Vec<i64>]) -> Q {
    let n = m.len();
    let mut a = to_q(m);
    let mut det = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        det *= &a[col][col];
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] / &a[col][col];
            for k in col..n {
                let t = &f * &a[col][k];
                a[row][k] -= t;
            }
        }
    }
    det
}

/// Sylvester's criterion: every leading principal minor is positive.
pub fn is_positive_definite(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let mut a = to_q(m);
    for col in 0..n {
        // Without row swaps the k-th pivot is the ratio of consecutive
        // leading minors.
        if !a[col][col].is_positive() {
            return false;
        }
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = &a[row][col] / &a[col][col];
            for k in col..n {
                let t = &f * &a[col][k];
                a[row][k] -= t;
            }
        }
    }
    true
}

/// Invariant factors `d_1 | d_2 | ...` of an integer matrix (zeros dropped).
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag = Vec::new();

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for k in t..cols {
                    let s = &q * &a[t][k];
                    a[i][k] -= s;
                }
                if !a[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !a[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                        (bi, bj) = (t, j);
                    }
                }
                a.swap(t, bi);
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // divisibility condition on the trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for k in t..cols {
                        let s = a[i][k].clone();
                        a[t][k] += s;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

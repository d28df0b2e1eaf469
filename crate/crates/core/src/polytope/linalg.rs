//! Exact rational linear algebra on small dense matrices.

use num_rational::Rational64;
use num_traits::{One, Zero};

pub type Q = Rational64;

/// Row-reduces in place and returns the rank.
fn eliminate(m: &mut [Vec<Q>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c];
        for v in m[rank].iter_mut() {
            *v /= pivot;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c];
                for (v, &p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| Q::from_integer(v)).collect())
        .collect();
    eliminate(&mut m)
}

/// Dimension of the affine hull of `points` (`-1` for none).
pub fn affine_dimension(points: &[Vec<i64>]) -> isize {
    let Some(base) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) as isize
}

/// Unique solution of the square system `a·x = b`, if `a` is invertible.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r: Vec<Q> = row.iter().map(|&v| Q::from_integer(v)).collect();
            r.push(Q::from_integer(rhs));
            r
        })
        .collect();
    // the augmented column can only raise the rank when the system is singular
    let r = eliminate(&mut m);
    if r != n || (0..n).any(|i| m[i][i] != Q::one()) {
        return None;
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

//! Exact linear algebra over Q by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::superscalar::Rational;

/// Row-echelon form of an integer matrix and its pivot columns.
///
/// Each pass replaces `m[i][j]` by `(p m[i][j] - m[i][c] m[r][j]) / prev`,
/// where `p` is the current pivot and `prev` the previous one; the division
/// is exact because every entry is a minor of the input.
fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Clears denominators row by row.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect()
}

/// Rank of a rational matrix with `ncols` columns.
pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    bareiss(integer_rows(rows), ncols).1.len()
}

/// Exact nullspace basis. The vector for free column `f` has a 1 at `f` and
/// 0 at every other free column.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (m, pivots) = bareiss(integer_rows(rows), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in p + 1..ncols {
                    if !m[r][j].is_zero() && !x[j].is_zero() {
                        acc += Rational::from_integer(m[r][j].clone()) * &x[j];
                    }
                }
                x[p] = -acc / Rational::from_integer(m[r][p].clone());
            }
            x
        })
        .collect()
}

/// `M·v`.
pub fn apply(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let n = v.len();
    let mut rows = basis.to_vec();
    let r0 = rank(&rows, n);
    rows.push(v.to_vec());
    rank(&rows, n) == r0
}

/// A maximal independent subset of `vectors`, keeping the earliest ones.
pub fn independent_subset(vectors: &[Vec<Rational>]) -> Vec<usize> {
    let mut kept: Vec<Vec<Rational>> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if !in_span(&kept, v) {
            kept.push(v.clone());
            idx.push(i);
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superscalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(nullspace(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).is_empty());
    }

    #[test]
    fn rank_one_two_by_two() {
        assert_eq!(nullspace(&m(&[&[1, 1], &[2, 2]]), 2), vec![vec![int(-1), int(1)]]);
        assert_eq!(rank(&m(&[&[1, 1], &[2, 2]]), 2), 1);
    }

    #[test]
    fn rational_entries_and_skipped_columns() {
        let rows = vec![vec![int(0), rat(1, 2), rat(1, 3), int(0)], vec![int(0), int(1), int(0), int(5)]];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(apply(&rows, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn span_membership() {
        let b = m(&[&[1, 2, 3]]);
        assert!(in_span(&b, &[int(2), int(4), int(6)]));
        assert!(!in_span(&b, &[int(2), int(4), int(7)]));
        assert_eq!(independent_subset(&m(&[&[1, 1], &[2, 2], &[0, 1], &[1, 0]])), vec![0, 2]);
    }

    #[test]
    fn bareiss_division_is_exact_on_a_dense_matrix() {
        let rows = m(&[&[2, 3, 5, 7], &[11, 13, 17, 19], &[23, 29, 31, 37], &[41, 43, 47, 53]]);
        assert_eq!(rank(&rows, 4), 4);
        let rows = m(&[&[2, 3, 5], &[4, 6, 10], &[1, 1, 1]]);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        assert!(apply(&rows, &ns[0]).iter().all(Zero::is_zero));
    }
}

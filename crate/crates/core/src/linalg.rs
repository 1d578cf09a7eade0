//! Exact linear algebra over `Q`. Matrices are row lists.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn zero_matrix(rows: usize, cols: usize) -> Vec<Vec<Q>> {
    vec![vec![Q::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Vec<Vec<Q>> {
    let mut m = zero_matrix(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Q::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Q::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Reduced row echelon form with zero rows dropped, and the pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{v : A v = 0}` for `A` with `cols` columns, one vector per free
/// column.
pub fn kernel(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Canonical basis (reduced echelon rows) of the span of `rows`.
pub fn row_space(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
    rref(rows).0
}

pub fn same_row_space(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    row_space(a) == row_space(b)
}

/// Whether every row of `a` lies in the span of `b`.
pub fn row_space_contains(b: &[Vec<Q>], a: &[Vec<Q>]) -> bool {
    let mut both = b.to_vec();
    both.extend_from_slice(a);
    rank(&both) == rank(b)
}

/// Coordinates of `v` in a reduced echelon basis with the given pivots, or
/// `None` if `v` is outside the span.
pub fn echelon_coordinates(basis: &[Vec<Q>], pivots: &[usize], v: &[Q]) -> Option<Vec<Q>> {
    let coords: Vec<Q> = pivots.iter().map(|&p| v[p].clone()).collect();
    let mut back = vec![Q::zero(); v.len()];
    for (c, row) in coords.iter().zip(basis) {
        for (x, y) in back.iter_mut().zip(row) {
            *x += c * y;
        }
    }
    (back == v).then_some(coords)
}

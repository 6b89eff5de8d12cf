//! Invariant factors of integer matrices.
//!
//! Sparse elimination runs first: any entry that divides every other entry
//! of its row and column is a valid pivot, and unit entries always are. Each
//! pivot is cleared by column operations and its row and column are then
//! dropped. What remains goes through a dense reduction over `BigInt`. The
//! diagonal collected from both phases is finally normalized to a
//! divisibility chain with the gcd/lcm exchange `diag(a, b) ~ diag(gcd, lcm)`.
//!
//! The sparse phase runs over `i64` with checked arithmetic and restarts over
//! `BigInt` if any intermediate entry overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::matrix::SparseMatrix;

trait Scalar: Clone + Ord + Signed + Integer + CheckedMul + CheckedSub + From<i64> {
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type Column<T> = Vec<(u32, T)>;

struct Reduction {
    /// Absolute values of the sparse pivots.
    pivots: Vec<BigInt>,
    /// Rows x columns of what is left, dense.
    residual: Vec<Vec<BigInt>>,
}

/// Invariant factors `d_1 | d_2 | … | d_r` of `m`, where `r` is its rank.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let reduction = sparse_reduce::<i64>(m).unwrap_or_else(|| {
        sparse_reduce::<BigInt>(m).expect("arbitrary precision cannot overflow")
    });
    let mut diag = reduction.pivots;
    diag.extend(dense_diagonal(reduction.residual));
    normalize_chain(diag)
}

/// Invariant factors of a dense matrix.
pub fn invariant_factors_dense(rows: &[Vec<i64>]) -> Vec<BigInt> {
    invariant_factors(&SparseMatrix::from_dense(rows))
}

/// Rank over the integers (equivalently over the rationals).
pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

fn sparse_reduce<T: Scalar>(m: &SparseMatrix) -> Option<Reduction> {
    let nrows = m.nrows();
    let mut cols: Vec<Column<T>> = m
        .columns()
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, T::from(v))).collect())
        .collect();
    let mut row_cols: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut row_count = vec![0usize; nrows];
    for (j, col) in cols.iter().enumerate() {
        for &(r, _) in col {
            row_cols[r as usize].push(j as u32);
            row_count[r as usize] += 1;
        }
    }
    let mut col_alive = vec![true; cols.len()];
    let mut pivots = Vec::new();

    // Columns visited in order of their initial length; repeated sweeps pick
    // up columns whose entries became usable after earlier eliminations.
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&j| cols[j].len());
    loop {
        let mut progressed = false;
        for &c in &order {
            if !col_alive[c] {
                continue;
            }
            if cols[c].is_empty() {
                col_alive[c] = false;
                continue;
            }
            let Some((r, p)) = choose_pivot(&cols, &row_cols, &row_count, c) else {
                continue;
            };
            eliminate(&mut cols, &mut row_cols, &mut row_count, c, r, &p)?;
            for &(rr, _) in &cols[c] {
                row_count[rr as usize] -= 1;
            }
            cols[c].clear();
            col_alive[c] = false;
            pivots.push(p.abs().to_big());
            progressed = true;
        }
        if !progressed {
            break;
        }
    }

    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| col_alive[j] && !cols[j].is_empty()).collect();
    let mut live_rows: Vec<u32> = live_cols
        .iter()
        .flat_map(|&j| cols[j].iter().map(|&(r, _)| r))
        .collect();
    live_rows.sort_unstable();
    live_rows.dedup();
    let mut residual = vec![vec![BigInt::zero(); live_cols.len()]; live_rows.len()];
    for (k, &j) in live_cols.iter().enumerate() {
        for (r, v) in &cols[j] {
            let i = live_rows.binary_search(r).unwrap();
            residual[i][k] = v.to_big();
        }
    }
    Some(Reduction { pivots, residual })
}

/// A unit entry of column `c` in the sparsest row, or failing that the
/// smallest entry dividing everything in its row and column.
fn choose_pivot<T: Scalar>(
    cols: &[Column<T>],
    row_cols: &[Vec<u32>],
    row_count: &[usize],
    c: usize,
) -> Option<(u32, T)> {
    let col = &cols[c];
    if let Some((r, v)) = col
        .iter()
        .filter(|(_, v)| v.is_one() || (-v.clone()).is_one())
        .min_by_key(|(r, _)| row_count[*r as usize])
    {
        return Some((*r, v.clone()));
    }
    let mut candidates: Vec<&(u32, T)> = col.iter().collect();
    candidates.sort_by(|a, b| a.1.abs().cmp(&b.1.abs()));
    'cand: for (r, p) in candidates {
        if !col.iter().all(|(_, v)| v.is_multiple_of(p)) {
            continue;
        }
        for &j in &row_cols[*r as usize] {
            if let Some(v) = entry(&cols[j as usize], *r) {
                if !v.is_multiple_of(p) {
                    continue 'cand;
                }
            }
        }
        return Some((*r, p.clone()));
    }
    None
}

fn entry<T>(col: &[(u32, T)], r: u32) -> Option<&T> {
    col.binary_search_by_key(&r, |&(row, _)| row)
        .ok()
        .map(|i| &col[i].1)
}

/// Clears row `r` outside column `c` by column operations.
fn eliminate<T: Scalar>(
    cols: &mut [Column<T>],
    row_cols: &mut [Vec<u32>],
    row_count: &mut [usize],
    c: usize,
    r: u32,
    p: &T,
) -> Option<()> {
    let mut targets = std::mem::take(&mut row_cols[r as usize]);
    targets.sort_unstable();
    targets.dedup();
    let pivot_col = std::mem::take(&mut cols[c]);
    let mut keep = Vec::new();
    for j in targets {
        let j = j as usize;
        if j == c {
            keep.push(j as u32);
            continue;
        }
        let Some(v) = entry(&cols[j], r) else { continue };
        let factor = v.div_floor(p);
        let old = std::mem::take(&mut cols[j]);
        let merged = axpy(&old, &factor, &pivot_col, j as u32, row_cols, row_count)?;
        cols[j] = merged;
    }
    cols[c] = pivot_col;
    row_cols[r as usize] = keep;
    Some(())
}

/// `target - factor * pivot`, keeping the row bookkeeping in sync.
fn axpy<T: Scalar>(
    target: &[(u32, T)],
    factor: &T,
    pivot: &[(u32, T)],
    j: u32,
    row_cols: &mut [Vec<u32>],
    row_count: &mut [usize],
) -> Option<Column<T>> {
    let mut out = Vec::with_capacity(target.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() || b < pivot.len() {
        let ra = target.get(a).map(|e| e.0);
        let rb = pivot.get(b).map(|e| e.0);
        match (ra, rb) {
            (Some(x), Some(y)) if x == y => {
                let v = target[a].1.checked_sub(&factor.checked_mul(&pivot[b].1)?)?;
                if v.is_zero() {
                    row_count[x as usize] -= 1;
                } else {
                    out.push((x, v));
                }
                a += 1;
                b += 1;
            }
            (Some(x), y) if y.is_none_or(|y| x < y) => {
                out.push(target[a].clone());
                a += 1;
            }
            (_, Some(y)) => {
                let v = T::zero().checked_sub(&factor.checked_mul(&pivot[b].1)?)?;
                out.push((y, v));
                row_cols[y as usize].push(j);
                row_count[y as usize] += 1;
                b += 1;
            }
            _ => unreachable!(),
        }
    }
    Some(out)
}

/// Diagonalizes a dense matrix by unimodular row and column operations and
/// returns the absolute values of the nonzero diagonal entries.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..n {
                    let sub = &q * &a[t][j];
                    a[i][j] -= sub;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let sub = &q * &row[t];
                    row[j] -= sub;
                }
                dirty |= !a[t][j].is_zero();
            }
            if !dirty {
                break;
            }
            // move the smallest remainder in row t or column t to the pivot
            let mut best = (t, t);
            for i in t..m {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..n {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    _t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn normalize_chain(diag: Vec<BigInt>) -> Vec<BigInt> {
    let ones = diag.iter().filter(|d| d.is_one()).count();
    let mut rest: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    rest.sort();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            if g == rest[i] {
                continue;
            }
            let l = &rest[i] / &g * &rest[j];
            rest[i] = g;
            rest[j] = l;
        }
    }
    let mut out = vec![BigInt::one(); ones];
    out.extend(rest);
    out.sort();
    out
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub(crate) fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("torsion coefficient exceeds u64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<i64> {
        invariant_factors_dense(rows)
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn worked_examples() {
        // r2 - 3 r1 then c2 - 2 c1 gives diag(2, -4)
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(factors(&[vec![0, 0], vec![0, 0]]), Vec::<i64>::new());
        assert_eq!(factors(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
        assert_eq!(factors(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert!(factors(&[]).is_empty());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let rows = vec![vec![1, big, big], vec![big, 1, big], vec![big, big, 1]];
        let f = invariant_factors_dense(&rows);
        assert_eq!(f.len(), 3);
        let det = determinant(&rows);
        let prod: BigInt = f.iter().product();
        assert_eq!(prod, det.abs());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::from(0));
        assert_eq!(
            determinant(&[vec![0, 2, 1], vec![3, 0, 0], vec![1, 1, 1]]),
            BigInt::from(-3)
        );
    }
}

//! Column-major sparse integer matrices.

use std::collections::BTreeMap;

use serde::Serialize;

/// Sparse integer matrix stored by columns. Each column is a list of
/// `(row, value)` entries sorted by row with no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            cols: vec![Vec::new(); ncols],
        }
    }

    /// Builds a matrix from columns given as `(row, value)` lists in any
    /// order. Repeated rows are summed and zeros dropped.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        let ncols = cols.len();
        let cols = cols
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for (r, v) in col {
                    assert!((r as usize) < nrows, "row {r} out of range {nrows}");
                    *acc.entry(r).or_insert(0) += v;
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        Self { nrows, ncols, cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, row)| row[c] != 0)
                    .map(|(r, row)| (r as u32, row[c]))
                    .collect()
            })
            .collect();
        Self { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, c: usize) -> &[(u32, i64)] {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[Vec<(u32, i64)>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c]
            .binary_search_by_key(&(r as u32), |&(row, _)| row)
            .map_or(0, |i| self.cols[c][i].1)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r as usize][c] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                cols[r as usize].push((c as u32, v));
            }
        }
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            cols,
        }
    }

    /// `self * rhs`, panicking on dimension mismatch.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let cols = rhs
            .cols
            .iter()
            .map(|rcol| {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for &(k, b) in rcol {
                    for &(r, a) in &self.cols[k as usize] {
                        *acc.entry(r).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: rhs.ncols,
            cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_product() {
        let a = SparseMatrix::from_dense(&[vec![1, 0, 2], vec![0, -1, 0]]);
        assert_eq!(a.nnz(), 3);
        assert_eq!(a.get(0, 2), 2);
        assert_eq!(a.get(1, 0), 0);
        assert_eq!(a.transpose().to_dense(), vec![vec![1, 0], vec![0, -1], vec![2, 0]]);
        let p = a.mul(&a.transpose());
        assert_eq!(p.to_dense(), vec![vec![5, 0], vec![0, 1]]);
    }

    #[test]
    fn from_columns_accumulates() {
        let m = SparseMatrix::from_columns(2, vec![vec![(1, 1), (0, 2), (1, -1)]]);
        assert_eq!(m.column(0), &[(0, 2)]);
    }
}

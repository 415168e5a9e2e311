use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Square integer matrix stored by columns; each column is sorted by row
/// and holds no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseIntMatrix { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim).map(|i| vec![(i, BigInt::from(1))]).collect();
        SparseIntMatrix { dim, cols }
    }

    /// Builds from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triplets<I>(dim: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, c, v) in triplets {
            if r >= dim || c >= dim {
                return Err(Error::Dimension(format!("entry ({r}, {c}) outside {dim}x{dim}")));
            }
            *acc.entry((c, r)).or_default() += v;
        }
        let mut cols = vec![Vec::new(); dim];
        for ((c, r), v) in acc {
            if !v.is_zero() {
                cols[c].push((r, v));
            }
        }
        Ok(SparseIntMatrix { dim, cols })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        let triplets = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(move |(c, &v)| (r, c, BigInt::from(v)))
        });
        SparseIntMatrix::from_triplets(dim, triplets)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.cols[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|i| self.cols[c][i].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// All entries sorted by `(row, col)`.
    pub fn triplets(&self) -> Vec<(usize, usize, BigInt)> {
        let mut t: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())))
            .collect();
        t.sort_by_key(|e| (e.0, e.1));
        t
    }

    /// Line-oriented `row col value` dump, sorted.
    pub fn to_triplet_text(&self) -> String {
        let mut s = String::new();
        for (r, c, v) in self.triplets() {
            writeln!(s, "{r} {c} {v}").expect("writing to a String");
        }
        s
    }

    pub fn to_dense_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = vec![vec![0i64; self.dim]; self.dim];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.to_i64()?;
            }
        }
        Some(out)
    }

    /// Columns with entries narrowed to `i64`, if they all fit.
    pub fn small_columns(&self) -> Option<Vec<Vec<(usize, i64)>>> {
        self.cols
            .iter()
            .map(|col| col.iter().map(|(r, v)| v.to_i64().map(|v| (*r, v))).collect())
            .collect()
    }

    /// Largest absolute column sum.
    pub fn max_column_norm(&self) -> BigInt {
        self.cols
            .iter()
            .map(|col| col.iter().map(|(_, v)| num_traits::Signed::abs(v)).sum::<BigInt>())
            .max()
            .unwrap_or_default()
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.dim);
        let mut y = vec![BigInt::zero(); self.dim];
        for (c, xc) in x.iter().enumerate() {
            if xc.is_zero() {
                continue;
            }
            for (r, v) in &self.cols[c] {
                y[*r] += v * xc;
            }
        }
        y
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.dim, other.dim);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.cols[*k] {
                        *acc.entry(*r).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseIntMatrix { dim: self.dim, cols }
    }

    pub(crate) fn from_columns(dim: usize, cols: Vec<Vec<(usize, BigInt)>>) -> Self {
        SparseIntMatrix { dim, cols }
    }
}

//! Exact linear algebra over the two-element field.
//!
//! Matrices are assembled sparsely, column by column, and reduced in a dense
//! packed form. Pivoting always takes the first nonzero in index order, so
//! every result (witnesses, kernel bases, exported files) is reproducible.

mod bits;
mod echelon;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;

pub use bits::BitVec;
pub use echelon::Echelon;

use crate::error::{Error, Result};

/// Sparse vector: a dimension and the set of coordinates equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    dim: usize,
    support: BTreeSet<usize>,
}

impl F2Vector {
    pub fn zeros(dim: usize) -> F2Vector {
        F2Vector { dim, support: BTreeSet::new() }
    }

    /// Builds a vector from coordinates; repeated coordinates cancel.
    pub fn from_support(dim: usize, ones: impl IntoIterator<Item = usize>) -> Result<F2Vector> {
        let mut v = F2Vector::zeros(dim);
        for i in ones {
            if i >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: i + 1 });
            }
            v.toggle(i);
        }
        Ok(v)
    }

    pub fn unit(dim: usize, i: usize) -> F2Vector {
        let mut v = F2Vector::zeros(dim);
        v.toggle(i);
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.support.contains(&i)
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.dim, "coordinate {i} out of range ({})", self.dim);
        if !self.support.remove(&i) {
            self.support.insert(i);
        }
    }

    /// Symmetric difference of supports.
    pub fn add(&self, other: &F2Vector) -> F2Vector {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        F2Vector { dim: self.dim, support: self.support.symmetric_difference(&other.support).copied().collect() }
    }

    pub fn to_bits(&self) -> BitVec {
        BitVec::from_ones(self.dim, self.support.iter().copied())
    }

    pub fn from_bits(bits: &BitVec) -> F2Vector {
        F2Vector { dim: bits.len(), support: bits.ones().collect() }
    }
}

/// Matrix stored as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    columns: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> F2Matrix {
        F2Matrix { rows, cols, columns: vec![F2Vector::zeros(rows); cols] }
    }

    pub fn identity(k: usize) -> F2Matrix {
        F2Matrix { rows: k, cols: k, columns: (0..k).map(|i| F2Vector::unit(k, i)).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<F2Vector>) -> Result<F2Matrix> {
        for c in &columns {
            if c.dim() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.dim() });
            }
        }
        Ok(F2Matrix { rows, cols: columns.len(), columns })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &F2Vector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[F2Vector] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].get(r)
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(|c| c.support().len()).sum()
    }

    /// Nonzero entries sorted by row, then column.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> =
            self.columns.iter().enumerate().flat_map(|(c, col)| col.support().iter().map(move |&r| (r, c))).collect();
        out.sort_unstable();
        out
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for (r, c) in self.entries() {
            t.columns[r].toggle(c);
        }
        t
    }

    pub fn mul_vec(&self, x: &F2Vector) -> Result<F2Vector> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.dim() });
        }
        let mut acc = BitVec::zeros(self.rows);
        for &j in x.support() {
            for &r in self.columns[j].support() {
                acc.flip(r);
            }
        }
        Ok(F2Vector::from_bits(&acc))
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if other.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let columns = other.columns.iter().map(|c| self.mul_vec(c)).collect::<Result<Vec<_>>>()?;
        Ok(F2Matrix { rows: self.rows, cols: other.cols, columns })
    }

    /// Keeps only the listed rows, renumbered in the given order.
    pub fn select_rows(&self, keep: &[usize]) -> F2Matrix {
        let mut new_index = vec![usize::MAX; self.rows];
        for (i, &r) in keep.iter().enumerate() {
            new_index[r] = i;
        }
        let columns = self
            .columns
            .iter()
            .map(|c| F2Vector {
                dim: keep.len(),
                support: c.support().iter().filter(|&&r| new_index[r] != usize::MAX).map(|&r| new_index[r]).collect(),
            })
            .collect();
        F2Matrix { rows: keep.len(), cols: self.cols, columns }
    }

    pub fn select_columns(&self, keep: &[usize]) -> F2Matrix {
        F2Matrix { rows: self.rows, cols: keep.len(), columns: keep.iter().map(|&c| self.columns[c].clone()).collect() }
    }

    /// Dense packed rows, for elimination.
    pub fn dense_rows(&self) -> Vec<BitVec> {
        let mut rows = vec![BitVec::zeros(self.cols); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &r in col.support() {
                rows[r].set(c);
            }
        }
        rows
    }

    /// Sparse text export: `rows cols` header, then one `r c` line per
    /// nonzero, sorted.
    pub fn to_sparse_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} {}", self.rows, self.cols).unwrap();
        for (r, c) in self.entries() {
            writeln!(s, "{r} {c}").unwrap();
        }
        s
    }

    pub fn from_sparse_text(text: &str) -> Result<F2Matrix> {
        let mut lines = text.lines();
        let parse_pair = |line: &str| -> Result<(usize, usize)> {
            let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
                _ => Err(Error::Parse(format!("bad sparse matrix line {line:?}"))),
            }
        };
        let (rows, cols) = parse_pair(lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?)?;
        let mut m = F2Matrix::zeros(rows, cols);
        for line in lines {
            let (r, c) = parse_pair(line)?;
            if r >= rows || c >= cols {
                return Err(Error::Parse(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            m.columns[c].toggle(r);
        }
        Ok(m)
    }
}

/// Rank by row-parallel dense Gaussian elimination.
pub fn rank(m: &F2Matrix) -> usize {
    let mut rows = if m.rows() <= m.cols() { m.dense_rows() } else { m.transpose().dense_rows() };
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let start = col / 64;
        let job = |row: &mut BitVec| {
            if row.get(col) {
                row.xor_assign_from(pivot, start);
            }
        };
        if tail.len() * (width / 64 + 1) > 1 << 14 {
            tail.par_iter_mut().for_each(job);
        } else {
            tail.iter_mut().for_each(job);
        }
        rank += 1;
    }
    rank
}

/// Some `x` with `M x = b`, or `None` when `b` is outside the column span.
pub fn solve_membership(m: &F2Matrix, b: &F2Vector) -> Result<Option<F2Vector>> {
    if b.dim() != m.rows() {
        return Err(Error::DimensionMismatch { expected: m.rows(), found: b.dim() });
    }
    Ok(Echelon::from_columns(m, true).solve(&b.to_bits()).map(|x| F2Vector::from_bits(&x)))
}

/// Basis of the null space, one vector per column that reduces to zero.
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    let mut basis = Echelon::new(m.rows(), m.cols());
    let mut kernel = Vec::new();
    for (j, col) in m.columns().iter().enumerate() {
        if let Err(tag) = basis.insert(col.to_bits(), BitVec::unit(m.cols(), j)) {
            kernel.push(F2Vector::from_bits(&tag));
        }
    }
    kernel
}

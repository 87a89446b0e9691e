use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::subspace::Subspace;
use super::vector::{coord_bit, ones64, words_for, BitVector};
use crate::error::{Error, Result};

/// Dense matrix over GF(2). Rows are packed like [`BitVector`]s.
///
/// Matrices act on column vectors: `(M v)_i = sum_j M[i][j] v_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Output of [`rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination on packed rows. Nonzero rows end up first, in
/// order of strictly increasing pivot column; returns the pivot columns.
pub(crate) fn rref_words(
    data: &mut [u64],
    nrows: usize,
    stride: usize,
    ncols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let (wi, mask) = (c / 64, coord_bit(c));
        let Some(p) = (r..nrows).find(|&i| data[i * stride + wi] & mask != 0) else {
            continue;
        };
        if p != r {
            for k in 0..stride {
                data.swap(p * stride + k, r * stride + k);
            }
        }
        for i in 0..nrows {
            if i != r && data[i * stride + wi] & mask != 0 {
                for k in 0..stride {
                    let v = data[r * stride + k];
                    data[i * stride + k] ^= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * m.stride + i / 64] |= coord_bit(i);
        }
        m
    }

    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, BitVector::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Single-word rows; requires `cols <= 64`.
    pub fn from_row_words(rows: usize, cols: usize, words: &[u64]) -> Self {
        assert!(cols <= 64 && words.len() == rows);
        let mut m = Self::zeros(rows, cols);
        if cols > 0 {
            let mask = super::vector::prefix_mask(cols);
            for (d, w) in m.data.iter_mut().zip(words) {
                *d = w & mask;
            }
        }
        m
    }

    /// Square matrix from its columns, each a single packed word.
    pub fn from_col_words(n: usize, cols: &[u64]) -> Self {
        assert!(n <= 64 && cols.len() == n);
        let mut m = Self::zeros(n, n);
        for (j, &c) in cols.iter().enumerate() {
            for i in ones64(c) {
                if i < n {
                    m.data[i] |= coord_bit(j);
                }
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.data[i * m.stride + j / 64] |= coord_bit(j);
                }
            }
        }
        m
    }

    /// Parses rows of `0`/`1` (or `.` for zero), one row per line.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::parse::<BitVector>)
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Result<bool> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        Ok(self.data[i * self.stride + j / 64] & coord_bit(j) != 0)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) -> Result<()> {
        self.get(i, j)?;
        let w = &mut self.data[i * self.stride + j / 64];
        if value {
            *w |= coord_bit(j);
        } else {
            *w &= !coord_bit(j);
        }
        Ok(())
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Row `i` as a single word; requires `cols <= 64`.
    pub fn row_word(&self, i: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        if self.stride == 0 {
            0
        } else {
            self.data[i]
        }
    }

    /// All rows as single words; requires `cols <= 64`.
    pub fn row_words64(&self) -> Vec<u64> {
        (0..self.rows).map(|i| self.row_word(i)).collect()
    }

    /// All columns as single words; requires `rows <= 64`.
    pub fn col_words64(&self) -> Vec<u64> {
        assert!(self.rows <= 64);
        let mut cols = vec![0u64; self.cols];
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                for j in ones64(w) {
                    cols[k * 64 + j] |= coord_bit(i);
                }
            }
        }
        cols
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut v = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i * self.stride + j / 64] & coord_bit(j) != 0 {
                let _ = v.set(i, true);
            }
        }
        v
    }

    /// Flattened row-major coordinates, `rows * cols` long.
    pub fn flatten(&self) -> BitVector {
        let mut v = BitVector::zeros(self.rows * self.cols);
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                for j in ones64(w) {
                    let _ = v.set(i * self.cols + k * 64 + j, true);
                }
            }
        }
        v
    }

    pub fn unflatten(rows: usize, cols: usize, v: &BitVector) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: v.len(),
            });
        }
        let mut m = Self::zeros(rows, cols);
        for p in v.ones() {
            m.data[(p / cols) * m.stride + (p % cols) / 64] |= coord_bit(p % cols);
        }
        Ok(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                for j in ones64(w) {
                    let j = k * 64 + j;
                    t.data[j * t.stride + i / 64] |= coord_bit(i);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, &w) in self.row_words(i).iter().enumerate() {
                for j in ones64(w) {
                    let src = (k * 64 + j) * other.stride;
                    for s in 0..out.stride {
                        out.data[i * out.stride + s] ^= other.data[src + s];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix commutator `AB + BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            let ones: u32 = self
                .row_words(i)
                .iter()
                .zip(v.words())
                .map(|(a, b)| (a & b).count_ones())
                .sum();
            if ones & 1 == 1 {
                out.set(i, true)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        rref_words(&mut data, self.rows, self.stride, self.cols).len()
    }

    /// `{ v : M v = 0 }` as a canonical subspace of `GF(2)^cols`.
    pub fn kernel(&self) -> Subspace {
        let r = rref(self);
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::zeros(self.cols);
            let _ = v.set(f, true);
            for (row, &p) in r.pivots.iter().enumerate() {
                if r.matrix.data[row * self.stride + f / 64] & coord_bit(f) != 0 {
                    let _ = v.set(p, true);
                }
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, &basis)
            .expect("kernel vectors share the ambient dimension")
    }

    /// Column space, i.e. the image of `v -> M v`.
    pub fn image(&self) -> Subspace {
        let cols: Vec<BitVector> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::from_vectors(self.rows, &cols).expect("columns share a length")
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                if self.data[i * self.stride + j / 64] & coord_bit(j) != 0 {
                    aug.data[i * aug.stride + j / 64] |= coord_bit(j);
                }
            }
            let j = n + i;
            aug.data[i * aug.stride + j / 64] |= coord_bit(j);
        }
        let pivots = rref_words(&mut aug.data, n, aug.stride, n);
        if pivots.len() < n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| {
            let c = n + j;
            aug.data[i * aug.stride + c / 64] & coord_bit(c) != 0
        }))
    }

    /// Restricts the columns to `cols` and rows to `rows` (by index).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.data[rows[i] * self.stride + cols[j] / 64] & coord_bit(cols[j]) != 0
        })
    }
}

/// Reduced row-echelon form.
pub fn rref(m: &BitMatrix) -> Rref {
    let mut out = m.clone();
    let pivots = rref_words(&mut out.data, m.rows, m.stride, m.cols);
    Rref {
        rank: pivots.len(),
        matrix: out,
        pivots,
    }
}

/// `ker(M - lam I)` for a square matrix.
pub fn eigenspace(m: &BitMatrix, lam: bool) -> Result<Subspace> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if lam {
        Ok(m.add(&BitMatrix::identity(m.rows))?.kernel())
    } else {
        Ok(m.kernel())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let b = self.data[i * self.stride + j / 64] & coord_bit(j) != 0;
                f.write_str(if b { "1" } else { "0" })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(" ")?;
            }
            for j in 0..self.cols {
                let b = self.data[i * self.stride + j / 64] & coord_bit(j) != 0;
                f.write_str(if b { "1" } else { "0" })?;
            }
        }
        f.write_str("]")
    }
}

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::rref_words;
use super::vector::{coord_bit, words_for, BitVector};
use crate::error::{Error, Result};

/// A subspace of `GF(2)^ambient`, stored by its unique reduced row-echelon
/// basis. Two subspaces are equal iff their stored bases are identical, and
/// the derived ordering compares those bases word by word, so the minimum of
/// a set of equal-dimensional subspaces is the one with the lexicographically
/// smallest echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    dim: usize,
    rows: Vec<u64>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            dim: 0,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let stride = words_for(ambient);
        let mut rows = vec![0u64; ambient * stride];
        for i in 0..ambient {
            rows[i * stride + i / 64] = coord_bit(i);
        }
        Self {
            ambient,
            dim: ambient,
            rows,
        }
    }

    /// Span of `vectors`, in canonical form.
    pub fn from_vectors(ambient: usize, vectors: &[BitVector]) -> Result<Self> {
        let stride = words_for(ambient);
        let mut rows = Vec::with_capacity(vectors.len() * stride);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            rows.extend_from_slice(v.words());
        }
        Ok(Self::from_raw_rows(ambient, rows))
    }

    /// Span of single-word vectors (`ambient <= 64`).
    pub fn from_words64(ambient: usize, vectors: &[u64]) -> Self {
        assert!(ambient <= 64);
        let mask = super::vector::prefix_mask(ambient);
        Self::from_raw_rows(ambient, vectors.iter().map(|v| v & mask).collect())
    }

    pub(crate) fn from_raw_rows(ambient: usize, mut rows: Vec<u64>) -> Self {
        let stride = words_for(ambient);
        if stride == 0 {
            return Self::zero(ambient);
        }
        let n = rows.len() / stride;
        let dim = if stride == 1 {
            rref64(&mut rows)
        } else {
            rref_words(&mut rows, n, stride, ambient).len()
        };
        rows.truncate(dim * stride);
        Self { ambient, dim, rows }
    }

    /// Trusts that `rows` are already in reduced echelon form.
    pub(crate) fn from_rref_words64(ambient: usize, rows: Vec<u64>) -> Self {
        debug_assert!({
            let mut c = rows.clone();
            rref64(&mut c);
            c == rows
        });
        Self {
            ambient,
            dim: rows.len(),
            rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim == self.ambient
    }

    fn stride(&self) -> usize {
        words_for(self.ambient)
    }

    pub fn basis(&self) -> Vec<BitVector> {
        let s = self.stride();
        (0..self.dim)
            .map(|i| BitVector::from_words(self.ambient, self.rows[i * s..(i + 1) * s].to_vec()))
            .collect()
    }

    /// Basis rows as single words; requires `ambient <= 64`.
    pub fn rows64(&self) -> &[u64] {
        assert!(self.ambient <= 64);
        &self.rows
    }

    /// Raw packed rows.
    pub fn words(&self) -> &[u64] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        let s = self.stride();
        (0..self.dim)
            .map(|i| {
                let row = &self.rows[i * s..(i + 1) * s];
                let (k, w) = row
                    .iter()
                    .enumerate()
                    .find(|(_, &w)| w != 0)
                    .expect("rows are nonzero");
                k * 64 + w.leading_zeros() as usize
            })
            .collect()
    }

    /// Reduces `v` modulo the subspace; zero iff `v` lies in it.
    pub fn reduce_word(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let p = r.leading_zeros();
            if v & (1u64 << (63 - p)) != 0 {
                v ^= r;
            }
        }
        v
    }

    pub fn reduce(&self, v: &BitVector) -> Result<BitVector> {
        self.check_len(v.len())?;
        let s = self.stride();
        let mut w = v.words().to_vec();
        for (i, p) in self.pivots().into_iter().enumerate() {
            if w[p / 64] & coord_bit(p) != 0 {
                for (wk, &rk) in w.iter_mut().zip(&self.rows[i * s..(i + 1) * s]) {
                    *wk ^= rk;
                }
            }
        }
        Ok(BitVector::from_words(self.ambient, w))
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_word(&self, v: u64) -> bool {
        self.reduce_word(v) == 0
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        if other.ambient != self.ambient || other.dim > self.dim {
            return false;
        }
        if self.stride() == 1 {
            other.rows.iter().all(|&r| self.contains_word(r))
        } else {
            other
                .basis()
                .iter()
                .all(|v| self.contains(v).unwrap_or(false))
        }
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_len(other.ambient)?;
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Ok(Self::from_raw_rows(self.ambient, rows))
    }

    /// Adds vectors to the span.
    pub fn extend(&self, vectors: &[BitVector]) -> Result<Self> {
        let mut rows = self.rows.clone();
        for v in vectors {
            self.check_len(v.len())?;
            rows.extend_from_slice(v.words());
        }
        Ok(Self::from_raw_rows(self.ambient, rows))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_len(other.ambient)?;
        // Zassenhaus: echelonize [a | a] over [b | 0]; rows with zero left half span the intersection.
        let n = self.ambient;
        let width = 2 * n;
        let mut rows: Vec<BitVector> = Vec::new();
        for v in self.basis() {
            let mut w = BitVector::zeros(width);
            for i in v.ones() {
                w.set(i, true)?;
                w.set(n + i, true)?;
            }
            rows.push(w);
        }
        for v in other.basis() {
            let mut w = BitVector::zeros(width);
            for i in v.ones() {
                w.set(i, true)?;
            }
            rows.push(w);
        }
        let stacked = Self::from_vectors(width, &rows)?;
        let mut out = Vec::new();
        for r in stacked.basis() {
            if r.leading().is_some_and(|p| p >= n) {
                let mut v = BitVector::zeros(n);
                for i in r.ones() {
                    v.set(i - n, true)?;
                }
                out.push(v);
            }
        }
        Self::from_vectors(n, &out)
    }

    /// Standard basis vectors at the non-pivot coordinates; they span a
    /// complement of the subspace.
    pub fn complement_coords(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for p in self.pivots() {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: len,
            })
        }
    }
}

/// In-place RREF of single-word rows; returns the rank and truncates to it.
pub(crate) fn rref64(rows: &mut Vec<u64>) -> usize {
    let mut r = 0;
    let n = rows.len();
    while r < n {
        // pick the row with the leftmost leading coordinate among r..
        let mut best = r;
        for i in r + 1..n {
            if rows[i] > rows[best] {
                best = i;
            }
        }
        if rows[best] == 0 {
            break;
        }
        rows.swap(r, best);
        let piv = rows[r];
        let mask = 1u64 << (63 - piv.leading_zeros());
        for (i, row) in rows.iter_mut().enumerate().take(n) {
            if i != r && *row & mask != 0 {
                *row ^= piv;
            }
        }
        r += 1;
    }
    rows.truncate(r);
    r
}

/// Span of `vectors`, canonicalized.
pub fn canonical_subspace(ambient: usize, vectors: &[BitVector]) -> Result<Subspace> {
    Subspace::from_vectors(ambient, vectors)
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.basis().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({}; {})", self.ambient, self)
    }
}

/// Echelon basis of single-word vectors that remembers, for each row, which
/// inserted vectors it is the sum of. The combination masks use the same
/// packing as coordinates: inserted vector `k` is bit `coord_bit(k)`.
#[derive(Clone, Debug, Default)]
pub struct Echelon64 {
    rows: Vec<u64>,
    pivots: Vec<u64>,
    combos: Vec<u64>,
    inserted: usize,
}

impl Echelon64 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Residue of `v` and the combination of inserted vectors removed from it.
    #[inline]
    pub fn reduce(&self, mut v: u64) -> (u64, u64) {
        let mut combo = 0;
        for ((&r, &p), &c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if v & p != 0 {
                v ^= r;
                combo ^= c;
            }
        }
        (v, combo)
    }

    #[inline]
    pub fn residue(&self, mut v: u64) -> u64 {
        for (&r, &p) in self.rows.iter().zip(&self.pivots) {
            if v & p != 0 {
                v ^= r;
            }
        }
        v
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let (res, combo) = self.reduce(v);
        if res == 0 {
            return false;
        }
        assert!(self.inserted < 64, "Echelon64 tracks at most 64 vectors");
        let p = 1u64 << (63 - res.leading_zeros());
        self.rows.push(res);
        self.pivots.push(p);
        self.combos.push(combo ^ coord_bit(self.inserted));
        self.inserted += 1;
        true
    }

    /// Coordinates of `v` relative to the inserted vectors, if `v` is in the span.
    pub fn coords(&self, v: u64) -> Option<u64> {
        let (res, combo) = self.reduce(v);
        (res == 0).then_some(combo)
    }

    pub fn to_subspace(&self, ambient: usize) -> Subspace {
        Subspace::from_words64(ambient, &self.rows)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }
}

/// Multi-word counterpart of [`Echelon64`], for long vectors such as
/// flattened matrices. Tracks combinations of at most 64 inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon {
    stride: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    combos: Vec<u64>,
    inserted: usize,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self {
            stride: words_for(len),
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, v: &[u64]) -> (Vec<u64>, u64) {
        debug_assert_eq!(v.len(), self.stride);
        let mut w = v.to_vec();
        let mut combo = 0;
        for ((r, &p), &c) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            if w[p / 64] & coord_bit(p) != 0 {
                for (a, b) in w.iter_mut().zip(r) {
                    *a ^= b;
                }
                combo ^= c;
            }
        }
        (w, combo)
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let (res, combo) = self.reduce(v);
        let Some((k, w)) = res.iter().enumerate().find(|(_, &w)| w != 0) else {
            return false;
        };
        assert!(self.inserted < 64, "Echelon tracks at most 64 vectors");
        let p = k * 64 + w.leading_zeros() as usize;
        self.rows.push(res);
        self.pivots.push(p);
        self.combos.push(combo ^ coord_bit(self.inserted));
        self.inserted += 1;
        true
    }

    pub fn coords(&self, v: &[u64]) -> Option<u64> {
        let (res, combo) = self.reduce(v);
        res.iter().all(|&w| w == 0).then_some(combo)
    }
}

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::matrix::BitMatrix;
use super::subspace::{rref64, Echelon64, Subspace};
use super::vector::{coord_bit, ones64, prefix_mask};
use crate::error::{Error, Result};

/// Square matrix of size at most 64, stored by columns: `cols[j]` is the image
/// of the `j`-th unit vector, packed like a [`BitVector`](super::BitVector) word.
///
/// This is the working representation for adjoint maps and group elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat64 {
    cols: Vec<u64>,
}

impl Mat64 {
    pub fn zero(n: usize) -> Self {
        assert!(n <= 64);
        Self { cols: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= 64);
        Self {
            cols: (0..n).map(coord_bit).collect(),
        }
    }

    pub fn from_cols(cols: Vec<u64>) -> Self {
        assert!(cols.len() <= 64);
        Self { cols }
    }

    pub fn from_bitmatrix(m: &BitMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() > 64 {
            return Err(Error::DimensionTooLarge {
                dim: m.rows(),
                max: 64,
            });
        }
        Ok(Self {
            cols: m.col_words64(),
        })
    }

    pub fn to_bitmatrix(&self) -> BitMatrix {
        BitMatrix::from_col_words(self.n(), &self.cols)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    #[inline]
    pub fn col(&self, j: usize) -> u64 {
        self.cols[j]
    }

    #[inline]
    pub fn apply(&self, v: u64) -> u64 {
        let mut acc = 0;
        for j in ones64(v) {
            acc ^= self.cols[j];
        }
        acc
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Self {
            cols: other.cols.iter().map(|&c| self.apply(c)).collect(),
        }
    }

    pub fn square(&self) -> Self {
        self.compose(self)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            *a ^= b;
        }
    }

    pub fn add_identity(&self) -> Self {
        let mut m = self.clone();
        for (j, c) in m.cols.iter_mut().enumerate() {
            *c ^= coord_bit(j);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|&c| c == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, &c)| c == coord_bit(j))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n();
        let mut t = vec![0u64; n];
        for (j, &c) in self.cols.iter().enumerate() {
            for i in ones64(c) {
                t[i] |= coord_bit(j);
            }
        }
        Self { cols: t }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.cols.clone();
        rref64(&mut rows)
    }

    pub fn kernel(&self) -> Subspace {
        // column reduction; a column that reduces to zero records a relation
        let mut red: Vec<(u64, u64, u64)> = Vec::new();
        let mut kern = Vec::new();
        for (j, &col) in self.cols.iter().enumerate() {
            let (mut v, mut combo) = (col, coord_bit(j));
            for &(p, r, c) in &red {
                if v & p != 0 {
                    v ^= r;
                    combo ^= c;
                }
            }
            if v == 0 {
                kern.push(combo);
            } else {
                red.push((1u64 << (63 - v.leading_zeros()), v, combo));
            }
        }
        Subspace::from_words64(self.n(), &kern)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_words64(self.n(), &self.cols)
    }

    pub fn inverse(&self) -> Option<Self> {
        // solve self * x_j = e_j using the column echelon with combination tracking
        let n = self.n();
        let mut ech = Echelon64::new();
        for &c in &self.cols {
            if !ech.insert(c) {
                return None;
            }
        }
        let cols = (0..n)
            .map(|j| ech.coords(coord_bit(j)).expect("full rank"))
            .collect();
        Some(Self { cols })
    }

    /// Image of a subspace, in canonical form.
    pub fn apply_subspace(&self, s: &Subspace) -> Subspace {
        let mut rows: Vec<u64> = s.rows64().iter().map(|&v| self.apply(v)).collect();
        rref64(&mut rows);
        Subspace::from_rref_words64(s.ambient_dim(), rows)
    }

    /// Evaluates the polynomial `sum_i c_i x^i` (bit `i` of `poly`) at `self`.
    pub fn eval_poly(&self, poly: u128) -> Self {
        let n = self.n();
        let mut acc = Self::zero(n);
        if poly == 0 {
            return acc;
        }
        let deg = 127 - poly.leading_zeros();
        for i in (0..=deg).rev() {
            acc = self.compose(&acc);
            if poly >> i & 1 == 1 {
                acc = acc.add_identity();
            }
        }
        acc
    }

    /// Masks every column to `n` coordinates; used after truncating spaces.
    pub fn masked(&self) -> Self {
        let m = prefix_mask(self.n());
        Self {
            cols: self.cols.iter().map(|&c| c & m).collect(),
        }
    }
}

impl fmt::Debug for Mat64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_bitmatrix(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_matches_bitmatrix_product() {
        let a = BitMatrix::parse_rows("110\n011\n001").unwrap();
        let b = BitMatrix::parse_rows("100\n110\n101").unwrap();
        let am = Mat64::from_bitmatrix(&a).unwrap();
        let bm = Mat64::from_bitmatrix(&b).unwrap();
        assert_eq!(am.compose(&bm).to_bitmatrix(), a.mul(&b).unwrap());
        assert_eq!(am.transpose().to_bitmatrix(), a.transpose());
    }

    #[test]
    fn inverse_round_trip() {
        let a = Mat64::from_bitmatrix(&BitMatrix::parse_rows("110\n011\n001").unwrap()).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).is_identity());
        assert!(inv.compose(&a).is_identity());
        let singular = Mat64::from_cols(vec![coord_bit(0), coord_bit(0), coord_bit(2)]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn polynomial_evaluation() {
        let a = Mat64::from_bitmatrix(&BitMatrix::parse_rows("01\n11").unwrap()).unwrap();
        // characteristic polynomial x^2 + x + 1 annihilates a
        assert!(a.eval_poly(0b111).is_zero());
        assert_eq!(a.eval_poly(0b10), a);
    }
}

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Mask for coordinate `i` inside its word. Coordinates are packed
/// most-significant-bit first, so comparing packed words numerically is the
/// same as comparing coordinate tuples lexicographically with coordinate 0
/// weighing most.
#[inline]
pub const fn coord_bit(i: usize) -> u64 {
    1u64 << (63 - (i & 63))
}

#[inline]
pub(crate) const fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// Mask selecting the first `len` coordinates of a single word.
#[inline]
pub const fn prefix_mask(len: usize) -> u64 {
    if len == 0 {
        0
    } else if len >= 64 {
        u64::MAX
    } else {
        !(u64::MAX >> len)
    }
}

/// Iterate over the coordinates set in a single packed word, in increasing order.
#[inline]
pub fn ones64(mut w: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let i = w.leading_zeros() as usize;
            w &= !coord_bit(i);
            Some(i)
        }
    })
}

/// A coordinate vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        let mut v = Self::zeros(len);
        v.set(i, true)?;
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.words[i / 64] |= coord_bit(i);
            }
        }
        v
    }

    /// Builds a vector from 0/1 entries; any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.words[i / 64] |= coord_bit(i);
            }
        }
        v
    }

    /// Single-word vector; bits beyond `len` are dropped.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64, "from_word needs len <= 64");
        let mut words = vec![0; words_for(len)];
        if len > 0 {
            words[0] = word & prefix_mask(len);
        }
        Self { len, words }
    }

    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= prefix_mask(len % 64);
            }
        }
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The packed first word. Only meaningful when `len <= 64`.
    pub fn word(&self) -> u64 {
        debug_assert!(self.len <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn get(&self, i: usize) -> Result<bool> {
        self.check(i)?;
        Ok(self.words[i / 64] & coord_bit(i) != 0)
    }

    pub fn set(&mut self, i: usize, value: bool) -> Result<()> {
        self.check(i)?;
        if value {
            self.words[i / 64] |= coord_bit(i);
        } else {
            self.words[i / 64] &= !coord_bit(i);
        }
        Ok(())
    }

    pub fn flip(&mut self, i: usize) -> Result<()> {
        self.check(i)?;
        self.words[i / 64] ^= coord_bit(i);
        Ok(())
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.len {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.len,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Sum over GF(2).
    pub fn xor(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.xor_assign(other)?;
        Ok(out)
    }

    pub fn xor_assign(&mut self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones & 1 == 1)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| ones64(w).map(move |i| k * 64 + i))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len)
            .map(|i| u8::from(self.words[i / 64] & coord_bit(i) != 0))
            .collect()
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.len {
            if i > 0 {
                f.write_str(",")?;
            }
            let b = self.words[i / 64] & coord_bit(i) != 0;
            f.write_str(if b { "1" } else { "0" })?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"101"`, `"1 0 1"` or `"(1,0,1)"`.
impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::new();
        for c in s.chars() {
            match c {
                '0' | '.' => bits.push(0u8),
                '1' => bits.push(1u8),
                ' ' | ',' | '(' | ')' | '[' | ']' | '\t' => {}
                other => {
                    let mut msg = String::from("unexpected character ");
                    msg.push(other);
                    return Err(Error::Parse(msg));
                }
            }
        }
        Ok(Self::from_bits(&bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn access_out_of_range_is_an_error() {
        let mut v = BitVector::zeros(3);
        assert!(v.get(3).is_err());
        assert!(v.set(5, true).is_err());
        assert!(v.get(2).is_ok());
    }

    #[test]
    fn self_sum_is_zero() {
        let v: BitVector = "(1,0,1,1,0,0,1)".parse().unwrap();
        assert!(v.xor(&v).unwrap().is_zero());
    }

    #[test]
    fn packing_is_most_significant_first() {
        let a: BitVector = "001".parse().unwrap();
        let b: BitVector = "010".parse().unwrap();
        let c: BitVector = "110".parse().unwrap();
        assert!(a < b && b < c);
        assert_eq!(a.word(), coord_bit(2));
    }

    #[test]
    fn multiword_vectors() {
        let mut v = BitVector::zeros(130);
        v.set(0, true).unwrap();
        v.set(129, true).unwrap();
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(v.leading(), Some(0));
        assert_eq!(v.weight(), 2);
        let w = BitVector::unit(130, 64).unwrap();
        assert!(!v.dot(&w).unwrap());
        assert!(v.xor(&BitVector::zeros(3)).is_err());
    }

    #[test]
    fn display_matches_coordinate_notation() {
        let v = BitVector::from_bits(&[1, 0, 1]);
        assert_eq!(alloc::format!("{v}"), "(1,0,1)");
    }
}

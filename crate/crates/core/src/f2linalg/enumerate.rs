use alloc::vec::Vec;

use super::subspace::Subspace;
use super::vector::coord_bit;
use crate::error::{Error, Result};

/// All `k`-dimensional subspaces of `GF(2)^n`, each exactly once.
///
/// Order: pivot sets in lexicographic order, then free entries counting up.
pub fn enumerate_subspaces(n: usize, k: usize) -> Result<SubspaceIter> {
    if k > n {
        return Err(Error::InvalidSubspaceDimension { n, k });
    }
    if n > 64 {
        return Err(Error::DimensionTooLarge { dim: n, max: 64 });
    }
    let mut it = SubspaceIter {
        n,
        k,
        pivots: (0..k).collect(),
        free: Vec::new(),
        counter: 0,
        done: false,
    };
    it.load_free();
    Ok(it)
}

pub struct SubspaceIter {
    n: usize,
    k: usize,
    pivots: Vec<usize>,
    /// (row, column) entries that are free for the current pivot set.
    free: Vec<(usize, usize)>,
    counter: u64,
    done: bool,
}

impl SubspaceIter {
    fn load_free(&mut self) {
        self.free.clear();
        let mut is_pivot = [false; 64];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for (r, &p) in self.pivots.iter().enumerate() {
            for (c, &piv) in is_pivot.iter().enumerate().take(self.n).skip(p + 1) {
                if !piv {
                    self.free.push((r, c));
                }
            }
        }
        self.counter = 0;
    }

    fn advance_pivots(&mut self) -> bool {
        let (n, k) = (self.n, self.k);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                self.load_free();
                return true;
            }
        }
        false
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        if self
            .counter
            .checked_shr(self.free.len() as u32)
            .unwrap_or(0)
            != 0
            && !self.advance_pivots()
        {
            self.done = true;
            return None;
        }
        let mut rows: Vec<u64> = self.pivots.iter().map(|&p| coord_bit(p)).collect();
        for (bit, &(r, c)) in self.free.iter().enumerate() {
            if self.counter.checked_shr(bit as u32).unwrap_or(0) & 1 == 1 {
                rows[r] |= coord_bit(c);
            }
        }
        self.counter += 1;
        Some(Subspace::from_rref_words64(self.n, rows))
    }
}

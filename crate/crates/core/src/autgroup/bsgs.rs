//! Schreier-Sims for matrix groups acting on vectors.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, Mat64};

#[derive(Clone, Debug)]
struct Level {
    point: u64,
    gens: Vec<Mat64>,
    /// orbit point -> index into `reps`
    index: HashMap<u64, usize>,
    points: Vec<u64>,
    /// `reps[k]` maps `point` to `points[k]`; `rep_invs[k]` is its inverse.
    reps: Vec<Mat64>,
    rep_invs: Vec<Mat64>,
}

impl Level {
    fn new(n: usize, point: u64) -> Self {
        let mut index = HashMap::new();
        index.insert(point, 0);
        Self {
            point,
            gens: Vec::new(),
            index,
            points: alloc::vec![point],
            reps: alloc::vec![Mat64::identity(n)],
            rep_invs: alloc::vec![Mat64::identity(n)],
        }
    }

    fn add_gen(&mut self, g: Mat64) {
        self.gens.push(g);
        // the new generator on old points, every generator on new points
        let gi = self.gens.len() - 1;
        let old = self.points.len();
        let mut k = 0;
        while k < self.points.len() {
            let lo = if k < old { gi } else { 0 };
            for s in lo..self.gens.len() {
                let q = self.gens[s].apply(self.points[k]);
                if !self.index.contains_key(&q) {
                    let rep = self.gens[s].compose(&self.reps[k]);
                    self.index.insert(q, self.points.len());
                    self.points.push(q);
                    self.rep_invs
                        .push(rep.inverse().expect("group elements are invertible"));
                    self.reps.push(rep);
                }
            }
            k += 1;
        }
    }
}

/// A base and strong generating set for a group of invertible `n x n` matrices.
#[derive(Clone, Debug)]
pub struct Bsgs {
    n: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(n: usize, gens: &[Mat64]) -> Self {
        let mut b = Self {
            n,
            levels: Vec::new(),
        };
        for g in gens {
            b.add_generator(g.clone());
        }
        b
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Strips `g` through the levels from `from`; returns the residue and the
    /// level at which it stopped (`levels.len()` when it passed all levels).
    fn sift(&self, mut g: Mat64, from: usize) -> (Mat64, usize) {
        for (i, lev) in self.levels.iter().enumerate().skip(from) {
            let p = g.apply(lev.point);
            let Some(&k) = lev.index.get(&p) else {
                return (g, i);
            };
            g = lev.rep_invs[k].compose(&g);
        }
        let len = self.levels.len();
        (g, len)
    }

    pub fn contains(&self, g: &Mat64) -> bool {
        g.n() == self.n && self.sift(g.clone(), 0).0.is_identity()
    }

    /// Adds `g` to the group; returns false when it was already a member.
    pub fn add_generator(&mut self, g: Mat64) -> bool {
        let (res, j) = self.sift(g, 0);
        if res.is_identity() {
            return false;
        }
        self.install(res, 0, j);
        self.complete(j);
        true
    }

    fn install(&mut self, res: Mat64, from: usize, j: usize) {
        if j == self.levels.len() {
            let t = (0..self.n)
                .find(|&t| res.col(t) != coord_bit(t))
                .expect("non-identity moves a unit vector");
            self.levels.push(Level::new(self.n, coord_bit(t)));
        }
        for l in from..=j {
            self.levels[l].add_gen(res.clone());
        }
    }

    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'levels: while i >= 0 {
            let iu = i as usize;
            let npoints = self.levels[iu].points.len();
            let ngens = self.levels[iu].gens.len();
            for k in 0..npoints {
                for s in 0..ngens {
                    let lev = &self.levels[iu];
                    let img = lev.gens[s].apply(lev.points[k]);
                    let kk = lev.index[&img];
                    let h = lev.rep_invs[kk].compose(&lev.gens[s].compose(&lev.reps[k]));
                    let (res, j) = self.sift(h, iu + 1);
                    if !res.is_identity() {
                        self.install(res, iu + 1, j);
                        i = j as isize;
                        continue 'levels;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> Result<u128> {
        self.levels.iter().try_fold(1u128, |acc, l| {
            acc.checked_mul(l.points.len() as u128)
                .ok_or(Error::Overflow("group order"))
        })
    }

    pub fn base(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.points.len()).collect()
    }

    /// Strong generators (the generators of the first level).
    pub fn strong_generators(&self) -> Vec<Mat64> {
        self.levels
            .first()
            .map(|l| l.gens.clone())
            .unwrap_or_default()
    }

    /// All elements, for small groups.
    pub fn elements(&self, limit: usize) -> Result<Vec<Mat64>> {
        let order = self.order()?;
        if order > limit as u128 {
            return Err(Error::SearchTooLarge { dim: self.n });
        }
        let mut out = alloc::vec![Mat64::identity(self.n)];
        for lev in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lev.reps.len());
            for r in &lev.reps {
                for g in &out {
                    next.push(r.compose(g));
                }
            }
            out = next;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2linalg::BitMatrix;
    use alloc::vec;

    fn m(rows: &str) -> Mat64 {
        Mat64::from_bitmatrix(&BitMatrix::parse_rows(rows).unwrap()).unwrap()
    }

    fn gl_order(n: u32) -> u128 {
        (0..n).map(|i| (1u128 << n) - (1u128 << i)).product()
    }

    fn all_invertible(n: usize) -> Vec<Mat64> {
        let total = 1u64 << (n * n);
        let mut out = Vec::new();
        for code in 0..total {
            let cols: Vec<u64> = (0..n)
                .map(|j| ((code >> (j * n)) & ((1 << n) - 1)) << (64 - n))
                .collect();
            let g = Mat64::from_cols(cols);
            if g.rank() == n {
                out.push(g);
            }
        }
        out
    }

    #[test]
    fn general_linear_groups() {
        // transvection and cyclic shift generate GL(n, 2)
        for n in 2..=5usize {
            let mut t = Mat64::identity(n).cols().to_vec();
            t[1] ^= coord_bit(0);
            let shift: Vec<u64> = (0..n).map(|j| coord_bit((j + 1) % n)).collect();
            let b = Bsgs::new(n, &[Mat64::from_cols(t), Mat64::from_cols(shift)]);
            assert_eq!(b.order().unwrap(), gl_order(n as u32), "n = {n}");
        }
        assert_eq!(all_invertible(3).len() as u128, gl_order(3));
    }

    #[test]
    fn membership_and_elements() {
        let a = m("110\n010\n001");
        let b = Bsgs::new(3, core::slice::from_ref(&a));
        assert_eq!(b.order().unwrap(), 2);
        assert!(b.contains(&a));
        assert!(b.contains(&Mat64::identity(3)));
        assert!(!b.contains(&m("100\n011\n001")));
        let els = b.elements(10).unwrap();
        assert_eq!(els.len(), 2);
        let trivial = Bsgs::new(3, &[]);
        assert_eq!(trivial.order().unwrap(), 1);
    }

    #[test]
    fn order_matches_enumeration_for_random_subgroups() {
        let all = all_invertible(3);
        let mut seed = 12345u64;
        for _ in 0..30 {
            let gens: Vec<Mat64> = (0..2)
                .map(|_| {
                    seed = seed
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    all[(seed >> 33) as usize % all.len()].clone()
                })
                .collect();
            // closure by brute force
            let mut elems = vec![Mat64::identity(3)];
            let mut k = 0;
            while k < elems.len() {
                for g in &gens {
                    let h = g.compose(&elems[k]);
                    if !elems.contains(&h) {
                        elems.push(h);
                    }
                }
                k += 1;
            }
            let b = Bsgs::new(3, &gens);
            assert_eq!(b.order().unwrap(), elems.len() as u128);
            assert!(all.iter().all(|g| b.contains(g) == elems.contains(g)));
        }
    }
}

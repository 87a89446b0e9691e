//! Automorphism groups as matrix groups, and orbits of such groups on
//! vectors and subspaces.

mod bsgs;
mod orbit;
mod search;

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, BitMatrix, Mat64, Subspace};
use crate::lie::LieAlgebra;

pub use bsgs::Bsgs;
pub use orbit::{Action, Orbit, OrbitRecord};
pub use search::{
    automorphism_group, fingerprints, isomorphism, Fingerprint, IsoCertificate, MAX_SEARCH_DIM,
};

/// A group of invertible `n x n` matrices given by generators.
#[derive(Clone, Debug)]
pub struct MatGroup {
    n: usize,
    gens: Vec<Mat64>,
    order: Option<u128>,
}

impl MatGroup {
    /// Fails with [`Error::Singular`] on a non-invertible generator.
    pub fn new(n: usize, gens: Vec<Mat64>) -> Result<Self> {
        for g in &gens {
            if g.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
            if g.rank() != n {
                return Err(Error::Singular);
            }
        }
        Ok(Self {
            n,
            gens,
            order: None,
        })
    }

    pub fn from_bitmatrices(n: usize, gens: &[BitMatrix]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(Mat64::from_bitmatrix)
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub(crate) fn with_known_order(n: usize, gens: Vec<Mat64>, order: u128) -> Self {
        Self {
            n,
            gens,
            order: Some(order),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::with_known_order(n, Vec::new(), 1)
    }

    /// `GL(n, 2)`, generated by a transvection and a cyclic shift of coordinates.
    pub fn general_linear(n: usize) -> Self {
        if n < 2 {
            return Self::trivial(n);
        }
        let mut t = Mat64::identity(n).cols().to_vec();
        t[1] ^= coord_bit(0);
        let shift = (0..n).map(|j| coord_bit((j + 1) % n)).collect();
        let order = (0..n as u32).map(|i| (1u128 << n) - (1u128 << i)).product();
        Self::with_known_order(
            n,
            alloc::vec![Mat64::from_cols(t), Mat64::from_cols(shift)],
            order,
        )
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Mat64] {
        &self.gens
    }

    pub fn generator_matrices(&self) -> Vec<BitMatrix> {
        self.gens.iter().map(Mat64::to_bitmatrix).collect()
    }

    pub fn bsgs(&self) -> Bsgs {
        Bsgs::new(self.n, &self.gens)
    }

    /// Exact order of the generated group.
    pub fn order(&self) -> Result<u128> {
        match self.order {
            Some(o) => Ok(o),
            None => self.bsgs().order(),
        }
    }

    pub fn contains(&self, g: &Mat64) -> bool {
        g.is_identity() || self.bsgs().contains(g)
    }

    /// Orbits on the nonzero vectors, in increasing order of their least
    /// member. Each record's representative is that least member.
    pub fn orbits_on_vectors(&self, budget: &Budget) -> Result<Vec<OrbitRecord<u64>>> {
        if self.n > 32 {
            return Err(Error::DimensionTooLarge {
                dim: self.n,
                max: 32,
            });
        }
        let n = self.n;
        let total = 1u64 << n;
        let mut seen = alloc::vec![0u64; (total as usize).div_ceil(64)];
        let mut out = Vec::new();
        for v in 1..total {
            if seen[(v >> 6) as usize] >> (v & 63) & 1 == 1 {
                continue;
            }
            let orbit = Orbit::compute(v << (64 - n), n, &self.gens, budget)?;
            for &p in orbit.points() {
                let q = p >> (64 - n);
                seen[(q >> 6) as usize] |= 1 << (q & 63);
            }
            out.push(OrbitRecord::from_orbit(orbit));
        }
        Ok(out)
    }

    /// Orbits on the 1-dimensional subspaces. Over GF(2) a line is its single
    /// nonzero vector, so these are the vector orbits.
    pub fn orbits_on_lines(&self, budget: &Budget) -> Result<Vec<OrbitRecord<Subspace>>> {
        let n = self.n;
        self.orbits_on_vectors(budget)?
            .into_iter()
            .map(|rec| {
                let line = Subspace::from_words64(n, &[rec.representative]);
                Orbit::compute(line, n, &self.gens, budget).map(OrbitRecord::from_orbit)
            })
            .collect()
    }

    /// The orbit of `x` and its stabilizer.
    pub fn orbit_and_stabilizer<T: Action>(
        &self,
        x: T,
        budget: &Budget,
    ) -> Result<(OrbitRecord<T>, MatGroup)> {
        let orbit = Orbit::compute(x, self.n, &self.gens, budget)?;
        let stab = self.stabilizer_from_orbit(&orbit, budget)?;
        Ok((OrbitRecord::from_orbit(orbit), stab))
    }

    /// Stabilizer of `orbit.root()` from Schreier generators, added until
    /// orbit length times stabilizer order reaches the group order.
    pub fn stabilizer_from_orbit<T: Action>(
        &self,
        orbit: &Orbit<T>,
        budget: &Budget,
    ) -> Result<MatGroup> {
        let order = self.order()?;
        let len = orbit.len() as u128;
        if len == 1 {
            return Ok(Self {
                n: self.n,
                gens: self.gens.clone(),
                order: Some(order),
            });
        }
        let target = order / len;
        let mut stab = Bsgs::new(self.n, &[]);
        let mut gens = Vec::new();
        let mut meter = budget.meter();
        let schreier = |p: usize, s: usize| -> Mat64 {
            let g = &self.gens[s];
            let q = orbit
                .position(&orbit.points()[p].act(g))
                .expect("orbit is closed");
            let up = orbit.element_to(p);
            let uq_inv = orbit
                .element_to(q)
                .inverse()
                .expect("group elements are invertible");
            uq_inv.compose(&g.compose(&up))
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x57ab);
        let mut misses = 0;
        while stab.order()? < target && misses < 64 {
            meter.tick()?;
            let p = rng.next_u64() as usize % orbit.len();
            let s = rng.next_u64() as usize % self.gens.len();
            let h = schreier(p, s);
            if stab.add_generator(h.clone()) {
                gens.push(h);
                misses = 0;
            } else {
                misses += 1;
            }
        }
        'sweep: for p in 0..orbit.len() {
            for s in 0..self.gens.len() {
                if stab.order()? >= target {
                    break 'sweep;
                }
                meter.tick()?;
                let h = schreier(p, s);
                if stab.add_generator(h.clone()) {
                    gens.push(h);
                }
            }
        }
        debug_assert_eq!(stab.order()?, target);
        Ok(Self {
            n: self.n,
            gens,
            order: Some(target),
        })
    }

    /// All elements, for groups of order at most `limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<Mat64>> {
        self.bsgs().elements(limit)
    }
}

/// True iff `g` is invertible and `g[b_i, b_j] = [g b_i, g b_j]` for all `i < j`.
pub fn is_automorphism(l: &LieAlgebra, g: &BitMatrix) -> Result<bool> {
    if g.rows() != l.dim() || g.cols() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: if g.rows() != l.dim() {
                g.rows()
            } else {
                g.cols()
            },
        });
    }
    Ok(is_automorphism_mat(l, &Mat64::from_bitmatrix(g)?))
}

pub(crate) fn is_automorphism_mat(l: &LieAlgebra, g: &Mat64) -> bool {
    let n = l.dim();
    if g.n() != n || g.rank() != n {
        return false;
    }
    (0..n).all(|i| {
        (i + 1..n).all(|j| g.apply(l.basis_bracket(i, j)) == l.bracket_words(g.col(i), g.col(j)))
    })
}

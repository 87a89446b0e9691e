//! Submodules of modules over GF(2) given by generating matrices.
//!
//! Irreducibility uses the Holt-Rees form of Norton's test: a random algebra
//! element `t`, an irreducible factor `f` of a minimal polynomial of `t`, and
//! spinning a vector of `ker f(t)` (and of its transpose) under the generators.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashSet;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, ones64, prefix_mask, BitMatrix, Echelon64, Mat64, Subspace};
use crate::poly::Gf2Poly;

/// Largest quotient dimension for which [`all_submodules`] enumerates coset
/// representatives.
pub const MAX_SUBMODULE_CODIM: usize = 22;

/// Smallest subspace of `GF(2)^dim` that contains `seeds` and is invariant
/// under every generator.
pub fn spin(gens: &[Mat64], dim: usize, seeds: &[u64]) -> Subspace {
    spin_from(gens, &Subspace::zero(dim), seeds)
}

/// Like [`spin`], for an invariant subspace `base` enlarged by `seeds`.
pub fn spin_from(gens: &[Mat64], base: &Subspace, seeds: &[u64]) -> Subspace {
    let dim = base.ambient_dim();
    let mask = prefix_mask(dim);
    let mut ech = Echelon64::new();
    for &r in base.rows64() {
        ech.insert(r);
    }
    let mut queue: Vec<u64> = Vec::new();
    for &s in seeds {
        if ech.residue(s & mask) != 0 {
            ech.insert(s & mask);
            queue.push(s & mask);
        }
    }
    while let Some(v) = queue.pop() {
        if ech.len() == dim {
            break;
        }
        for g in gens {
            let w = g.apply(v);
            if ech.residue(w) != 0 {
                ech.insert(w);
                queue.push(w);
            }
        }
    }
    ech.to_subspace(dim)
}

/// True when every generator maps `space` into itself.
pub fn is_invariant(gens: &[Mat64], space: &Subspace) -> bool {
    gens.iter().all(|g| {
        space
            .rows64()
            .iter()
            .all(|&v| space.contains_word(g.apply(v)))
    })
}

/// Outcome of an irreducibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    /// The zero module.
    Zero,
}

/// Decides irreducibility of the module spanned by `gens` on `GF(2)^dim`.
pub fn irreducibility(gens: &[Mat64], dim: usize) -> Irreducibility {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0fae);
    irreducibility_with(gens, dim, &mut rng)
}

pub fn is_irreducible(gens: &[Mat64], dim: usize) -> bool {
    irreducibility(gens, dim) == Irreducibility::Irreducible
}

pub fn irreducibility_with(gens: &[Mat64], dim: usize, rng: &mut impl RngCore) -> Irreducibility {
    if dim == 0 {
        return Irreducibility::Zero;
    }
    if dim == 1 {
        return Irreducibility::Irreducible;
    }
    if gens.is_empty() {
        return Irreducibility::Reducible(Subspace::from_words64(dim, &[coord_bit(0)]));
    }
    let transposed: Vec<Mat64> = gens.iter().map(Mat64::transpose).collect();
    let mask = prefix_mask(dim);
    let mut pool: Vec<Mat64> = gens.to_vec();
    for _ in 0..400 {
        let (a, b) = (
            rng.next_u32() as usize % pool.len(),
            rng.next_u32() as usize % pool.len(),
        );
        let prod = pool[a].compose(&pool[b]);
        if pool.len() < 24 {
            pool.push(prod);
        } else {
            let slot = rng.next_u32() as usize % pool.len();
            pool[slot] = prod;
        }
        let mut theta = Mat64::zero(dim);
        for m in &pool {
            if rng.next_u32() & 1 == 1 {
                theta.add_assign(m);
            }
        }
        let v = loop {
            let v = rng.next_u64() & mask;
            if v != 0 {
                break v;
            }
        };
        let minpoly = krylov_minpoly(&theta, v);
        for f in minpoly.irreducible_factors(rng) {
            let deg = f.degree().unwrap_or(0) as usize;
            let nf = theta.eval_poly(f.0).kernel();
            let v0 = nf.rows64()[0];
            let s = spin(gens, dim, &[v0]);
            if s.dim() < dim {
                return Irreducibility::Reducible(s);
            }
            let nft = theta.transpose().eval_poly(f.0).kernel();
            let w0 = nft.rows64()[0];
            let st = spin(&transposed, dim, &[w0]);
            if st.dim() < dim {
                return Irreducibility::Reducible(annihilator(&st));
            }
            if nf.dim() == deg {
                return Irreducibility::Irreducible;
            }
        }
    }
    // exhaustive fallback; unreachable in practice
    let mut v = 1u64;
    while v < (1u64 << dim.min(63)) {
        let s = spin(gens, dim, &[v << (64 - dim)]);
        if s.dim() < dim {
            return Irreducibility::Reducible(s);
        }
        v += 1;
    }
    Irreducibility::Irreducible
}

/// Minimal polynomial of `theta` relative to the vector `v`.
fn krylov_minpoly(theta: &Mat64, v: u64) -> Gf2Poly {
    let mut ech = Echelon64::new();
    let mut w = v;
    let mut k = 0u32;
    loop {
        if let Some(combo) = ech.coords(w) {
            let mut p = 1u128 << k;
            for i in ones64(combo) {
                p |= 1u128 << i;
            }
            return Gf2Poly(p);
        }
        ech.insert(w);
        w = theta.apply(w);
        k += 1;
    }
}

/// `{ x : <u, x> = 0 for all u in s }`.
pub fn annihilator(s: &Subspace) -> Subspace {
    let n = s.ambient_dim();
    BitMatrix::from_row_words(s.dim(), n, s.rows64()).kernel()
}

/// Every invariant subspace of `GF(2)^dim` that contains `base`, which must
/// itself be invariant. Sorted by dimension, then canonical basis.
///
/// Fails with [`Error::TooManySubmodules`] when more than `limit` exist, and
/// with [`Error::SearchTooLarge`] when a quotient is too large to scan.
pub fn submodules_above(gens: &[Mat64], base: &Subspace, limit: usize) -> Result<Vec<Subspace>> {
    let mut found: HashSet<Subspace> = HashSet::new();
    let mut queue = VecDeque::new();
    found.insert(base.clone());
    queue.push_back(base.clone());
    while let Some(w) = queue.pop_front() {
        let free = w.complement_coords();
        if free.len() > MAX_SUBMODULE_CODIM {
            return Err(Error::SearchTooLarge { dim: free.len() });
        }
        let units: Vec<u64> = free.iter().map(|&c| coord_bit(c)).collect();
        // Gray code over the coset representatives
        let mut v = 0u64;
        for step in 1u64..(1u64 << units.len()) {
            v ^= units[step.trailing_zeros() as usize];
            let x = spin_from(gens, &w, &[v]);
            if !found.contains(&x) {
                if found.len() >= limit {
                    return Err(Error::TooManySubmodules { limit });
                }
                found.insert(x.clone());
                queue.push_back(x);
            }
        }
    }
    let mut out: Vec<Subspace> = found.into_iter().collect();
    out.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.rows64().cmp(b.rows64()))
    });
    Ok(out)
}

/// Every invariant subspace of `GF(2)^dim`, including `0` and the whole space.
pub fn all_submodules(gens: &[Mat64], dim: usize, limit: usize) -> Result<Vec<Subspace>> {
    submodules_above(gens, &Subspace::zero(dim), limit)
}

/// The minimal nonzero members of a list of subspaces.
pub fn minimal_nonzero(spaces: &[Subspace]) -> Vec<Subspace> {
    let nonzero: Vec<&Subspace> = spaces.iter().filter(|s| !s.is_zero()).collect();
    nonzero
        .iter()
        .filter(|s| {
            !nonzero
                .iter()
                .any(|t| t.dim() < s.dim() && s.contains_subspace(t))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// The maximal proper members of a list of subspaces of `GF(2)^dim`.
pub fn maximal_proper(spaces: &[Subspace]) -> Vec<Subspace> {
    let proper: Vec<&Subspace> = spaces.iter().filter(|s| !s.is_full()).collect();
    proper
        .iter()
        .filter(|s| {
            !proper
                .iter()
                .any(|t| t.dim() > s.dim() && t.contains_subspace(s))
        })
        .map(|s| (*s).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn brute_force_irreducible(gens: &[Mat64], dim: usize) -> bool {
        (1u64..1 << dim).all(|v| spin(gens, dim, &[v << (64 - dim)]).dim() == dim)
    }

    fn mat(rows: &str) -> Mat64 {
        Mat64::from_bitmatrix(&BitMatrix::parse_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn companion_matrix_of_irreducible_polynomial_is_irreducible() {
        // companion of x^3 + x + 1
        let c = mat("001\n101\n010");
        assert!(is_irreducible(core::slice::from_ref(&c), 3));
        assert!(brute_force_irreducible(&[c], 3));
    }

    #[test]
    fn triangular_action_is_reducible() {
        let u = mat("110\n011\n001");
        match irreducibility(core::slice::from_ref(&u), 3) {
            Irreducibility::Reducible(s) => {
                assert!(s.dim() > 0 && s.dim() < 3);
                assert!(is_invariant(&[u], &s));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn random_modules_agree_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in 2..=6 {
            for _ in 0..40 {
                let ngens = 1 + rng.next_u32() as usize % 2;
                let gens: Vec<Mat64> = (0..ngens)
                    .map(|_| {
                        Mat64::from_cols(
                            (0..dim)
                                .map(|_| rng.next_u64() & prefix_mask(dim))
                                .collect(),
                        )
                    })
                    .collect();
                assert_eq!(
                    is_irreducible(&gens, dim),
                    brute_force_irreducible(&gens, dim),
                    "{gens:?}"
                );
            }
        }
    }

    #[test]
    fn submodules_of_trivial_action_are_all_subspaces() {
        // identity action on GF(2)^3: 1 + 7 + 7 + 1 subspaces
        let subs = all_submodules(&[Mat64::identity(3)], 3, 100).unwrap();
        assert_eq!(subs.len(), 16);
        assert!(matches!(
            all_submodules(&[Mat64::identity(3)], 3, 10),
            Err(Error::TooManySubmodules { limit: 10 })
        ));
    }

    #[test]
    fn submodules_of_a_jordan_block_form_a_chain() {
        let j = mat("1100\n0110\n0011\n0001");
        let subs = all_submodules(&[j], 4, 100).unwrap();
        assert_eq!(
            subs.iter().map(Subspace::dim).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(minimal_nonzero(&subs).len(), 1);
        assert_eq!(maximal_proper(&subs).len(), 1);
    }
}

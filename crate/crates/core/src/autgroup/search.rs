//! Backtrack search for automorphisms and isomorphisms.
//!
//! A map is fixed by the images of a small generating set of the algebra.
//! Candidate images are restricted to elements with the same fingerprint
//! (ranks of polynomials in `ad x`, membership in the derived algebra and the
//! centre). A partial map is kept as the span of its graph in `L + L'`, closed
//! under brackets, so any inconsistency shows up as soon as it is forced.

use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{is_automorphism_mat, MatGroup, Orbit};
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, BitMatrix, Echelon64, Mat64, Subspace};
use crate::lie::LieAlgebra;

/// Largest dimension handled by the search (fingerprints cover all `2^n`
/// elements).
pub const MAX_SEARCH_DIM: usize = 24;

/// Invariant of an element under automorphisms.
pub type Fingerprint = u32;

#[inline]
fn index_of(x: u64, n: usize) -> usize {
    if n == 0 {
        0
    } else {
        (x >> (64 - n)) as usize
    }
}

fn fingerprint(a: &Mat64, in_derived: bool, central: bool) -> Fingerprint {
    let a2 = a.square();
    let a3 = a2.compose(a);
    let ranks = [
        a.rank(),
        a2.rank(),
        a3.rank(),
        a.add_identity().rank(),
        a2.add_identity().rank(),
        a2.add(a).add_identity().rank(),
    ];
    let mut fp = ranks.iter().fold(0u32, |acc, &r| acc << 5 | r as u32);
    fp = fp << 1 | in_derived as u32;
    fp << 1 | central as u32
}

/// Fingerprints of all `2^n` elements, indexed by the element read as an
/// `n`-bit integer (coordinate 0 most significant).
pub fn fingerprints(l: &LieAlgebra) -> Result<Vec<Fingerprint>> {
    let n = l.dim();
    if n > MAX_SEARCH_DIM {
        return Err(Error::DimensionTooLarge {
            dim: n,
            max: MAX_SEARCH_DIM,
        });
    }
    let derived = l.derived_algebra();
    let center = l.center();
    let ads: Vec<Mat64> = (0..n).map(|i| l.ad_basis(i)).collect();
    let mut out = alloc::vec![0u32; 1 << n];
    let mut x = 0u64;
    let mut ad = Mat64::zero(n);
    out[0] = fingerprint(&ad, true, true);
    for step in 1u64..1 << n {
        let k = step.trailing_zeros() as usize;
        // flipping bit k of the Gray code flips coordinate n-1-k
        let c = n - 1 - k;
        x ^= coord_bit(c);
        ad.add_assign(&ads[c]);
        out[index_of(x, n)] = fingerprint(&ad, derived.contains_word(x), center.contains_word(x));
    }
    Ok(out)
}

/// Result of an isomorphism test: the map when the algebras are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    map: Option<Mat64>,
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        self.map.is_some()
    }

    /// Matrix carrying the basis of the first algebra to the second.
    pub fn matrix(&self) -> Option<BitMatrix> {
        self.map.as_ref().map(Mat64::to_bitmatrix)
    }

    pub fn map(&self) -> Option<&Mat64> {
        self.map.as_ref()
    }
}

/// Graph of a partial injective homomorphism, closed under brackets.
#[derive(Clone)]
struct Partial {
    n: usize,
    graph: Echelon64,
    image: Echelon64,
    pairs: Vec<(u64, u64)>,
}

impl Partial {
    fn new(n: usize) -> Self {
        Self {
            n,
            graph: Echelon64::new(),
            image: Echelon64::new(),
            pairs: Vec::new(),
        }
    }

    fn x_mask(&self) -> u64 {
        if self.n == 0 {
            0
        } else {
            !0u64 << (64 - self.n)
        }
    }

    /// Adds `x -> y` and everything it forces; false on contradiction.
    fn add(&mut self, x: u64, y: u64, s: &Side<'_>, t: &Side<'_>) -> bool {
        let mut queue = alloc::vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            let r = self.graph.residue(x | y >> self.n);
            if r == 0 {
                continue;
            }
            if r & self.x_mask() == 0 {
                return false;
            }
            if s.fp(x) != t.fp(y) || !self.image.insert(y) {
                return false;
            }
            self.graph.insert(x | y >> self.n);
            for &(a, b) in &self.pairs {
                queue.push((s.alg.bracket_words(x, a), t.alg.bracket_words(y, b)));
            }
            self.pairs.push((x, y));
        }
        true
    }

    /// Image of `x`, which must lie in the domain.
    fn image_of(&self, x: u64) -> u64 {
        let r = self.graph.residue(x);
        debug_assert_eq!(r & self.x_mask(), 0);
        r << self.n
    }

    fn is_total(&self) -> bool {
        self.graph.len() == self.n
    }

    fn to_matrix(&self) -> Mat64 {
        Mat64::from_cols((0..self.n).map(|t| self.image_of(coord_bit(t))).collect())
    }
}

struct Side<'a> {
    alg: &'a LieAlgebra,
    fps: Vec<Fingerprint>,
}

impl<'a> Side<'a> {
    fn new(alg: &'a LieAlgebra) -> Result<Self> {
        Ok(Self {
            alg,
            fps: fingerprints(alg)?,
        })
    }

    #[inline]
    fn fp(&self, x: u64) -> Fingerprint {
        self.fps[index_of(x, self.alg.dim())]
    }

    /// Elements grouped by fingerprint, each class in increasing order.
    fn classes(&self) -> HashMap<Fingerprint, Vec<u64>> {
        let n = self.alg.dim();
        let mut out: HashMap<Fingerprint, Vec<u64>> = HashMap::new();
        for (i, &f) in self.fps.iter().enumerate().skip(1) {
            out.entry(f).or_default().push((i as u64) << (64 - n));
        }
        out
    }
}

/// A generating set chosen greedily from the smallest fingerprint classes.
fn generators(side: &Side<'_>, classes: &HashMap<Fingerprint, Vec<u64>>) -> Vec<u64> {
    let n = side.alg.dim();
    let mut order: Vec<(&Fingerprint, &Vec<u64>)> = classes.iter().collect();
    order.sort_by_key(|(f, c)| (c.len(), **f));
    let mut gens = Vec::new();
    let mut span = Subspace::zero(n);
    while !span.is_full() {
        let g = order
            .iter()
            .flat_map(|(_, c)| c.iter())
            .copied()
            .find(|&x| !span.contains_word(x))
            .expect("elements outside a proper subalgebra exist");
        gens.push(g);
        span = side.alg.closure_over(&span, &[g]);
    }
    gens
}

struct Search<'a> {
    src: Side<'a>,
    dst: Side<'a>,
    dst_classes: HashMap<Fingerprint, Vec<u64>>,
    gens: Vec<u64>,
}

impl Search<'_> {
    /// Extends `state` (which maps `gens[..k]` to `images`) to a total map.
    fn extend(
        &self,
        state: &Partial,
        images: &mut Vec<u64>,
        meter: &mut Meter<'_>,
    ) -> Result<Option<Mat64>> {
        let k = images.len();
        if k == self.gens.len() {
            debug_assert!(state.is_total());
            return Ok(Some(state.to_matrix()));
        }
        let g = self.gens[k];
        let Some(cands) = self.dst_classes.get(&self.src.fp(g)) else {
            return Ok(None);
        };
        for &c in cands {
            meter.tick()?;
            if let Some(m) = self.try_image(state, images, c, meter)? {
                return Ok(Some(m));
            }
        }
        Ok(None)
    }

    fn try_image(
        &self,
        state: &Partial,
        images: &mut Vec<u64>,
        c: u64,
        meter: &mut Meter<'_>,
    ) -> Result<Option<Mat64>> {
        let g = self.gens[images.len()];
        let sums_agree = self
            .gens
            .iter()
            .zip(images.iter())
            .all(|(&gi, &ci)| self.src.fp(gi ^ g) == self.dst.fp(ci ^ c));
        if !sums_agree {
            return Ok(None);
        }
        let mut next = state.clone();
        if !next.add(g, c, &self.src, &self.dst) {
            return Ok(None);
        }
        images.push(c);
        let found = self.extend(&next, images, meter);
        images.pop();
        found
    }
}

/// The full automorphism group of `l`.
///
/// Fails with [`Error::BudgetExceeded`] (or [`Error::Interrupted`]) when the
/// search does not finish within `budget`.
pub fn automorphism_group(l: &LieAlgebra, budget: &Budget) -> Result<MatGroup> {
    let n = l.dim();
    if l.is_abelian() {
        return Ok(MatGroup::general_linear(n));
    }
    let src = Side::new(l)?;
    let dst = Side::new(l)?;
    let dst_classes = dst.classes();
    let gens = generators(&src, &dst_classes);
    let search = Search {
        src,
        dst,
        dst_classes,
        gens,
    };
    let mut meter = budget.meter();
    let m = search.gens.len();
    let mut found: Vec<Mat64> = Vec::new();
    let mut order = 1u128;
    // stabilizer chain of the generator tuple, from the innermost level out
    for k in (0..m).rev() {
        let mut base = Partial::new(n);
        for &g in &search.gens[..k] {
            let ok = base.add(g, g, &search.src, &search.dst);
            debug_assert!(ok);
        }
        let mut images: Vec<u64> = search.gens[..k].to_vec();
        let g = search.gens[k];
        let mut orbit = Orbit::compute(g, n, &found, budget)?;
        let cands = search.dst_classes[&search.src.fp(g)].clone();
        for c in cands {
            if orbit.contains(&c) {
                continue;
            }
            meter.tick()?;
            if let Some(phi) = search.try_image(&base, &mut images, c, &mut meter)? {
                if !is_automorphism_mat(l, &phi) {
                    return Err(Error::NotAutomorphism);
                }
                found.push(phi);
                orbit = Orbit::compute(g, n, &found, budget)?;
                budget.report("automorphisms", found.len() as u64);
            }
        }
        order = order
            .checked_mul(orbit.len() as u128)
            .ok_or(Error::Overflow("group order"))?;
    }
    Ok(MatGroup::with_known_order(n, found, order))
}

/// Searches for an isomorphism `a -> b`.
pub fn isomorphism(a: &LieAlgebra, b: &LieAlgebra, budget: &Budget) -> Result<IsoCertificate> {
    let none = IsoCertificate { map: None };
    let n = a.dim();
    if n != b.dim() {
        return Ok(none);
    }
    if a.is_abelian() || b.is_abelian() {
        let map = (a.is_abelian() && b.is_abelian()).then(|| Mat64::identity(n));
        return Ok(IsoCertificate { map });
    }
    let src = Side::new(a)?;
    let dst = Side::new(b)?;
    let mut fa = src.fps.clone();
    let mut fb = dst.fps.clone();
    fa.sort_unstable();
    fb.sort_unstable();
    if fa != fb {
        return Ok(none);
    }
    let dst_classes = dst.classes();
    let src_classes = src.classes();
    let gens = generators(&src, &src_classes);
    let search = Search {
        src,
        dst,
        dst_classes,
        gens,
    };
    let mut meter = budget.meter();
    let map = search.extend(&Partial::new(n), &mut Vec::new(), &mut meter)?;
    if let Some(phi) = &map {
        let ok = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                phi.apply(a.basis_bracket(i, j)) == b.bracket_words(phi.col(i), phi.col(j))
            })
        });
        if !ok || phi.rank() != n {
            return Err(Error::NotAutomorphism);
        }
    }
    Ok(IsoCertificate { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tests::l31;

    #[test]
    fn fingerprints_are_invariant() {
        let l = l31();
        let fps = fingerprints(&l).unwrap();
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        for g in a.elements(10).unwrap() {
            for x in 0u64..8 {
                let y = g.apply(x << 61) >> 61;
                assert_eq!(fps[x as usize], fps[y as usize]);
            }
        }
    }

    #[test]
    fn tensor_extension_automorphisms() {
        // Aut(L ⊗ GF(4)) contains Aut(L) and the Frobenius twist
        let l = l31().tensor_extend(2).unwrap();
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        for g in a.generators() {
            assert!(is_automorphism_mat(&l, g));
        }
        let order = a.order().unwrap();
        assert_eq!(a.bsgs().order().unwrap(), order);
        assert_eq!(order % 12, 0);
    }

    #[test]
    fn isomorphism_of_transported_algebra() {
        let l = l31().tensor_extend(2).unwrap();
        let g = Mat64::from_cols(
            (0..6)
                .map(|j| coord_bit((j + 2) % 6) | coord_bit(0))
                .collect(),
        );
        assert_eq!(g.rank(), 6);
        let m = l.transport(&g).unwrap();
        let cert = isomorphism(&l, &m, &Budget::default()).unwrap();
        assert!(cert.is_isomorphic());
        let abelian = LieAlgebra::abelian(3);
        assert!(!isomorphism(&l31(), &abelian, &Budget::default())
            .unwrap()
            .is_isomorphic());
        assert!(isomorphism(&l31(), &l31(), &Budget::default())
            .unwrap()
            .is_isomorphic());
        assert!(!isomorphism(&l31(), &l, &Budget::default())
            .unwrap()
            .is_isomorphic());
    }

    #[test]
    fn budget_is_respected() {
        let l = l31().tensor_extend(2).unwrap();
        let err = automorphism_group(&l, &Budget::default().with_nodes(2)).unwrap_err();
        assert!(err.is_budget());
    }
}

//! Z2-gradings from idempotents and their superizations.
//!
//! An idempotent is an `l` with `ad(l)^2 = ad(l)`; its eigenspaces for 0 and 1
//! form a grading. The superization of a centreless graded algebra is
//! `S = ad(L) + C` inside `End(L)`, where `C` is spanned by the squares
//! `ad(x)^2` of odd elements, and `s(x) = ad(x)^2` is the squaring.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::autgroup::{MatGroup, Orbit};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, ones64, prefix_mask, BitVector, Echelon64, Mat64, Subspace};
use crate::lie::{LieAlgebra, MatrixSpan};
use crate::meataxe;

/// Default largest dimension for the exhaustive idempotent scan.
pub const DEFAULT_IDEMPOTENT_BOUND: usize = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Idempotent {
    /// Packed coordinates.
    pub element: u64,
    pub central: bool,
}

impl Idempotent {
    pub fn vector(&self, n: usize) -> BitVector {
        BitVector::from_word(n, self.element)
    }
}

/// Every `x` with `ad(x)^2 = ad(x)`, in increasing packed order.
pub fn find_idempotents(l: &LieAlgebra) -> Result<Vec<Idempotent>> {
    find_idempotents_bounded(l, DEFAULT_IDEMPOTENT_BOUND)
}

pub fn find_idempotents_bounded(l: &LieAlgebra, bound: usize) -> Result<Vec<Idempotent>> {
    let n = l.dim();
    if n > bound || n > 63 {
        return Err(Error::SearchTooLarge { dim: n });
    }
    let ads: Vec<Mat64> = (0..n).map(|i| l.ad_basis(i)).collect();
    let mut out = alloc::vec![Idempotent {
        element: 0,
        central: true
    }];
    let mut ad = Mat64::zero(n);
    let mut x = 0u64;
    for step in 1u64..1 << n {
        let c = n - 1 - step.trailing_zeros() as usize;
        x ^= coord_bit(c);
        ad.add_assign(&ads[c]);
        if ad.cols().iter().all(|&col| ad.apply(col) == col) {
            out.push(Idempotent {
                element: x,
                central: ad.is_zero(),
            });
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn is_idempotent(l: &LieAlgebra, x: u64) -> bool {
    let ad = l.ad_map(x);
    ad.square() == ad
}

/// `L = L0 + L1` with `[La, Lb] ⊆ L(a+b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Grading {
    pub l0: Subspace,
    pub l1: Subspace,
}

impl Z2Grading {
    /// `[dim L0, dim L1]`.
    pub fn signature(&self) -> [usize; 2] {
        [self.l0.dim(), self.l1.dim()]
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.l0.is_zero() && !self.l1.is_zero()
    }

    /// The part of degree `a`.
    pub fn part(&self, a: u8) -> &Subspace {
        if a.is_multiple_of(2) {
            &self.l0
        } else {
            &self.l1
        }
    }

    /// Checks that the parts are complementary and the bracket respects degrees.
    pub fn is_grading_of(&self, l: &LieAlgebra) -> bool {
        let n = l.dim();
        if self.l0.ambient_dim() != n || self.l1.ambient_dim() != n {
            return false;
        }
        if self.l0.dim() + self.l1.dim() != n || !self.l0.join(&self.l1).is_ok_and(|s| s.is_full())
        {
            return false;
        }
        (0..2u8).all(|a| {
            (0..2u8).all(|b| {
                let target = self.part(a + b);
                self.part(a).rows64().iter().all(|&x| {
                    self.part(b)
                        .rows64()
                        .iter()
                        .all(|&y| target.contains_word(l.bracket_words(x, y)))
                })
            })
        })
    }
}

/// The grading by the eigenspaces of `ad(l)`.
pub fn grading_from_idempotent(l: &LieAlgebra, e: &Idempotent) -> Result<Z2Grading> {
    let ad = l.ad_map(e.element & prefix_mask(l.dim()));
    if ad.square() != ad {
        return Err(Error::NotIdempotent);
    }
    if ad.is_zero() {
        return Err(Error::CentralIdempotent);
    }
    Ok(Z2Grading {
        l0: ad.kernel(),
        l1: ad.add_identity().kernel(),
    })
}

/// One orbit of non-central idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentOrbit {
    pub representative: u64,
    pub size: usize,
    pub signature: [usize; 2],
}

/// Orbits of the non-central idempotents under `a`, ordered by least member.
pub fn idempotent_orbits(
    l: &LieAlgebra,
    a: &MatGroup,
    budget: &Budget,
) -> Result<Vec<IdempotentOrbit>> {
    let n = l.dim();
    let idems = find_idempotents(l)?;
    let mut seen = hashbrown::HashSet::new();
    let mut out = Vec::new();
    for e in idems.iter().filter(|e| !e.central) {
        if seen.contains(&e.element) {
            continue;
        }
        let orbit = Orbit::compute(e.element, n, a.generators(), budget)?;
        seen.extend(orbit.points().iter().copied());
        let g = grading_from_idempotent(l, e)?;
        out.push(IdempotentOrbit {
            representative: e.element,
            size: orbit.len(),
            signature: g.signature(),
        });
    }
    Ok(out)
}

/// Orbit counts grouped by signature: `(m, [d0, d1])` for "m x [d0,d1]".
pub fn idempotent_orbit_summary(
    l: &LieAlgebra,
    a: &MatGroup,
    budget: &Budget,
) -> Result<Vec<(usize, [usize; 2])>> {
    let mut counts: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for o in idempotent_orbits(l, a, budget)? {
        *counts.entry(o.signature).or_default() += 1;
    }
    Ok(counts.into_iter().map(|(sig, m)| (m, sig)).collect())
}

/// A Lie superalgebra `S = S0 + S1` with squaring `s: S1 -> S0`.
///
/// Coordinates `0..dim L` of `S` are the embedded copy of `L` (so a packed
/// element of `L` is also its image in `S`); the remaining coordinates span
/// the added squares.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    algebra: LieAlgebra,
    base_dim: usize,
    even: Subspace,
    odd: Subspace,
    /// Basis of `S1` and the square of each basis vector.
    odd_basis: Vec<u64>,
    squares: Vec<u64>,
    odd_coords: Echelon64,
}

impl SuperAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Dimension of the embedded algebra.
    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    /// The embedded algebra as a subspace of `S`.
    pub fn base(&self) -> Subspace {
        Subspace::from_words64(
            self.dim(),
            &(0..self.base_dim).map(coord_bit).collect::<Vec<_>>(),
        )
    }

    pub fn even(&self) -> &Subspace {
        &self.even
    }

    pub fn odd(&self) -> &Subspace {
        &self.odd
    }

    /// Image of a packed element of the base algebra.
    pub fn embed(&self, x: u64) -> u64 {
        x & prefix_mask(self.base_dim)
    }

    pub fn odd_basis(&self) -> &[u64] {
        &self.odd_basis
    }

    /// `s(y)` for `y` in `S1`.
    pub fn square(&self, y: u64) -> Result<u64> {
        let combo = self.odd_coords.coords(y).ok_or(Error::NotSubalgebra)?;
        let idx: Vec<usize> = ones64(combo).collect();
        let mut out = 0;
        for (a, &i) in idx.iter().enumerate() {
            out ^= self.squares[i];
            for &j in &idx[a + 1..] {
                out ^= self
                    .algebra
                    .bracket_words(self.odd_basis[i], self.odd_basis[j]);
            }
        }
        Ok(out)
    }

    /// Smallest superideal containing `seeds`: closed under brackets with `S`
    /// and under squaring of its odd part.
    pub fn superideal_closure(&self, seeds: &[u64]) -> Subspace {
        let n = self.dim();
        let gens: Vec<Mat64> = (0..n).map(|i| self.algebra.ad_basis(i)).collect();
        let mut ideal = meataxe::spin(&gens, n, seeds);
        loop {
            let odd_part = ideal
                .intersection(&self.odd)
                .expect("same ambient dimension");
            let new: Vec<u64> = odd_part
                .rows64()
                .iter()
                .map(|&y| self.square(y).expect("odd element"))
                .filter(|&s| !ideal.contains_word(s))
                .collect();
            if new.is_empty() {
                return ideal;
            }
            ideal = meataxe::spin_from(&gens, &ideal, &new);
        }
    }
}

/// Builds the superization of `l` for the grading `g`.
///
/// Fails with [`Error::NontrivialCenter`] when `ad` is not injective.
pub fn superize(l: &LieAlgebra, g: &Z2Grading) -> Result<SuperAlgebra> {
    let n = l.dim();
    if !g.is_grading_of(l) {
        return Err(Error::AxiomViolation(String::from("not a Z2-grading")));
    }
    let mut span = MatrixSpan::new(n);
    for i in 0..n {
        if !span.insert(l.ad_basis(i).to_bitmatrix())? {
            return Err(Error::NontrivialCenter);
        }
    }
    let odd_basis: Vec<u64> = g.l1.rows64().to_vec();
    let squares_m: Vec<_> = odd_basis
        .iter()
        .map(|&x| l.ad_map(x).square().to_bitmatrix())
        .collect();
    for sq in &squares_m {
        span.insert(sq.clone())?;
    }
    let algebra = span
        .structure_constants()?
        .with_label(format!("{}+", l.label()));
    let dim = algebra.dim();
    let squares: Vec<u64> = squares_m
        .iter()
        .map(|m| span.coords(m).expect("inserted"))
        .collect();
    let mut even_rows: Vec<u64> = g.l0.rows64().to_vec();
    even_rows.extend((n..dim).map(coord_bit));
    let mut odd_coords = Echelon64::new();
    for &x in &odd_basis {
        odd_coords.insert(x);
    }
    Ok(SuperAlgebra {
        even: Subspace::from_words64(dim, &even_rows),
        odd: Subspace::from_words64(dim, &odd_basis),
        algebra,
        base_dim: n,
        odd_basis,
        squares,
        odd_coords,
    })
}

/// Outcome of [`check_super_axioms`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperReport {
    pub violations: Vec<String>,
}

impl SuperReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the Lie axioms of `S`, the grading, the three squaring axioms
/// (on the odd basis and on random odd elements), and that `S / L` is abelian
/// of dimension at most `dim L1`.
pub fn check_super_axioms(s: &SuperAlgebra) -> SuperReport {
    let mut v = Vec::new();
    let alg = &s.algebra;
    let n = alg.dim();
    let report = alg.validate_axioms();
    if !report.is_valid() {
        v.push(format!("Lie axioms: {report}"));
    }
    let grading = Z2Grading {
        l0: s.even.clone(),
        l1: s.odd.clone(),
    };
    if !grading.is_grading_of(alg) {
        v.push(String::from("S0 + S1 is not a Z2-grading of S"));
    }
    let base = s.base();
    for i in 0..n {
        for j in i + 1..n {
            let w = alg.basis_bracket(i, j);
            if !base.contains_word(w) {
                v.push(format!("[b{i}, b{j}] leaves the embedded algebra"));
            }
        }
    }
    if n - s.base_dim > s.odd.dim() {
        v.push(String::from("dim S - dim L exceeds dim L1"));
    }
    if s.square(0) != Ok(0) {
        v.push(String::from("s(0) != 0"));
    }
    let sq = |x: u64| s.square(x).expect("odd element");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5c1a);
    let k = s.odd_basis.len();
    let random_odd = |rng: &mut ChaCha8Rng| {
        let mut x = 0;
        for &b in &s.odd_basis {
            if rng.next_u32() & 1 == 1 {
                x ^= b;
            }
        }
        x
    };
    let mut samples: Vec<u64> = s.odd_basis.clone();
    samples.extend((0..4 * k + 8).map(|_| random_odd(&mut rng)));
    for &x in &samples {
        let sx = sq(x);
        if !s.even.contains_word(sx) {
            v.push(format!("s({x:#x}) is not even"));
        }
        let adx = alg.ad_map(x);
        if alg.ad_map(sx) != adx.square() {
            v.push(format!("ad(s({x:#x})) != ad({x:#x})^2"));
        }
    }
    for _ in 0..4 * k + 8 {
        let (x, y) = (random_odd(&mut rng), random_odd(&mut rng));
        if sq(x ^ y) ^ sq(x) ^ sq(y) != alg.bracket_words(x, y) {
            v.push(format!("polarization fails at {x:#x}, {y:#x}"));
        }
    }
    v.dedup();
    SuperReport { violations: v }
}

/// True iff `S` has no superideal other than `0` and `S`.
pub fn is_simple_super(s: &SuperAlgebra) -> Result<bool> {
    let alg = &s.algebra;
    let n = alg.dim();
    let m = s.base_dim;
    if n == 0 {
        return Ok(false);
    }
    let full = |w: &Subspace| w.is_full();
    // a superideal meeting L trivially centralizes L
    let centralizer = centralizer_of_base(s);
    if centralizer.dim() > 20 {
        return Err(Error::SearchTooLarge {
            dim: centralizer.dim(),
        });
    }
    let basis = centralizer.rows64();
    let mut x = 0u64;
    for step in 1u64..1 << basis.len() {
        x ^= basis[step.trailing_zeros() as usize];
        if !full(&s.superideal_closure(&[x])) {
            return Ok(false);
        }
    }
    // otherwise it contains a minimal S-invariant subspace of L
    let restricted: Vec<Mat64> = (0..n)
        .map(|i| Mat64::from_cols((0..m).map(|j| alg.basis_bracket(i, j)).collect()))
        .collect();
    let minimal = match meataxe::irreducibility(&restricted, m) {
        meataxe::Irreducibility::Irreducible => alloc::vec![Subspace::full(m)],
        meataxe::Irreducibility::Zero => Vec::new(),
        meataxe::Irreducibility::Reducible(_) => {
            let subs = meataxe::all_submodules(&restricted, m, 1 << 16)?;
            meataxe::minimal_nonzero(&subs)
        }
    };
    for w in minimal {
        if !full(&s.superideal_closure(w.rows64())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{ v in S : [v, L] = 0 }`.
fn centralizer_of_base(s: &SuperAlgebra) -> Subspace {
    let alg = &s.algebra;
    let n = alg.dim();
    let mut c = Subspace::full(n);
    for j in 0..s.base_dim {
        // v -> [v, b_j]
        let m = Mat64::from_cols((0..n).map(|i| alg.basis_bracket(i, j)).collect());
        c = c.intersection(&m.kernel()).expect("same ambient dimension");
        if c.is_zero() {
            break;
        }
    }
    c
}

//! All subalgebras of a Lie algebra up to the action of a group `A` of
//! automorphisms.
//!
//! Starting from the zero subalgebra, each orbit representative `U` is
//! extended by one element `w` at a time: `V = <U, w>`. Only one `w` per orbit
//! of `Stab_A(U)` on the nonzero cosets of `L/U` is needed, because `<U, w>`
//! depends on `w + U` alone and `Stab_A(U)` permutes the results. Each `V` is
//! replaced by the least member of its `A`-orbit.

mod hasse;
mod quotients;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::autgroup::{MatGroup, Orbit};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, enumerate_subspaces, Echelon64, Mat64, Subspace};
use crate::lie::LieAlgebra;
use crate::meataxe;

pub use crate::autgroup::IsoCertificate;
pub use hasse::{ExpandedHasse, MAX_EXPANDED_VERTICES};
pub use quotients::{simple_subquotients, Subquotient, SubquotientReport};

/// Decides whether `a` and `b` are isomorphic, with a verified map when they are.
pub fn iso_test(a: &LieAlgebra, b: &LieAlgebra, budget: &Budget) -> Result<IsoCertificate> {
    crate::autgroup::isomorphism(a, b, budget)
}

/// Default bound on `|L|` for [`brute_force_subalgebras`].
pub const DEFAULT_BRUTE_FORCE_BOUND: u64 = 512;

/// Largest quotient `L/U` scanned coset by coset.
const MAX_QUOTIENT_DIM: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgConfig {
    /// Use ad(U)-submodules of `L/U` instead of stabilizer orbits when
    /// `dim L/U` is at most this.
    pub submodule_codim: usize,
    /// Give up on the submodule route beyond this many submodules.
    pub submodule_limit: usize,
    /// Extend only representatives of dimension below this.
    pub max_dim: Option<usize>,
}

impl Default for SubalgConfig {
    fn default() -> Self {
        Self {
            submodule_codim: 6,
            submodule_limit: 256,
            max_dim: None,
        }
    }
}

/// An orbit of subalgebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    /// Least member of the orbit.
    pub space: Subspace,
    pub orbit_size: usize,
    pub maximal: bool,
}

/// A cover relation between orbits: `element` maps the upper representative
/// to a subalgebra covering the lower representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseEdge {
    pub lower: usize,
    pub upper: usize,
    pub element: Mat64,
}

#[derive(Clone, Debug)]
struct Member {
    space: Subspace,
    rep: u32,
    /// Position of the Schreier-tree parent (itself for the root).
    parent: u32,
    gen: u32,
}

/// Orbit representatives of all subalgebras, with orbit sizes, maximality
/// flags and orbit-level Hasse edges.
#[derive(Clone, Debug)]
pub struct SubalgebraLattice {
    parent: LieAlgebra,
    group: MatGroup,
    reps: Vec<Rep>,
    edges: Vec<HasseEdge>,
    members: Vec<Member>,
    index: HashMap<Subspace, u32>,
    /// Root-to-representative element of each orbit, inverted.
    rep_inv: Vec<Mat64>,
    max_dim: Option<usize>,
    stopped: Option<Error>,
}

impl SubalgebraLattice {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.parent
    }

    pub fn group(&self) -> &MatGroup {
        &self.group
    }

    /// Representatives sorted by dimension, then canonical basis.
    pub fn reps(&self) -> &[Rep] {
        &self.reps
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    /// True when the run finished and every dimension is covered.
    pub fn is_complete(&self) -> bool {
        self.stopped.is_none() && self.max_dim.is_none_or(|m| m >= self.parent.dim())
    }

    /// The error that cut the run short, if any.
    pub fn stopped_by(&self) -> Option<&Error> {
        self.stopped.as_ref()
    }

    /// Dimensions up to which the counts are exact.
    pub fn complete_up_to(&self) -> Option<usize> {
        if self.stopped.is_some() {
            return None;
        }
        Some(
            self.max_dim
                .map_or(self.parent.dim(), |m| m.min(self.parent.dim())),
        )
    }

    /// Number of orbits in each dimension `0..=n`.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.parent.dim() + 1];
        for r in &self.reps {
            out[r.space.dim()] += 1;
        }
        out
    }

    /// Number of subalgebras (orbit sizes summed) in each dimension.
    pub fn weighted_counts_by_dim(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.parent.dim() + 1];
        for r in &self.reps {
            out[r.space.dim()] += r.orbit_size;
        }
        out
    }

    pub fn total_subalgebras(&self) -> usize {
        self.reps.iter().map(|r| r.orbit_size).sum()
    }

    /// Orbits of maximal subalgebras in each dimension `0..=n`.
    pub fn maximal_counts_by_dim(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.parent.dim() + 1];
        for r in self.reps.iter().filter(|r| r.maximal) {
            out[r.space.dim()] += 1;
        }
        out
    }

    /// Index of the representative of the orbit containing `v`.
    pub fn rep_of(&self, v: &Subspace) -> Option<usize> {
        self.member_index(v).map(|m| self.members[m].rep as usize)
    }

    fn member_index(&self, v: &Subspace) -> Option<usize> {
        self.index.get(v).map(|&m| m as usize)
    }

    /// All subalgebras found, as `(space, representative index)`.
    pub fn members(&self) -> impl Iterator<Item = (&Subspace, usize)> {
        self.members.iter().map(|m| (&m.space, m.rep as usize))
    }

    /// An element of the group mapping the representative of `v`'s orbit to `v`.
    pub fn transversal(&self, v: &Subspace) -> Option<Mat64> {
        let m = self.member_index(v)?;
        Some(transversal_in(&self.members, &self.group, &self.rep_inv, m))
    }
}

fn element_to_root(members: &[Member], group: &MatGroup, mut m: usize) -> Mat64 {
    let n = group.degree();
    let mut word = Vec::new();
    while members[m].parent as usize != m {
        word.push(members[m].gen as usize);
        m = members[m].parent as usize;
    }
    let mut g = Mat64::identity(n);
    for &s in word.iter().rev() {
        g = group.generators()[s].compose(&g);
    }
    g
}

fn transversal_in(members: &[Member], group: &MatGroup, rep_inv: &[Mat64], m: usize) -> Mat64 {
    let r = members[m].rep as usize;
    element_to_root(members, group, m).compose(&rep_inv[r])
}

/// Orbit representatives that are maximal: every outgoing edge ends at `L`.
pub fn maximal_subalgebras(lat: &SubalgebraLattice) -> Vec<usize> {
    let n = lat.parent.dim();
    let top = lat.reps.iter().position(|r| r.space.dim() == n);
    let mut has_edge = alloc::vec![false; lat.reps.len()];
    let mut only_top = alloc::vec![true; lat.reps.len()];
    for e in &lat.edges {
        has_edge[e.lower] = true;
        if Some(e.upper) != top {
            only_top[e.lower] = false;
        }
    }
    (0..lat.reps.len())
        .filter(|&i| has_edge[i] && only_top[i] && Some(i) != top)
        .collect()
}

/// Per-dimension orbit counts of maximal subalgebras, from the Hasse edges.
pub fn maximal_counts(lat: &SubalgebraLattice) -> Vec<usize> {
    let mut out = alloc::vec![0; lat.parent.dim() + 1];
    for i in maximal_subalgebras(lat) {
        out[lat.reps[i].space.dim()] += 1;
    }
    out
}

/// Orbit-level Hasse edges as `(lower, upper)` index pairs.
pub fn hasse_edges(lat: &SubalgebraLattice) -> Vec<(usize, usize)> {
    lat.edges.iter().map(|e| (e.lower, e.upper)).collect()
}

struct Builder<'a> {
    l: &'a LieAlgebra,
    a: &'a MatGroup,
    config: &'a SubalgConfig,
    budget: &'a Budget,
    members: Vec<Member>,
    index: HashMap<Subspace, u32>,
    reps: Vec<Rep>,
    rep_inv: Vec<Mat64>,
    stabilizers: Vec<Option<MatGroup>>,
    edges: Vec<HasseEdge>,
    queue: BTreeSet<(Subspace, usize)>,
}

impl Builder<'_> {
    /// Member index of `v`, adding its orbit when new.
    fn insert(&mut self, v: Subspace) -> Result<usize> {
        if let Some(&m) = self.index.get(&v) {
            return Ok(m as usize);
        }
        let n = self.l.dim();
        let orbit = Orbit::compute(v, n, self.a.generators(), self.budget)?;
        self.budget
            .check_storage(self.members.len() + orbit.len())?;
        let base = self.members.len();
        let r = self.reps.len();
        for (i, p) in orbit.points().iter().enumerate() {
            let (parent, gen) = orbit
                .parent(i)
                .map_or((base + i, 0), |(p, s)| (base + p, s));
            self.index.insert(p.clone(), (base + i) as u32);
            self.members.push(Member {
                space: p.clone(),
                rep: r as u32,
                parent: parent as u32,
                gen: gen as u32,
            });
        }
        let pos = orbit.min_position();
        let t = orbit.element_to(pos);
        let t_inv = t.inverse().expect("group elements are invertible");
        let rep_space = orbit.points()[pos].clone();
        let stab = if rep_space.dim() < n && self.config.max_dim.is_none_or(|m| rep_space.dim() < m)
        {
            let s = self.a.stabilizer_from_orbit(&orbit, self.budget)?;
            let gens = s
                .generators()
                .iter()
                .map(|g| t.compose(g).compose(&t_inv))
                .collect();
            Some(MatGroup::with_known_order(n, gens, s.order()?))
        } else {
            None
        };
        self.queue.insert((rep_space.clone(), r));
        self.reps.push(Rep {
            space: rep_space,
            orbit_size: orbit.len(),
            maximal: false,
        });
        self.rep_inv.push(t_inv);
        self.stabilizers.push(stab);
        self.budget.report("orbits", self.reps.len() as u64);
        Ok(base)
    }

    fn transversal(&self, m: usize) -> Mat64 {
        transversal_in(&self.members, self.a, &self.rep_inv, m)
    }

    /// Records the extensions of representative `r`.
    fn process(&mut self, r: usize) -> Result<()> {
        let u = self.reps[r].space.clone();
        let n = self.l.dim();
        let Some(stab) = self.stabilizers[r].take() else {
            return Ok(());
        };
        let codim = n - u.dim();
        if u.dim() > 0 && codim <= self.config.submodule_codim {
            match self.extend_by_submodules(r, &u) {
                Err(Error::TooManySubmodules { .. }) => {}
                other => return other,
            }
        }
        self.extend_by_orbits(r, &u, &stab)
    }

    fn extend_by_submodules(&mut self, r: usize, u: &Subspace) -> Result<()> {
        let above = submodules_over(self.l, u, self.config.submodule_limit)?;
        let overs: Vec<Subspace> = above
            .into_iter()
            .filter(|v| v != u && self.l.is_subalgebra(v))
            .collect();
        let covers = minimal_among(&overs);
        let maximal = overs.len() == 1;
        for v in overs {
            self.insert(v)?;
        }
        let mut seen = HashSet::new();
        for v in covers {
            let m = self.index[&v] as usize;
            let upper = self.members[m].rep as usize;
            if seen.insert(upper) {
                let element = self.transversal(m);
                self.edges.push(HasseEdge {
                    lower: r,
                    upper,
                    element,
                });
            }
        }
        self.reps[r].maximal = maximal;
        Ok(())
    }

    fn extend_by_orbits(&mut self, r: usize, u: &Subspace, stab: &MatGroup) -> Result<()> {
        let n = self.l.dim();
        let free = u.complement_coords();
        let k = free.len();
        if k > MAX_QUOTIENT_DIM {
            return Err(Error::SearchTooLarge { dim: k });
        }
        let expand = |idx: u64| -> u64 {
            let mut w = 0;
            for (i, &c) in free.iter().enumerate() {
                if idx >> i & 1 == 1 {
                    w |= coord_bit(c);
                }
            }
            w
        };
        let compact = |w: u64| -> u64 {
            let mut idx = 0;
            for (i, &c) in free.iter().enumerate() {
                if w & coord_bit(c) != 0 {
                    idx |= 1 << i;
                }
            }
            idx
        };
        let mut meter = self.budget.meter();
        let mut seen = alloc::vec![0u64; (1usize << k).div_ceil(64)];
        let mut edge_to: HashSet<usize> = HashSet::new();
        let mut maximal = true;
        for idx in 1u64..1 << k {
            if seen[(idx >> 6) as usize] >> (idx & 63) & 1 == 1 {
                continue;
            }
            let w = expand(idx);
            // orbit of w + U under the stabilizer
            let mut stack = alloc::vec![idx];
            seen[(idx >> 6) as usize] |= 1 << (idx & 63);
            while let Some(j) = stack.pop() {
                let x = expand(j);
                for g in stab.generators() {
                    meter.tick()?;
                    let y = compact(u.reduce_word(g.apply(x)));
                    if seen[(y >> 6) as usize] >> (y & 63) & 1 == 0 {
                        seen[(y >> 6) as usize] |= 1 << (y & 63);
                        stack.push(y);
                    }
                }
            }
            let v = self.l.closure_over(u, &[w]);
            if v.dim() < n {
                maximal = false;
            }
            let covers = is_cover(self.l, u, &v);
            let m = self.insert(v)?;
            let upper = self.members[m].rep as usize;
            if covers && edge_to.insert(upper) {
                let element = self.transversal(m);
                self.edges.push(HasseEdge {
                    lower: r,
                    upper,
                    element,
                });
            }
        }
        self.reps[r].maximal = maximal && u.dim() < n;
        Ok(())
    }
}

/// True when no subalgebra lies strictly between `u` and `v`: every `x` in
/// `v` outside `u` generates `v` together with `u`.
fn is_cover(l: &LieAlgebra, u: &Subspace, v: &Subspace) -> bool {
    let mut ech = Echelon64::new();
    for &r in u.rows64() {
        ech.insert(r);
    }
    let quot: Vec<u64> = v
        .rows64()
        .iter()
        .copied()
        .filter(|&r| ech.insert(r))
        .collect();
    let mut x = 0u64;
    for step in 1u64..1 << quot.len() {
        x ^= quot[step.trailing_zeros() as usize];
        if l.closure_over(u, &[x]).dim() != v.dim() {
            return false;
        }
    }
    true
}

fn minimal_among(spaces: &[Subspace]) -> Vec<Subspace> {
    spaces
        .iter()
        .filter(|s| {
            !spaces
                .iter()
                .any(|t| t.dim() < s.dim() && s.contains_subspace(t))
        })
        .cloned()
        .collect()
}

/// All subalgebras of `l` up to the action of `a`, which must consist of
/// automorphisms. Budget exhaustion is an error.
pub fn all_subalgebras(
    l: &LieAlgebra,
    a: &MatGroup,
    config: &SubalgConfig,
    budget: &Budget,
) -> Result<SubalgebraLattice> {
    let lat = all_subalgebras_partial(l, a, config, budget)?;
    match lat.stopped {
        Some(e) => Err(e),
        None => Ok(lat),
    }
}

/// Like [`all_subalgebras`], but budget exhaustion returns what was found so
/// far (see [`SubalgebraLattice::stopped_by`]).
pub fn all_subalgebras_partial(
    l: &LieAlgebra,
    a: &MatGroup,
    config: &SubalgConfig,
    budget: &Budget,
) -> Result<SubalgebraLattice> {
    let n = l.dim();
    if a.degree() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.degree(),
        });
    }
    if n > 63 {
        return Err(Error::DimensionTooLarge { dim: n, max: 63 });
    }
    let mut b = Builder {
        l,
        a,
        config,
        budget,
        members: Vec::new(),
        index: HashMap::new(),
        reps: Vec::new(),
        rep_inv: Vec::new(),
        stabilizers: Vec::new(),
        edges: Vec::new(),
        queue: BTreeSet::new(),
    };
    let mut stopped = None;
    let run = (|| -> Result<()> {
        b.insert(Subspace::zero(n))?;
        b.insert(Subspace::full(n))?;
        while let Some((_, r)) = b.queue.pop_first() {
            b.process(r)?;
        }
        Ok(())
    })();
    if let Err(e) = run {
        if !e.is_budget() {
            return Err(e);
        }
        stopped = Some(e);
    }
    Ok(finish(b, stopped))
}

/// Sorts representatives canonically and renumbers everything.
fn finish(b: Builder<'_>, stopped: Option<Error>) -> SubalgebraLattice {
    let mut order: Vec<usize> = (0..b.reps.len()).collect();
    order.sort_by(|&x, &y| b.reps[x].space.cmp(&b.reps[y].space));
    let mut new_index = alloc::vec![0usize; b.reps.len()];
    for (new, &old) in order.iter().enumerate() {
        new_index[old] = new;
    }
    let reps = order.iter().map(|&i| b.reps[i].clone()).collect();
    let rep_inv = order.iter().map(|&i| b.rep_inv[i].clone()).collect();
    let mut members = b.members;
    for m in &mut members {
        m.rep = new_index[m.rep as usize] as u32;
    }
    let mut edges: Vec<HasseEdge> = b
        .edges
        .into_iter()
        .map(|e| HasseEdge {
            lower: new_index[e.lower],
            upper: new_index[e.upper],
            element: e.element,
        })
        .collect();
    edges.sort_by_key(|e| (e.lower, e.upper));
    SubalgebraLattice {
        parent: b.l.clone(),
        group: b.a.clone(),
        reps,
        edges,
        members,
        index: b.index,
        rep_inv,
        max_dim: b.config.max_dim,
        stopped,
    }
}

/// Subspaces of `L` containing the subalgebra `u` that are invariant under
/// `ad(u)`. Every subalgebra containing `u` is among them.
///
/// Fails with [`Error::TooManySubmodules`] past `limit`.
pub fn submodules_over(l: &LieAlgebra, u: &Subspace, limit: usize) -> Result<Vec<Subspace>> {
    if !l.is_subalgebra(u) {
        return Err(Error::NotSubalgebra);
    }
    let gens: Vec<Mat64> = u.rows64().iter().map(|&x| l.ad_map(x)).collect();
    meataxe::submodules_above(&gens, u, limit)
}

/// Subalgebras of `l` found by filtering every subspace.
#[derive(Clone, Debug)]
pub struct BruteForce {
    /// All subalgebras, ordered by dimension then canonical basis.
    pub subalgebras: Vec<Subspace>,
}

impl BruteForce {
    pub fn counts_by_dim(&self, n: usize) -> Vec<usize> {
        let mut out = alloc::vec![0; n + 1];
        for s in &self.subalgebras {
            out[s.dim()] += 1;
        }
        out
    }
}

/// Every subalgebra, by filtering all subspaces; requires `2^n <= bound`.
pub fn brute_force_subalgebras(l: &LieAlgebra, bound: u64) -> Result<BruteForce> {
    let n = l.dim();
    if n >= 63 || (1u64 << n) > bound {
        return Err(Error::SearchTooLarge { dim: n });
    }
    let mut subalgebras = Vec::new();
    for k in 0..=n {
        for s in enumerate_subspaces(n, k)? {
            if l.is_subalgebra(&s) {
                subalgebras.push(s);
            }
        }
    }
    subalgebras.sort();
    Ok(BruteForce { subalgebras })
}

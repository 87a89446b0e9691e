//! Simple subquotients `V/I` of a Lie algebra.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::SubalgebraLattice;
use crate::budget::Budget;
use crate::catalog::{id_key, Catalog};
use crate::error::Result;
use crate::f2linalg::{Mat64, Subspace};
use crate::meataxe;

/// A simple section `V/I` with `I` a maximal ideal of the subalgebra `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquotient {
    pub v: Subspace,
    /// The ideal, in coordinates of `L`.
    pub i: Subspace,
    pub id: Option<String>,
}

impl Subquotient {
    pub fn dim(&self) -> usize {
        self.v.dim() - self.i.dim()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubquotientReport {
    /// Catalog ids of the proper simple subquotients, by dimension.
    pub identified: Vec<String>,
    /// Simple subquotients matching no catalog entry.
    pub unknown: Vec<Subquotient>,
    /// Every simple subquotient found, one per orbit representative and ideal.
    pub all: Vec<Subquotient>,
}

/// Proper simple subquotients of `lat.algebra()`, identified against `catalog`.
///
/// Only perfect representatives are examined: if `V/I` is simple then so is
/// `P/(P ∩ I)` for the perfect term `P` of the derived series of `V`.
pub fn simple_subquotients(
    lat: &SubalgebraLattice,
    catalog: &Catalog,
    budget: &Budget,
) -> Result<SubquotientReport> {
    let l = lat.algebra();
    let n = l.dim();
    let mut report = SubquotientReport::default();
    let mut ids = BTreeSet::new();
    for rep in lat.reps() {
        let v = &rep.space;
        if v.is_zero() || !l.is_perfect_subalgebra(v) {
            continue;
        }
        let rv = l.restrict(v)?;
        let d = rv.dim();
        let gens: Vec<Mat64> = (0..d).map(|i| rv.ad_basis(i)).collect();
        let ideals = match meataxe::irreducibility(&gens, d) {
            meataxe::Irreducibility::Irreducible => alloc::vec![Subspace::zero(d)],
            _ => meataxe::maximal_proper(&meataxe::all_submodules(&gens, d, 1 << 16)?),
        };
        for i in ideals {
            if v.dim() == n && i.is_zero() {
                continue;
            }
            let q = rv.section(&Subspace::full(d), &i)?;
            if !q.is_simple() {
                continue;
            }
            // the ideal in coordinates of L
            let basis = v.rows64();
            let words: Vec<u64> = i
                .rows64()
                .iter()
                .map(|&c| crate::f2linalg::ones64(c).fold(0u64, |acc, k| acc ^ basis[k]))
                .collect();
            let id = catalog.identify(&q, budget)?;
            let sq = Subquotient {
                v: v.clone(),
                i: Subspace::from_words64(n, &words),
                id: id.clone(),
            };
            match id {
                Some(id) => {
                    ids.insert(id);
                }
                None => report.unknown.push(sq.clone()),
            }
            report.all.push(sq);
        }
    }
    let mut identified: Vec<String> = ids.into_iter().collect();
    identified.sort_by_key(|id| id_key(id));
    report.identified = identified;
    Ok(report)
}

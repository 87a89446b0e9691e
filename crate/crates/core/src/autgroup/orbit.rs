//! Orbits with Schreier trees.

use alloc::vec::Vec;
use core::hash::Hash;

use hashbrown::HashMap;

use crate::budget::Budget;
use crate::error::Result;
use crate::f2linalg::{Mat64, Subspace};

/// Objects a matrix group acts on.
pub trait Action: Clone + Eq + Hash + Ord {
    fn act(&self, g: &Mat64) -> Self;
}

impl Action for u64 {
    #[inline]
    fn act(&self, g: &Mat64) -> Self {
        g.apply(*self)
    }
}

impl Action for Subspace {
    fn act(&self, g: &Mat64) -> Self {
        g.apply_subspace(self)
    }
}

/// An orbit `root^G` with a Schreier tree: every point records the point it
/// was reached from and the generator used.
#[derive(Clone, Debug)]
pub struct Orbit<T> {
    points: Vec<T>,
    index: HashMap<T, u32>,
    parent: Vec<(u32, u32)>,
    n: usize,
    gens: Vec<Mat64>,
}

impl<T: Action> Orbit<T> {
    pub fn compute(root: T, n: usize, gens: &[Mat64], budget: &Budget) -> Result<Self> {
        let mut meter = budget.meter();
        let mut index = HashMap::new();
        index.insert(root.clone(), 0u32);
        let mut points = alloc::vec![root];
        let mut parent = alloc::vec![(u32::MAX, u32::MAX)];
        let mut k = 0;
        while k < points.len() {
            for (s, g) in gens.iter().enumerate() {
                meter.tick()?;
                let q = points[k].act(g);
                if !index.contains_key(&q) {
                    budget.check_storage(points.len() + 1)?;
                    index.insert(q.clone(), points.len() as u32);
                    points.push(q);
                    parent.push((k as u32, s as u32));
                }
            }
            k += 1;
        }
        Ok(Self {
            points,
            index,
            parent,
            n,
            gens: gens.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn root(&self) -> &T {
        &self.points[0]
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn position(&self, p: &T) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &T) -> bool {
        self.index.contains_key(p)
    }

    /// Position of the least point.
    pub fn min_position(&self) -> usize {
        (0..self.points.len())
            .min_by(|&a, &b| self.points[a].cmp(&self.points[b]))
            .unwrap_or(0)
    }

    /// The point `points[i]` was reached from, and the generator used.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        let (p, s) = self.parent[i];
        (i != 0).then_some((p as usize, s as usize))
    }

    /// A group element carrying the root to `points[i]`.
    pub fn element_to(&self, mut i: usize) -> Mat64 {
        let mut word = Vec::new();
        while i != 0 {
            let (p, s) = self.parent[i];
            word.push(s as usize);
            i = p as usize;
        }
        let mut g = Mat64::identity(self.n);
        for &s in word.iter().rev() {
            g = self.gens[s].compose(&g);
        }
        g
    }

    /// A group element carrying `points[from]` to `points[to]`.
    pub fn element_between(&self, from: usize, to: usize) -> Mat64 {
        let a = self.element_to(from);
        let b = self.element_to(to);
        b.compose(&a.inverse().expect("group elements are invertible"))
    }

    pub fn generators(&self) -> &[Mat64] {
        &self.gens
    }
}

/// Orbit of an object, as exposed by the group API: the canonical (least)
/// member, the size, and transversal elements from the representative.
#[derive(Clone, Debug)]
pub struct OrbitRecord<T> {
    pub representative: T,
    pub size: usize,
    orbit: Orbit<T>,
    rep_pos: usize,
}

impl<T: Action> OrbitRecord<T> {
    pub(crate) fn from_orbit(orbit: Orbit<T>) -> Self {
        let rep_pos = orbit.min_position();
        Self {
            representative: orbit.points()[rep_pos].clone(),
            size: orbit.len(),
            orbit,
            rep_pos,
        }
    }

    pub fn members(&self) -> &[T] {
        self.orbit.points()
    }

    pub fn contains(&self, p: &T) -> bool {
        self.orbit.contains(p)
    }

    /// A group element mapping the representative to `member`.
    pub fn transversal(&self, member: &T) -> Option<Mat64> {
        let to = self.orbit.position(member)?;
        Some(self.orbit.element_between(self.rep_pos, to))
    }

    pub fn orbit(&self) -> &Orbit<T> {
        &self.orbit
    }
}

//! Hasse diagrams of subalgebra lattices and their DOT rendering.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::SubalgebraLattice;
use crate::error::{Error, Result};
use crate::f2linalg::{coord_bit, Subspace};

/// Largest number of subalgebras drawn one by one.
pub const MAX_EXPANDED_VERTICES: usize = 4096;

/// The cover relation on all subalgebras, not just orbit representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedHasse {
    /// Sorted by dimension, then canonical basis.
    pub vertices: Vec<Subspace>,
    /// Orbit (representative index) of each vertex.
    pub orbit: Vec<usize>,
    /// `(lower, upper)` vertex indices with `upper` covering `lower`.
    pub edges: Vec<(usize, usize)>,
}

impl ExpandedHasse {
    pub fn from_lattice(lat: &SubalgebraLattice) -> Result<Self> {
        if !lat.is_complete() {
            return Err(Error::SearchTooLarge {
                dim: lat.algebra().dim(),
            });
        }
        let mut vertices: Vec<(Subspace, usize)> =
            lat.members().map(|(s, r)| (s.clone(), r)).collect();
        if vertices.len() > MAX_EXPANDED_VERTICES {
            return Err(Error::StorageExceeded {
                limit: MAX_EXPANDED_VERTICES,
            });
        }
        vertices.sort();
        let mut edges = Vec::new();
        for (hi, (v, _)) in vertices.iter().enumerate() {
            let below: Vec<usize> = (0..hi)
                .filter(|&lo| {
                    vertices[lo].0.dim() < v.dim() && v.contains_subspace(&vertices[lo].0)
                })
                .collect();
            for &lo in &below {
                let u = &vertices[lo].0;
                let between = below.iter().any(|&w| {
                    let w = &vertices[w].0;
                    w.dim() > u.dim() && w.contains_subspace(u)
                });
                if !between {
                    edges.push((lo, hi));
                }
            }
        }
        let (vertices, orbit) = vertices.into_iter().unzip();
        Ok(Self {
            vertices,
            orbit,
            edges,
        })
    }

    /// Vertices covered by vertex `v`.
    pub fn covered_by(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.1 == v)
            .map(|e| e.0)
            .collect()
    }

    /// DOT graph with one cluster per orbit.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph subalgebras {\n  rankdir=BT;\n  node [shape=box];\n");
        let norbits = self.orbit.iter().max().map_or(0, |m| m + 1);
        for o in 0..norbits {
            let _ = writeln!(out, "  subgraph cluster_{o} {{\n    label=\"orbit {o}\";");
            for (i, v) in self
                .vertices
                .iter()
                .enumerate()
                .filter(|(i, _)| self.orbit[*i] == o)
            {
                let _ = writeln!(out, "    v{i} [label=\"{}\"];", label(v));
            }
            out.push_str("  }\n");
        }
        for &(lo, hi) in &self.edges {
            let _ = writeln!(out, "  v{lo} -> v{hi};");
        }
        out.push_str("}\n");
        out
    }
}

/// `dim d: 101,011` style vertex label.
pub(crate) fn label(s: &Subspace) -> String {
    let n = s.ambient_dim();
    let rows: Vec<String> = s
        .rows64()
        .iter()
        .map(|&r| {
            (0..n)
                .map(|i| if r & coord_bit(i) != 0 { '1' } else { '0' })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        format!("dim {}: 0", s.dim())
    } else {
        format!("dim {}: {}", s.dim(), rows.join(","))
    }
}

impl SubalgebraLattice {
    /// DOT graph of orbit representatives and orbit-level cover edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph orbits {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, r) in self.reps().iter().enumerate() {
            let _ = writeln!(
                out,
                "  r{i} [label=\"{} (orbit size {})\"];",
                label(&r.space),
                r.orbit_size
            );
        }
        for e in self.edges() {
            let _ = writeln!(out, "  r{} -> r{};", e.lower, e.upper);
        }
        out.push_str("}\n");
        out
    }

    pub fn expanded_hasse(&self) -> Result<ExpandedHasse> {
        ExpandedHasse::from_lattice(self)
    }
}

#[cfg(test)]
mod tests {
    use crate::autgroup::automorphism_group;
    use crate::budget::Budget;
    use crate::lie::tests::l31;
    use crate::subalg::{all_subalgebras, SubalgConfig};

    #[test]
    fn l31_expanded_diagram() {
        let l = l31();
        let a = automorphism_group(&l, &Budget::default()).unwrap();
        let lat = all_subalgebras(&l, &a, &SubalgConfig::default(), &Budget::default()).unwrap();
        let h = lat.expanded_hasse().unwrap();
        assert_eq!(h.vertices.len(), 12);
        for (i, v) in h.vertices.iter().enumerate() {
            let below = h.covered_by(i);
            match v.dim() {
                0 => assert!(below.is_empty()),
                1 => assert_eq!(below, [0]),
                2 => assert_eq!(below.len(), 3),
                3 => {
                    assert_eq!(below.len(), 3);
                    assert!(below.iter().all(|&b| h.vertices[b].dim() == 2));
                }
                _ => unreachable!(),
            }
        }
        let dot = h.to_dot();
        assert_eq!(dot.matches("[label=").count(), 12);
        assert!(lat.to_dot().starts_with("digraph"));
    }
}

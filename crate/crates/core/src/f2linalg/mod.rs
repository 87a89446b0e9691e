//! Exact linear algebra over GF(2).

mod enumerate;
mod mat64;
mod matrix;
mod subspace;
mod vector;

pub use enumerate::{enumerate_subspaces, SubspaceIter};
pub use mat64::Mat64;
pub use matrix::{eigenspace, rref, BitMatrix, Rref};
pub use subspace::{canonical_subspace, Echelon, Echelon64, Subspace};
pub use vector::{coord_bit, ones64, prefix_mask, BitVector};

//! Lie algebras over GF(2): gradings from idempotents, superization, and
//! subalgebra enumeration up to automorphism.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod autgroup;
mod budget;
pub mod catalog;
mod error;
pub mod f2linalg;
pub mod grading;
pub mod lie;
pub mod meataxe;
pub mod poly;
pub mod subalg;

pub use budget::{Budget, ProgressFn};
pub use error::{Error, Result};

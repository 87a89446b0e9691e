//! The structure-constant file format.
//!
//! ```text
//! {
//!   "dim": 3,
//!   "label": "L_3_1",
//!   "brackets": [
//!     [0, 1, [2]],
//!     [0, 2, [0]],
//!     [1, 2, [0, 1]]
//!   ]
//! }
//! ```
//!
//! Each entry `[i, j, [k1, k2, ...]]` with `i < j` states
//! `[b_i, b_j] = b_k1 + b_k2 + ...`; absent pairs bracket to zero.

use std::collections::HashSet;
use std::fmt::Write;
use std::fs;
use std::path::Path;

use f2lie_core::lie::LieAlgebra;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub dim: usize,
    #[serde(default)]
    pub label: String,
    pub brackets: Vec<(usize, usize, Vec<usize>)>,
}

impl StructureFile {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        Self {
            dim: l.dim(),
            label: l.label().to_string(),
            brackets: l.brackets(),
        }
    }

    /// Builds the algebra, reporting entry-level problems against `origin`.
    ///
    /// A diagonal entry `[i, i, ...]` is accepted here so that the axiom check
    /// reports it as an alternating-law violation.
    pub fn to_algebra(&self, origin: &Path) -> Result<LieAlgebra> {
        let mut pairs = HashSet::new();
        for (e, (i, j, ks)) in self.brackets.iter().enumerate() {
            if i > j {
                return Err(Error::format(
                    origin,
                    format!("bracket entry {e}: pair ({i}, {j}) must be listed with i < j"),
                ));
            }
            for &x in [i, j].into_iter().chain(ks) {
                if x >= self.dim {
                    return Err(Error::format(
                        origin,
                        format!(
                            "bracket entry {e}: index {x} out of range for dim {}",
                            self.dim
                        ),
                    ));
                }
            }
            if !pairs.insert((*i, *j)) {
                return Err(Error::format(
                    origin,
                    format!("bracket entry {e}: pair ({i}, {j}) listed twice"),
                ));
            }
        }
        let l = LieAlgebra::from_brackets(self.dim, &self.brackets)?;
        Ok(l.with_label(self.label.clone()))
    }
}

pub fn parse_algebra(text: &str, origin: &Path) -> Result<LieAlgebra> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Syntax {
        path: origin.to_path_buf(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    file.to_algebra(origin)
}

pub fn load_algebra(path: &Path) -> Result<LieAlgebra> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_algebra(&text, path)
}

/// One bracket per line.
pub fn algebra_to_string(l: &LieAlgebra) -> String {
    let f = StructureFile::from_algebra(l);
    let mut out = String::new();
    let label = serde_json::to_string(&f.label).expect("strings serialize");
    let _ = write!(
        out,
        "{{\n  \"dim\": {},\n  \"label\": {label},\n  \"brackets\": [",
        f.dim
    );
    for (e, (i, j, ks)) in f.brackets.iter().enumerate() {
        let ks: Vec<String> = ks.iter().map(|k| k.to_string()).collect();
        let sep = if e == 0 { "" } else { "," };
        let _ = write!(out, "{sep}\n    [{i}, {j}, [{}]]", ks.join(", "));
    }
    if !f.brackets.is_empty() {
        out.push_str("\n  ");
    }
    out.push_str("]\n}\n");
    out
}

pub fn save_algebra(l: &LieAlgebra, path: &Path) -> Result<()> {
    fs::write(path, algebra_to_string(l)).map_err(|e| Error::io(path, e))
}

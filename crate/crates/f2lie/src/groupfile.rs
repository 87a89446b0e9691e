//! User-supplied automorphism generators: `n x n` matrices of `0`/`1` rows,
//! separated by blank lines. Lines starting with `#` are ignored.

use std::fs;
use std::path::Path;

use f2lie_core::autgroup::{is_automorphism, MatGroup};
use f2lie_core::f2linalg::BitMatrix;
use f2lie_core::lie::LieAlgebra;

use crate::error::{Error, Result};

pub fn parse_group(text: &str, l: &LieAlgebra, origin: &Path) -> Result<MatGroup> {
    let n = l.dim();
    let mut mats = Vec::new();
    let mut block = String::new();
    let flush = |block: &mut String, mats: &mut Vec<BitMatrix>| -> Result<()> {
        if block.trim().is_empty() {
            return Ok(());
        }
        let k = mats.len();
        let m = BitMatrix::parse_rows(block)
            .map_err(|e| Error::format(origin, format!("matrix {k}: {e}")))?;
        if m.rows() != n || m.cols() != n {
            return Err(Error::format(
                origin,
                format!("matrix {k} is {}x{}, expected {n}x{n}", m.rows(), m.cols()),
            ));
        }
        if !is_automorphism(l, &m)? {
            return Err(Error::format(
                origin,
                format!("matrix {k} is not an automorphism"),
            ));
        }
        mats.push(m);
        block.clear();
        Ok(())
    };
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            flush(&mut block, &mut mats)?;
        } else {
            block.extend(line.chars().filter(|c| !c.is_whitespace()));
            block.push('\n');
        }
    }
    flush(&mut block, &mut mats)?;
    Ok(MatGroup::from_bitmatrices(n, &mats)?)
}

pub fn load_group(path: &Path, l: &LieAlgebra) -> Result<MatGroup> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_group(&text, l, path)
}

/// Rows of `m` as `0`/`1` strings.
pub fn matrix_rows(m: &BitMatrix) -> Vec<String> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    if m.get(i, j).expect("in range") {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect()
        })
        .collect()
}

/// Inverse of [`parse_group`].
pub fn group_to_string(g: &MatGroup) -> String {
    let blocks: Vec<String> = g
        .generator_matrices()
        .iter()
        .map(|m| matrix_rows(m).join("\n"))
        .collect();
    blocks.join("\n\n") + "\n"
}

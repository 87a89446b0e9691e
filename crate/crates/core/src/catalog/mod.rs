//! Known simple Lie algebras: built-in constructions and identification.

mod appendix;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::autgroup::isomorphism;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::f2linalg::BitMatrix;
use crate::lie::{matrix_lie_closure, LieAlgebra};

/// Where an entry's structure constants come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Written out explicitly by hand.
    Explicit,
    /// Matrix Lie closure of published generator matrices.
    AppendixMatrices,
    /// Scalar extension of a smaller entry.
    TensorConstruction,
    /// Loaded from a structure-constant file.
    UserFile,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Explicit => "paper-section",
            Provenance::AppendixMatrices => "appendix-matrices",
            Provenance::TensorConstruction => "tensor-construction",
            Provenance::UserFile => "user-file",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "paper-section" => Provenance::Explicit,
            "appendix-matrices" => Provenance::AppendixMatrices,
            "tensor-construction" => Provenance::TensorConstruction,
            "user-file" => Provenance::UserFile,
            other => return Err(Error::Parse(format!("unknown provenance `{other}`"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub names: Vec<String>,
    pub algebra: LieAlgebra,
    pub provenance: Provenance,
}

impl CatalogEntry {
    /// Validates the axioms and simplicity.
    pub fn new(
        id: impl Into<String>,
        names: Vec<String>,
        algebra: LieAlgebra,
        provenance: Provenance,
    ) -> Result<Self> {
        let id = id.into();
        let report = algebra.validate_axioms();
        if !report.is_valid() {
            return Err(Error::AxiomViolation(report.to_string()));
        }
        if !algebra.is_simple() {
            return Err(Error::AxiomViolation(format!("{id} is not simple")));
        }
        let algebra = algebra.with_label(id.clone());
        Ok(Self {
            id,
            names,
            algebra,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// `L_15_9` -> `L_{15,9}`.
pub fn display_name(id: &str) -> String {
    let mut parts = id.splitn(3, '_');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(head), Some(d), Some(i)) => format!("{head}_{{{d},{i}}}"),
        _ => id.to_string(),
    }
}

pub const BUILTIN_IDS: &[&str] = &[
    "L_3_1", "L_6_1", "L_9_1", "L_12_1", "L_15_1", "L_18_1", "L_15_9", "L_15_10", "L_15_11",
];

/// The 3-dimensional simple algebra `W(2)`.
pub fn l31() -> LieAlgebra {
    LieAlgebra::from_brackets(
        3,
        &[
            (0, 1, alloc::vec![2]),
            (0, 2, alloc::vec![0]),
            (1, 2, alloc::vec![0, 1]),
        ],
    )
    .expect("valid structure constants")
}

fn appendix_algebra(gens: &[[u16; 15]; 2]) -> Result<LieAlgebra> {
    let mats: Vec<BitMatrix> = gens
        .iter()
        .map(|rows| {
            let words: Vec<u64> = rows.iter().map(|&r| (r as u64) << 49).collect();
            BitMatrix::from_row_words(15, 15, &words)
        })
        .collect();
    Ok(matrix_lie_closure(&mats)?.algebra)
}

pub fn builtin(id: &str) -> Result<CatalogEntry> {
    let tensor = |k: u32, names: &[&str]| -> Result<CatalogEntry> {
        CatalogEntry::new(
            id,
            names.iter().map(|s| s.to_string()).collect(),
            l31().tensor_extend(k)?,
            Provenance::TensorConstruction,
        )
    };
    let appendix = |gens: &[[u16; 15]; 2]| -> Result<CatalogEntry> {
        CatalogEntry::new(
            id,
            Vec::new(),
            appendix_algebra(gens)?,
            Provenance::AppendixMatrices,
        )
    };
    match id {
        "L_3_1" => CatalogEntry::new(id, alloc::vec!["W(2)".into()], l31(), Provenance::Explicit),
        "L_6_1" => tensor(2, &["W(2) ⊗ F4"]),
        "L_9_1" => tensor(3, &["W(2) ⊗ F8", "V_9"]),
        "L_12_1" => tensor(4, &["W(2) ⊗ F16"]),
        "L_15_1" => tensor(5, &["W(2) ⊗ F32"]),
        "L_18_1" => tensor(6, &["W(2) ⊗ F64"]),
        "L_15_9" => appendix(&appendix::L_15_9),
        "L_15_10" => appendix(&appendix::L_15_10),
        "L_15_11" => appendix(&appendix::L_15_11),
        other => Err(Error::UnknownId(other.to_string())),
    }
}

/// A collection of entries with unique ids.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// All built-in entries.
    pub fn builtins() -> Result<Self> {
        let mut c = Self::new();
        for id in BUILTIN_IDS {
            c.insert(builtin(id)?)?;
        }
        Ok(c)
    }

    /// Adds an entry, replacing nothing: a duplicate id is an error.
    pub fn insert(&mut self, entry: CatalogEntry) -> Result<()> {
        if self.get(&entry.id).is_some() {
            return Err(Error::Parse(format!("duplicate catalog id `{}`", entry.id)));
        }
        self.entries.push(entry);
        self.entries.sort_by(|a, b| {
            id_key(&a.id)
                .cmp(&id_key(&b.id))
                .then_with(|| a.id.cmp(&b.id))
        });
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The id of the entry isomorphic to `l`, if any.
    pub fn identify(&self, l: &LieAlgebra, budget: &Budget) -> Result<Option<String>> {
        for e in self.entries.iter().filter(|e| e.dim() == l.dim()) {
            if isomorphism(l, &e.algebra, budget)?.is_isomorphic() {
                return Ok(Some(e.id.clone()));
            }
        }
        Ok(None)
    }
}

/// Sort key `(dim, index)` for ids of the form `L_d_i`.
pub fn id_key(id: &str) -> (usize, usize) {
    let mut parts = id
        .split('_')
        .skip(1)
        .map(|p| p.parse::<usize>().unwrap_or(usize::MAX));
    (
        parts.next().unwrap_or(usize::MAX),
        parts.next().unwrap_or(usize::MAX),
    )
}

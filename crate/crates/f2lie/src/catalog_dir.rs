//! Catalog directories: an `index.json` plus one structure-constant file per entry.
//!
//! ```text
//! {
//!   "entries": [
//!     {
//!       "id": "L_7_1",
//!       "names": ["W(3)"],
//!       "provenance": "user-file",
//!       "file": "L_7_1.json",
//!       "source": "derived algebra of the divided-power Witt algebra W(1;3)"
//!     }
//!   ]
//! }
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use f2lie_core::catalog::{Catalog, CatalogEntry, Provenance};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{load_algebra, save_algebra};

pub const INDEX_FILE: &str = "index.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub id: String,
    #[serde(default)]
    pub names: Vec<String>,
    pub provenance: String,
    pub file: String,
    /// How the structure constants were obtained.
    #[serde(default)]
    pub source: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Index {
    pub entries: Vec<IndexEntry>,
}

pub fn read_index(dir: &Path) -> Result<Index> {
    let path = dir.join(INDEX_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Syntax {
        path,
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

/// Loads and validates every entry listed in `dir/index.json`.
pub fn load_entries(dir: &Path) -> Result<Vec<(CatalogEntry, IndexEntry)>> {
    let index = read_index(dir)?;
    let mut out = Vec::new();
    for ie in index.entries {
        let path = dir.join(&ie.file);
        let algebra = load_algebra(&path)?;
        let provenance = Provenance::parse(&ie.provenance)?;
        let entry = CatalogEntry::new(ie.id.clone(), ie.names.clone(), algebra, provenance)
            .map_err(|e| Error::format(&path, e.to_string()))?;
        out.push((entry, ie));
    }
    Ok(out)
}

/// Built-in entries plus those of `dir`, if given.
pub fn open_catalog(dir: Option<&Path>) -> Result<Catalog> {
    let mut catalog = Catalog::builtins()?;
    if let Some(dir) = dir {
        for (entry, _) in load_entries(dir)? {
            catalog.insert(entry)?;
        }
    }
    Ok(catalog)
}

/// Writes the entries and an index describing them.
pub fn write_catalog_dir(dir: &Path, entries: &[(CatalogEntry, String)]) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut index = Index::default();
    for (entry, source) in entries {
        let file = format!("{}.json", entry.id);
        save_algebra(&entry.algebra, &dir.join(&file))?;
        index.entries.push(IndexEntry {
            id: entry.id.clone(),
            names: entry.names.clone(),
            provenance: entry.provenance.as_str().to_string(),
            file,
            source: source.clone(),
        });
    }
    let path = dir.join(INDEX_FILE);
    let text = serde_json::to_string_pretty(&index).expect("index serializes") + "\n";
    fs::write(&path, text).map_err(|e| Error::io(&path, e))
}

/// The repository's shipped catalog directory.
pub fn default_catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

//! Result tables in a fixed column order, rendered as JSON or TSV.

use std::collections::{BTreeMap, BTreeSet};

use f2lie_core::grading::{find_idempotents, grading_from_idempotent, superize};
use f2lie_core::lie::LieAlgebra;
use serde_json::{json, Value};

use crate::error::Result;

/// A table with a fixed column order.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_tsv(&self) -> String {
        let mut out = self.columns.join("\t");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(cell).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    /// `{"command", "partial", "columns", "rows"}`, rows as arrays.
    pub fn to_json(&self, command: &str, partial: bool) -> String {
        let v = json!({
            "command": command,
            "partial": partial,
            "columns": self.columns,
            "rows": self.rows,
        });
        serde_json::to_string_pretty(&v).expect("tables serialize") + "\n"
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// `1 x [1,2], 2 x [3,4]`.
pub fn format_orbit_summary(summary: &[(usize, [usize; 2])]) -> String {
    summary
        .iter()
        .map(|(m, [d0, d1])| format!("{m} x [{d0},{d1}]"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Idempotent data that needs no automorphism group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradingProfile {
    /// Number of non-central idempotents.
    pub idempotents: usize,
    pub signatures: BTreeSet<[usize; 2]>,
    /// Superization dimension -> number of idempotents giving it.
    pub superization_dims: BTreeMap<usize, usize>,
}

/// Grades and superizes along every non-central idempotent.
pub fn grading_profile(l: &LieAlgebra) -> Result<GradingProfile> {
    let mut p = GradingProfile::default();
    for e in find_idempotents(l)?.iter().filter(|e| !e.central) {
        let g = grading_from_idempotent(l, e)?;
        p.idempotents += 1;
        p.signatures.insert(g.signature());
        let s = superize(l, &g)?;
        *p.superization_dims.entry(s.dim()).or_default() += 1;
    }
    Ok(p)
}

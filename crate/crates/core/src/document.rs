//! JSON documents for blockers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::EdgeSet;

/// `{"n": .., "edges": [[a, b], ..], "metadata": {..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockerDocument {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl BlockerDocument {
    pub fn from_edge_set(b: &EdgeSet) -> Self {
        BlockerDocument {
            n: b.n(),
            edges: b.iter().map(|e| [e.a(), e.b()]).collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    /// Validated edge set; rejects out-of-range vertices, boundary edges,
    /// loops and repeats.
    pub fn to_edge_set(&self) -> Result<EdgeSet> {
        EdgeSet::from_pairs(self.n, self.edges.iter().map(|&[a, b]| (a, b)))
    }

    /// One edge per line, edges sorted, metadata keys sorted, trailing
    /// newline.
    pub fn to_json(&self) -> String {
        let mut edges: Vec<[usize; 2]> = self
            .edges
            .iter()
            .map(|&[a, b]| if a > b { [b, a] } else { [a, b] })
            .collect();
        edges.sort_unstable();
        let quote = |s: &str| serde_json::to_string(s).expect("strings serialize");
        let mut out = format!("{{\n  \"n\": {},\n  \"edges\": [", self.n);
        let rows: Vec<String> = edges
            .iter()
            .map(|[a, b]| format!("    [{a}, {b}]"))
            .collect();
        if !rows.is_empty() {
            out.push('\n');
            out.push_str(&rows.join(",\n"));
            out.push_str("\n  ");
        }
        out.push_str("],\n  \"metadata\": {");
        let meta: Vec<String> = self
            .metadata
            .iter()
            .map(|(k, v)| format!("    {}: {}", quote(k), quote(v)))
            .collect();
        if !meta.is_empty() {
            out.push('\n');
            out.push_str(&meta.join(",\n"));
            out.push_str("\n  ");
        }
        out.push_str("}\n}\n");
        out
    }
}

//! Published reference data: vertex lists of the edge-length polytopes for
//! `n = 7..14`, vertex and facet counts for `n = 6..14`, and the greedy path
//! encodings at `n = 8`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub stsp_vertices: u64,
    /// Unknown for `n >= 10`.
    pub stsp_facets: Option<u64>,
    pub el_vertices: usize,
    pub el_facets: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodingRow {
    /// Comma-separated, `x` for a skipped stripe.
    pub encoding: String,
    pub vector: Vec<usize>,
    pub condition: String,
    pub extended: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureTable {
    pub vertex_lists: BTreeMap<usize, Vec<Vec<usize>>>,
    pub counts: Vec<CountRow>,
    pub encodings_n8: Vec<EncodingRow>,
}

impl FixtureTable {
    /// Vertices for `n`, sorted lexicographically.
    pub fn vertices(&self, n: usize) -> Option<Vec<Vec<usize>>> {
        self.vertex_lists.get(&n).map(|v| {
            let mut v = v.clone();
            v.sort();
            v
        })
    }

    pub fn counts_for(&self, n: usize) -> Option<&CountRow> {
        self.counts.iter().find(|r| r.n == n)
    }
}

pub fn fixtures() -> &'static FixtureTable {
    static TABLE: OnceLock<FixtureTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let raw: BTreeMap<String, Vec<Vec<usize>>> =
            serde_json::from_str(include_str!("../data/vertices.json")).expect("embedded vertex lists");
        let vertex_lists = raw.into_iter().map(|(n, v)| (n.parse().expect("numeric key"), v)).collect();
        FixtureTable {
            vertex_lists,
            counts: serde_json::from_str(include_str!("../data/counts.json")).expect("embedded counts"),
            encodings_n8: serde_json::from_str(include_str!("../data/encodings_n8.json")).expect("embedded encodings"),
        }
    })
}

//! JSON and CSV formats for vector sets and hull summaries.
//!
//! A vector set is `{"n": 8, "vectors": [[8, 0, 0, 0], ...]}` in JSON, or a
//! CSV table with header `t1,...,td` and one vector per row (the instance size
//! is recovered from the row sum).

use serde::Deserialize;
use serde_json::{json, Value};

use crate::circulant::InstanceParams;
use crate::enumerate::VectorSet;
use crate::error::{Error, Result};
use crate::hull::HullSummary;
use crate::rational::{format, Rational};

#[derive(Deserialize)]
struct VectorSetFile {
    n: usize,
    vectors: Vec<Vec<usize>>,
}

pub fn vector_set_to_json(set: &VectorSet) -> Value {
    let vectors: Vec<&[usize]> = set.vectors().iter().map(|t| t.counts()).collect();
    json!({ "n": set.n(), "vectors": vectors })
}

pub fn vector_set_from_json(text: &str) -> Result<VectorSet> {
    let file: VectorSetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    VectorSet::from_vectors(&InstanceParams::new(file.n)?, file.vectors)
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn vector_set_to_csv(set: &VectorSet) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let d = set.n() / 2;
    w.write_record((1..=d).map(|i| format!("t{i}"))).expect("in-memory write");
    for t in set.vectors() {
        w.serialize(t.counts()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("ASCII output")
}

pub fn vector_set_from_csv(text: &str) -> Result<VectorSet> {
    let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = r.headers().map_err(csv_error)?.clone();
    let d = header.len();
    let expected: Vec<String> = (1..=d).map(|i| format!("t{i}")).collect();
    if d == 0 || header.iter().ne(expected.iter().map(String::as_str)) {
        return Err(Error::Parse(format!("expected header {}", expected.join(","))));
    }
    let rows: Vec<Vec<usize>> = r.deserialize().collect::<Result<_, _>>().map_err(csv_error)?;
    let n = rows
        .first()
        .map(|r| r.iter().sum::<usize>())
        .ok_or_else(|| Error::Parse("CSV input has no vectors".into()))?;
    if n / 2 != d {
        return Err(Error::Parse(format!("rows sum to {n}, which does not match {d} columns")));
    }
    VectorSet::from_vectors(&InstanceParams::new(n)?, rows)
}

/// Integral coordinates become JSON integers; others become `"p/q"` strings.
pub fn rational_to_json(q: &Rational) -> Value {
    if q.is_integer() {
        if let Ok(v) = format(q).parse::<i64>() {
            return json!(v);
        }
    }
    json!(format(q))
}

pub fn hull_summary_to_json(h: &HullSummary) -> Value {
    let vertices: Vec<Vec<Value>> = h.vertices.iter().map(|v| v.iter().map(rational_to_json).collect()).collect();
    json!({
        "vertex_count": h.vertex_count,
        "facet_count": h.facet_count,
        "affine_dim": h.affine_dim,
        "vertices": vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, parse};

    fn sample() -> VectorSet {
        VectorSet::from_vectors(&InstanceParams::new(6).unwrap(), vec![vec![6, 0, 0], vec![2, 2, 2], vec![0, 6, 0]])
            .unwrap()
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let text = vector_set_to_json(&s).to_string();
        assert_eq!(text, r#"{"n":6,"vectors":[[0,6,0],[2,2,2],[6,0,0]]}"#);
        assert_eq!(vector_set_from_json(&text).unwrap().vectors(), s.vectors());
    }

    #[test]
    fn csv_round_trip() {
        let s = sample();
        let text = vector_set_to_csv(&s);
        assert_eq!(text, "t1,t2,t3\n0,6,0\n2,2,2\n6,0,0\n");
        assert_eq!(vector_set_from_csv(&text).unwrap().vectors(), s.vectors());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(vector_set_from_json(r#"{"n": 6}"#).is_err());
        assert!(vector_set_from_json(r#"{"n": 6, "vectors": [[1, 1, 1]]}"#).is_err());
        assert!(vector_set_from_csv("a,b,c\n6,0,0\n").is_err());
        assert!(vector_set_from_csv("t1,t2\n6,0,0\n").is_err());
        assert!(vector_set_from_csv("t1,t2,t3\n").is_err());
        assert!(vector_set_from_csv("t1,t2,t3\n6,0,0\n5,0,0\n").is_err());
    }

    #[test]
    fn summary_json() {
        let h = HullSummary {
            vertex_count: 2,
            facet_count: Some(2),
            affine_dim: 1,
            vertices: vec![vec![from_int(0)], vec![parse("3/2").unwrap()]],
        };
        assert_eq!(
            hull_summary_to_json(&h).to_string(),
            r#"{"affine_dim":1,"facet_count":2,"vertex_count":2,"vertices":[[0],["3/2"]]}"#
        );
    }
}

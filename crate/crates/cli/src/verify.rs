use anyhow::Result;
use elpoly_core::{
    encoding_to_vector, enumerate_encodings, extend_to_cycle, fixtures, EncodingSequence, EnumerateOptions,
    HullSummary, InstanceParams,
};

use crate::{analyze, sorted_vertices, SHORT_MAX_N};

pub(crate) struct Report {
    pub(crate) lines: Vec<String>,
    pub(crate) pass: bool,
}

fn fmt_vec(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Compares a hull summary with the embedded vertex list and counts for `n`.
pub(crate) fn check_hull(n: usize, summary: &HullSummary) -> Report {
    let table = fixtures();
    let mut lines = Vec::new();
    let mut pass = true;
    let mut compared = false;
    if let Some(expected) = table.vertices(n) {
        compared = true;
        let expected: std::collections::BTreeSet<Vec<usize>> = expected.into_iter().collect();
        let got = sorted_vertices(summary);
        let missing: Vec<String> = expected.difference(&got).map(|v| fmt_vec(v)).collect();
        let extra: Vec<String> = got.difference(&expected).map(|v| fmt_vec(v)).collect();
        if !missing.is_empty() {
            pass = false;
            lines.push(format!("missing vertices: {}", missing.join(" ")));
        }
        if !extra.is_empty() {
            pass = false;
            lines.push(format!("extra vertices: {}", extra.join(" ")));
        }
    }
    if let Some(row) = table.counts_for(n) {
        compared = true;
        if summary.vertex_count != row.el_vertices {
            pass = false;
            lines.push(format!("vertex count {} != expected {}", summary.vertex_count, row.el_vertices));
        }
        match summary.facet_count {
            Some(f) if f != row.el_facets => {
                pass = false;
                lines.push(format!("facet count {f} != expected {}", row.el_facets));
            }
            None => {
                pass = false;
                lines.push("facet count not computed".to_string());
            }
            _ => {}
        }
    }
    if !compared {
        lines.push(format!("no reference data for n = {n}"));
        pass = false;
    }
    Report { lines, pass }
}

fn line(ok: bool, what: String) -> bool {
    println!("{} {what}", if ok { "PASS" } else { "FAIL" });
    ok
}

/// Every reference comparison reachable without long enumerations.
pub(crate) fn run() -> Result<bool> {
    let mut all = true;
    for n in 6..=SHORT_MAX_N {
        let set = elpoly_core::enumerate_cycle_vectors(&InstanceParams::new(n)?, &EnumerateOptions::default())?;
        let summary = analyze(&set, elpoly_core::hull::DEFAULT_MAX_FACET_DIM)?;
        let report = check_hull(n, &summary);
        let facets = summary.facet_count.map_or("?".to_string(), |f| f.to_string());
        all &= line(report.pass, format!("n = {n}: {} vertices, {facets} facets", summary.vertex_count));
        for l in report.lines {
            println!("  {l}");
        }
    }

    let params = InstanceParams::new(8)?;
    let rows = &fixtures().encodings_n8;
    let encodings = enumerate_encodings(&params)?;
    let listed: Vec<EncodingSequence> =
        rows.iter().map(|r| EncodingSequence::parse(&params, &r.encoding)).collect::<Result<_, _>>()?;
    let mut a: Vec<String> = encodings.iter().map(|s| s.to_string()).collect();
    let mut b: Vec<String> = listed.iter().map(|s| s.to_string()).collect();
    a.sort();
    b.sort();
    all &= line(a == b, format!("n = 8: {} encodings", encodings.len()));
    for (row, s) in rows.iter().zip(&listed) {
        let vector = encoding_to_vector(s, &params)?;
        let mut ok = vector.counts() == row.vector.as_slice();
        let mut what = format!("{s}: path {vector}");
        match extend_to_cycle(s, &params) {
            Ok(ext) => {
                ok &= ext.counts() == row.extended.as_slice();
                what += &format!(", extended {ext}");
            }
            Err(_) => what += ", extension undefined",
        }
        all &= line(ok, what);
    }
    println!("{}", if all { "ALL PASS" } else { "SOME CHECKS FAILED" });
    Ok(all)
}

//! Divisor constraints on path edge-length vectors and brute-force path
//! realizability.
//!
//! A Hamiltonian path on `[n]` can use at most `n - q` edges whose length is a
//! multiple of `q`, for every divisor `q` of `n`. These constraints (with
//! `sum t = n - 1`) are conjectured to be sufficient as well.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::circulant::{length_unchecked, EdgeKind, EdgeLengthVector, InstanceParams};
use crate::error::{Error, Result};
use crate::packing::Packing;

pub const DEFAULT_REALIZE_MAX_N: usize = 12;
pub const DEFAULT_COUNT_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BhrVerdict {
    pub feasible: bool,
    /// Smallest divisor whose constraint fails; present iff infeasible.
    pub violated_divisor: Option<usize>,
    /// Set only when the brute-force search has been run.
    pub realizable: Option<bool>,
}

/// Checks `sum_{q | i} t_i <= n - q` for every divisor `1 < q <= d` of `n`.
///
/// `q = n` is skipped: no length up to `d` is a multiple of `n`, so that
/// constraint is vacuous. The edge total is validated when the vector is
/// constructed.
pub fn check_bhr(t: &EdgeLengthVector, params: &InstanceParams) -> Result<BhrVerdict> {
    if t.kind() != EdgeKind::Path || t.n() != params.n {
        return Err(Error::InvalidVector(format!("expected a path vector for n = {}", params.n)));
    }
    let n = params.n;
    let violated = (2..=params.d).filter(|&q| n.is_multiple_of(q)).find(|&q| {
        let multiples: usize = (q..=params.d).step_by(q).map(|i| t.count(i)).sum();
        multiples > n - q
    });
    Ok(BhrVerdict { feasible: violated.is_none(), violated_divisor: violated, realizable: None })
}

fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound || n > 63 {
        return Err(Error::ResourceLimit { what, n, bound });
    }
    Ok(())
}

/// Whether some Hamiltonian path on `[n]` uses exactly `t_i` edges of each
/// length `i`.
///
/// Paths are rotated to start at vertex 1 and reflected so the first step goes
/// forward, which keeps every edge-length vector reachable.
pub fn realizable_path(t: &EdgeLengthVector, params: &InstanceParams, max_n: usize) -> Result<bool> {
    check_bound("path realizability search for", params.n, max_n)?;
    if t.kind() != EdgeKind::Path || t.n() != params.n {
        return Err(Error::InvalidVector(format!("expected a path vector for n = {}", params.n)));
    }
    let mut budget = t.counts().to_vec();
    let n = params.n;
    for len in 1..=params.d {
        if budget[len - 1] == 0 {
            continue;
        }
        budget[len - 1] -= 1;
        let second = params.shift(1, len);
        let visited = (1u64 << 1) | (1u64 << second);
        if realize_from(n, second, visited, 2, &mut budget) {
            return Ok(true);
        }
        budget[len - 1] += 1;
    }
    Ok(false)
}

fn realize_from(n: usize, v: usize, visited: u64, depth: usize, budget: &mut [usize]) -> bool {
    if depth == n {
        return true;
    }
    for len in 1..=budget.len() {
        if budget[len - 1] == 0 {
            continue;
        }
        let fwd = (v - 1 + len) % n + 1;
        let back = (v - 1 + n - len) % n + 1;
        for w in [fwd, back] {
            if visited & (1 << w) != 0 {
                continue;
            }
            budget[len - 1] -= 1;
            let found = realize_from(n, w, visited | (1 << w), depth + 1, budget);
            budget[len - 1] += 1;
            if found {
                return true;
            }
            if fwd == back {
                break;
            }
        }
    }
    false
}

/// Distinct edge-length vectors over all Hamiltonian paths on `[n]`, sorted.
pub fn realizable_path_vectors(params: &InstanceParams, max_n: usize) -> Result<Vec<EdgeLengthVector>> {
    check_bound("path multiset enumeration for", params.n, max_n)?;
    let n = params.n;
    let packing = Packing::new(n)?;
    let keys: HashSet<u64> = (1..=params.d)
        .into_par_iter()
        .map(|len| {
            let mut set = HashSet::new();
            let second = params.shift(1, len);
            let visited = (1u64 << 1) | (1u64 << second);
            collect_paths(n, &packing, second, visited, 2, packing.unit(len), &mut set);
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut out: Vec<EdgeLengthVector> = keys
        .into_iter()
        .map(|k| EdgeLengthVector::from_parts_unchecked(n, EdgeKind::Path, packing.unpack(k)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn collect_paths(
    n: usize,
    packing: &Packing,
    v: usize,
    visited: u64,
    depth: usize,
    key: u64,
    out: &mut HashSet<u64>,
) {
    if depth == n {
        out.insert(key);
        return;
    }
    for w in 1..=n {
        if visited & (1 << w) == 0 {
            let len = length_unchecked(v, w, n);
            collect_paths(n, packing, w, visited | (1 << w), depth + 1, key + packing.unit(len), out);
        }
    }
}

/// Number of distinct edge-length vectors realized by Hamiltonian paths on `[n]`.
pub fn count_realizable_multisets(params: &InstanceParams, max_n: usize) -> Result<usize> {
    realizable_path_vectors(params, max_n).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize) -> InstanceParams {
        InstanceParams::new(n).unwrap()
    }

    fn path(n: usize, t: &[usize]) -> EdgeLengthVector {
        EdgeLengthVector::new(&params(n), EdgeKind::Path, t.to_vec()).unwrap()
    }

    #[test]
    fn verdicts() {
        let v = check_bhr(&path(4, &[0, 3]), &params(4)).unwrap();
        assert_eq!(v, BhrVerdict { feasible: false, violated_divisor: Some(2), realizable: None });
        assert!(check_bhr(&path(4, &[2, 1]), &params(4)).unwrap().feasible);
        let v = check_bhr(&path(12, &[0, 10, 0, 0, 0, 1]), &params(12)).unwrap();
        assert_eq!(v.violated_divisor, Some(2));
        // Prime n has no constraints beyond the total.
        assert!(check_bhr(&path(7, &[0, 0, 6]), &params(7)).unwrap().feasible);
    }

    #[test]
    fn smallest_violated_divisor_reported() {
        // n = 12, t_6 = 11: q = 2, 3 and 6 all fail; report 2.
        let v = check_bhr(&path(12, &[0, 0, 0, 0, 0, 11]), &params(12)).unwrap();
        assert_eq!(v.violated_divisor, Some(2));
        // n = 12, t_3 = 10, t_1 = 1: q = 3 fails (10 > 9), q = 2 holds.
        let v = check_bhr(&path(12, &[1, 0, 10, 0, 0, 0]), &params(12)).unwrap();
        assert_eq!(v.violated_divisor, Some(3));
    }

    #[test]
    fn rejects_cycle_vectors() {
        let c = EdgeLengthVector::new(&params(4), EdgeKind::Cycle, vec![4, 0]).unwrap();
        assert!(check_bhr(&c, &params(4)).is_err());
    }

    #[test]
    fn realizability() {
        let max = DEFAULT_REALIZE_MAX_N;
        assert!(realizable_path(&path(4, &[1, 2]), &params(4), max).unwrap());
        assert!(!realizable_path(&path(4, &[0, 3]), &params(4), max).unwrap());
        assert!(realizable_path(&path(8, &[1, 2, 0, 4]), &params(8), max).unwrap());
        assert!(matches!(
            realizable_path(&path(13, &[12, 0, 0, 0, 0, 0]), &params(13), max),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(count_realizable_multisets(&params(3), 10).unwrap(), 1);
        assert_eq!(count_realizable_multisets(&params(4), 10).unwrap(), 3);
        assert!(count_realizable_multisets(&params(11), 10).is_err());
    }
}

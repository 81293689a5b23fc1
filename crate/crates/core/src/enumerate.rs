//! Exhaustive enumeration of Hamiltonian-cycle edge-length vectors.
//!
//! Each undirected cycle is visited once in canonical form: vertex 1 first and
//! the second vertex smaller than the last. The search space is split by the
//! first two vertices after 1; parts are searched independently and merged in
//! prefix order, so the output (including witnesses) does not depend on the
//! worker count.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::circulant::{length_unchecked, EdgeKind, EdgeLengthVector, InstanceParams};
use crate::error::{Error, Result};
use crate::packing::Packing;

/// Largest `n` enumerated by default.
pub const DEFAULT_MAX_N: usize = 13;
/// Largest `n` reachable with the long-running opt-in (about 3.1e9 cycles).
pub const LONG_MAX_N: usize = 14;
/// Witness cycles are retained for at most this many vectors.
pub const MAX_WITNESSES: usize = 1000;

pub type ProgressFn = Arc<dyn Fn(usize, usize) + Send + Sync>;

#[derive(Clone)]
pub struct EnumerateOptions {
    pub max_n: usize,
    /// Called with `(parts_done, parts_total)` as parts of the search finish.
    pub progress: Option<ProgressFn>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { max_n: DEFAULT_MAX_N, progress: None }
    }
}

impl std::fmt::Debug for EnumerateOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnumerateOptions")
            .field("max_n", &self.max_n)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

/// Sorted, deduplicated cycle edge-length vectors for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorSet {
    n: usize,
    vectors: Vec<EdgeLengthVector>,
    /// Lexicographically smallest canonical cycle realizing each of the first
    /// `MAX_WITNESSES` vectors.
    witnesses: Vec<Vec<usize>>,
    cycles_visited: Option<u64>,
}

impl VectorSet {
    /// Builds a set from arbitrary cycle vectors, sorting and deduplicating.
    pub fn from_vectors(params: &InstanceParams, vectors: Vec<Vec<usize>>) -> Result<Self> {
        let mut vectors = vectors
            .into_iter()
            .map(|t| {
                let v = EdgeLengthVector::new(params, EdgeKind::Cycle, t)?;
                if !v.respects_diameter_bound() {
                    return Err(Error::InvalidVector(format!("{v} uses more than n/2 diameter edges")));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        vectors.sort_unstable();
        vectors.dedup();
        Ok(Self { n: params.n, vectors, witnesses: Vec::new(), cycles_visited: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[EdgeLengthVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Number of cycles the enumerator walked, when this set came from one.
    pub fn cycles_visited(&self) -> Option<u64> {
        self.cycles_visited
    }

    /// A cycle (vertex order starting at 1) realizing `t`, if retained.
    pub fn witness(&self, t: &EdgeLengthVector) -> Option<&[usize]> {
        let idx = self.vectors.binary_search(t).ok()?;
        self.witnesses.get(idx).map(Vec::as_slice)
    }
}

pub fn contains_vector(set: &VectorSet, t: &EdgeLengthVector) -> Result<bool> {
    if t.n() != set.n {
        return Err(Error::DimensionMismatch { expected: set.n, got: t.n() });
    }
    Ok(set.vectors.binary_search(t).is_ok())
}

/// `(n - 1)! / 2`, the number of Hamiltonian cycles on `n` labelled vertices.
pub fn cycle_count(params: &InstanceParams) -> Result<u128> {
    let overflow = || Error::ResourceLimit { what: "cycle count for", n: params.n, bound: 35 };
    let mut f: u128 = 1;
    for i in 2..params.n as u128 {
        f = f.checked_mul(i).ok_or_else(overflow)?;
    }
    Ok(if params.n == 3 { 1 } else { f / 2 })
}

#[derive(Default)]
struct IdentityHasher(u64);

impl Hasher for IdentityHasher {
    fn finish(&self) -> u64 {
        // Fibonacci hashing spreads the packed fields over the high bits.
        self.0.wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }
    fn write(&mut self, _: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }
    fn write_u64(&mut self, v: u64) {
        self.0 = v;
    }
}

type KeyMap<V> = HashMap<u64, V, BuildHasherDefault<IdentityHasher>>;

struct Search<'a> {
    /// `unit[v][w]`: key increment for the edge `{v, w}`.
    unit: &'a [Vec<u64>],
    second: usize,
    path: Vec<usize>,
    found: KeyMap<Vec<usize>>,
    visited_cycles: u64,
}

impl Search<'_> {
    fn run(&mut self, v: usize, unvisited: u64, key: u64) {
        let remaining = unvisited.count_ones();
        if remaining == 1 {
            let last = unvisited.trailing_zeros() as usize;
            if last > self.second {
                let key = key + self.unit[v][last] + self.unit[last][1];
                self.visited_cycles += 1;
                if !self.found.contains_key(&key) {
                    let mut cycle = self.path.clone();
                    cycle.push(last);
                    self.found.insert(key, cycle);
                }
            }
            return;
        }
        // Some vertex above `second` must stay unvisited to close canonically.
        if (unvisited >> (self.second + 1)) == 0 {
            return;
        }
        let mut rest = unvisited;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.path.push(w);
            self.run(w, unvisited & !(1 << w), key + self.unit[v][w]);
            self.path.pop();
        }
    }
}

/// All distinct edge-length vectors of Hamiltonian cycles on `[n]`.
pub fn enumerate_cycle_vectors(params: &InstanceParams, opts: &EnumerateOptions) -> Result<VectorSet> {
    let n = params.n;
    if n > opts.max_n {
        return Err(Error::ResourceLimit { what: "cycle enumeration for", n, bound: opts.max_n });
    }
    let packing = Packing::new(n)?;
    if n > 63 {
        return Err(Error::ResourceLimit { what: "cycle enumeration for", n, bound: 63 });
    }
    let mut unit = vec![vec![0u64; n + 1]; n + 1];
    for v in 1..=n {
        for w in 1..=n {
            if v != w {
                unit[v][w] = packing.unit(length_unchecked(v, w, n));
            }
        }
    }

    if n == 3 {
        let t = vec![3];
        let set = VectorSet {
            n,
            vectors: vec![EdgeLengthVector::from_parts_unchecked(n, EdgeKind::Cycle, t)],
            witnesses: vec![vec![1, 2, 3]],
            cycles_visited: Some(1),
        };
        return Ok(set);
    }

    // Parts are (second, third) vertex prefixes, in lexicographic order.
    let prefixes: Vec<(usize, usize)> = (2..=n)
        .flat_map(|a| (2..=n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let total = prefixes.len();
    let done = AtomicUsize::new(0);
    let all: u64 = ((1u64 << (n + 1)) - 1) & !0b11;

    let parts: Vec<(KeyMap<Vec<usize>>, u64)> = prefixes
        .par_iter()
        .map(|&(a, b)| {
            let mut search = Search {
                unit: &unit,
                second: a,
                path: vec![1, a, b],
                found: KeyMap::default(),
                visited_cycles: 0,
            };
            let key = unit[1][a] + unit[a][b];
            search.run(b, all & !(1 << a) & !(1 << b), key);
            if let Some(progress) = &opts.progress {
                progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            }
            (search.found, search.visited_cycles)
        })
        .collect();

    let mut merged: KeyMap<Vec<usize>> = KeyMap::default();
    let mut visited = 0u64;
    for (found, count) in parts {
        visited += count;
        for (key, cycle) in found {
            merged
                .entry(key)
                .and_modify(|w| {
                    if cycle < *w {
                        *w = cycle.clone();
                    }
                })
                .or_insert(cycle);
        }
    }
    debug_assert_eq!(Some(visited as u128), cycle_count(params).ok());

    let mut entries: Vec<(Vec<usize>, Vec<usize>)> =
        merged.into_iter().map(|(k, w)| (packing.unpack(k), w)).collect();
    entries.sort_unstable();
    let mut vectors = Vec::with_capacity(entries.len());
    let mut witnesses = Vec::new();
    for (t, w) in entries {
        vectors.push(EdgeLengthVector::from_parts_unchecked(n, EdgeKind::Cycle, t));
        if witnesses.len() < MAX_WITNESSES {
            witnesses.push(w);
        }
    }
    Ok(VectorSet { n, vectors, witnesses, cycles_visited: Some(visited) })
}

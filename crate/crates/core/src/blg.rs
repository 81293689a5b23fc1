//! BLG paths on `n = 2^k` vertices.
//!
//! A BLG path is the greedy minimum-cost Hamiltonian path for some circulant
//! cost vector. When `n` is a power of two such paths are in bijection with
//! encoding sequences `(s_1, ..., s_k)`: `s_i` is either the single length
//! used from stripe class `S_i` or a skip, and `s_k` is never skipped.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::circulant::{
    edge_length, stripe_partition, CirculantCosts, EdgeKind, EdgeLengthVector, InstanceParams,
};
use crate::error::{Error, Result};
use crate::gseq::{g_sequence, CostPermutation};
use crate::rational::from_int;

/// One position of an encoding sequence. `Skip` orders before every length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EncodingEntry {
    Skip,
    Length(usize),
}

impl EncodingEntry {
    pub fn length(self) -> Option<usize> {
        match self {
            EncodingEntry::Skip => None,
            EncodingEntry::Length(l) => Some(l),
        }
    }

    pub fn is_skip(self) -> bool {
        self == EncodingEntry::Skip
    }
}

impl fmt::Display for EncodingEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EncodingEntry::Skip => write!(f, "x"),
            EncodingEntry::Length(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodingSequence {
    entries: Vec<EncodingEntry>,
}

impl EncodingSequence {
    pub fn new(params: &InstanceParams, entries: Vec<EncodingEntry>) -> Result<Self> {
        let stripes = stripe_partition(params)?;
        let k = stripes.len();
        let bad = |why: String| Err(Error::InvalidEncoding(why));
        if entries.len() != k {
            return bad(format!("expected {k} entries for n = {}, got {}", params.n, entries.len()));
        }
        for (i, e) in entries.iter().enumerate() {
            match *e {
                EncodingEntry::Skip if i + 1 == k => return bad("the last entry cannot be skipped".into()),
                EncodingEntry::Skip => {}
                EncodingEntry::Length(l) => {
                    if !stripes.class(i + 1).contains(&l) {
                        return bad(format!("length {l} is not in stripe class S_{}", i + 1));
                    }
                }
            }
        }
        Ok(Self { entries })
    }

    /// Parses `"x,2,1"` (or with parentheses and spaces).
    pub fn parse(params: &InstanceParams, s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|tok| match tok.trim() {
                "x" | "X" => Ok(EncodingEntry::Skip),
                t => t
                    .parse()
                    .map(EncodingEntry::Length)
                    .map_err(|_| Error::Parse(format!("bad encoding entry {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, entries)
    }

    pub fn entries(&self) -> &[EncodingEntry] {
        &self.entries
    }

    /// `s_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> EncodingEntry {
        self.entries[i - 1]
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    /// The used lengths with their 1-based stripe index, in order.
    pub fn used(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().enumerate().filter_map(|(i, e)| e.length().map(|l| (i + 1, l)))
    }

    /// Length of the final (never skipped) entry.
    pub fn last_length(&self) -> usize {
        self.entries.last().and_then(|e| e.length()).expect("last entry is a length")
    }
}

impl fmt::Display for EncodingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

// JSON form: ["x", 2, 1]
impl Serialize for EncodingSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            match e {
                EncodingEntry::Skip => seq.serialize_element("x")?,
                EncodingEntry::Length(l) => seq.serialize_element(l)?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for EncodingSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Len(usize),
            Marker(String),
        }

        struct SeqVisitor;
        impl<'de> Visitor<'de> for SeqVisitor {
            type Value = Vec<EncodingEntry>;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of \"x\" markers and positive integers")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(raw) = seq.next_element::<Raw>()? {
                    out.push(match raw {
                        Raw::Len(l) => EncodingEntry::Length(l),
                        Raw::Marker(m) if m == "x" => EncodingEntry::Skip,
                        Raw::Marker(m) => return Err(de::Error::custom(format!("unknown marker {m:?}"))),
                    });
                }
                Ok(out)
            }
        }

        // Stripe membership needs n, which the JSON form does not carry; callers
        // re-validate with `EncodingSequence::new`.
        deserializer.deserialize_seq(SeqVisitor).map(|entries| EncodingSequence { entries })
    }
}

/// All encoding sequences in lexicographic order.
pub fn enumerate_encodings(params: &InstanceParams) -> Result<Vec<EncodingSequence>> {
    let stripes = stripe_partition(params)?;
    let k = stripes.len();
    let choices: Vec<Vec<EncodingEntry>> = (1..=k)
        .map(|i| {
            let lengths = stripes.class(i).iter().map(|&l| EncodingEntry::Length(l));
            if i < k {
                std::iter::once(EncodingEntry::Skip).chain(lengths).collect()
            } else {
                lengths.collect()
            }
        })
        .collect();

    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    'outer: loop {
        out.push(EncodingSequence { entries: idx.iter().zip(&choices).map(|(&j, c)| c[j]).collect() });
        // odometer, last position fastest
        for pos in (0..k).rev() {
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    Ok(out)
}

/// Number of BLG paths (equivalently encoding sequences) on `n = 2^k` vertices.
///
/// Uses `2^k prod_{i=1}^{k-3} (2^i + 1)` for `k >= 4` and the direct product of
/// choice counts below that.
pub fn count_blg(params: &InstanceParams) -> Result<BigUint> {
    let k = params.power_of_two()?;
    if k >= 4 {
        let mut count = BigUint::one() << k;
        for i in 1..=k - 3 {
            count *= (BigUint::one() << i) + 1u32;
        }
        Ok(count)
    } else {
        let stripes = stripe_partition(params)?;
        let kk = stripes.len();
        Ok((1..=kk)
            .map(|i| stripes.class(i).len() + usize::from(i < kk))
            .fold(BigUint::one(), |acc, c| acc * c))
    }
}

/// Edge-length vector of the BLG path encoded by `s`.
pub fn encoding_to_vector(s: &EncodingSequence, params: &InstanceParams) -> Result<EdgeLengthVector> {
    let k = params.power_of_two()? as usize;
    if s.k() != k {
        return Err(Error::InvalidEncoding(format!("{s} has {} entries, expected {k}", s.k())));
    }
    let mut t = vec![0; params.d];
    let mut prev_g = params.n;
    for (i, l) in s.used() {
        let g = 1usize << (k - i);
        t[l - 1] = prev_g - g;
        prev_g = g;
    }
    Ok(EdgeLengthVector::from_parts_unchecked(params.n, EdgeKind::Path, t))
}

/// Integer costs realizing `s`: `c_{s_i} = i` for each used entry, and the
/// remaining lengths get `k+1, k+2, ...` in ascending length order.
pub fn encoding_to_costs(s: &EncodingSequence, params: &InstanceParams) -> Result<CirculantCosts> {
    let k = params.power_of_two()? as i64;
    let mut costs = vec![None; params.d];
    for (i, l) in s.used() {
        costs[l - 1] = Some(i as i64);
    }
    let mut next = k + 1;
    let costs: Vec<_> = costs
        .into_iter()
        .map(|c| {
            from_int(c.unwrap_or_else(|| {
                next += 1;
                next - 1
            }))
        })
        .collect();
    CirculantCosts::new(params, costs)
}

/// The cost permutation induced by [`encoding_to_costs`].
pub fn encoding_to_permutation(s: &EncodingSequence, params: &InstanceParams) -> Result<CostPermutation> {
    Ok(CostPermutation::from_costs(&encoding_to_costs(s, params)?))
}

/// Reads off the encoding of the greedy path for `phi`: the lengths at which
/// the g-sequence drops, placed at their stripe positions.
pub fn encoding_of_permutation(phi: &CostPermutation, params: &InstanceParams) -> Result<EncodingSequence> {
    let stripes = stripe_partition(params)?;
    let gs = g_sequence(phi, params);
    let mut entries = vec![EncodingEntry::Skip; stripes.len()];
    for i in 1..=gs.ell {
        if gs.g[i] < gs.g[i - 1] {
            let l = phi.at(i);
            let class = stripes.class_of(l).expect("every length has a class");
            entries[class - 1] = EncodingEntry::Length(l);
        }
    }
    EncodingSequence::new(params, entries)
}

/// A sequence of distinct vertices of `[n]`, read as a path or, closed up, a
/// cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath {
    n: usize,
    order: Vec<usize>,
}

impl VertexPath {
    pub fn new(n: usize, order: Vec<usize>) -> Self {
        Self { n, order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn first(&self) -> usize {
        self.order[0]
    }

    pub fn last(&self) -> usize {
        self.order[self.order.len() - 1]
    }

    /// Visits each of `1..=n` exactly once.
    pub fn is_hamiltonian(&self) -> bool {
        if self.order.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n + 1];
        self.order.iter().all(|&v| v >= 1 && v <= self.n && !std::mem::replace(&mut seen[v], true))
    }

    pub fn path_vector(&self) -> Result<EdgeLengthVector> {
        EdgeLengthVector::of_vertex_sequence(&InstanceParams::new(self.n)?, &self.order, EdgeKind::Path)
    }

    /// Vector of the cycle obtained by adding the edge between the endpoints.
    pub fn cycle_vector(&self) -> Result<EdgeLengthVector> {
        EdgeLengthVector::of_vertex_sequence(&InstanceParams::new(self.n)?, &self.order, EdgeKind::Cycle)
    }

    /// Length of the edge `{last, first}`.
    pub fn closing_length(&self) -> Result<usize> {
        edge_length(self.first(), self.last(), self.n)
    }
}

/// Builds the greedy Hamiltonian path for `phi` explicitly.
///
/// Starts from vertex 1 following length-`phi(1)` edges through the class
/// `v = 1 (mod g_1)`. Each later stage where the g-sequence drops copies the
/// current path at offsets `t * phi(j)` for `t = 0..g_{j-1}/g_j` and chains the
/// copies: copy `t` joins copy `t+1` at their last vertices for even `t` and at
/// their first vertices for odd `t`, so odd copies are walked in reverse.
pub fn build_blg_path(phi: &CostPermutation, params: &InstanceParams) -> VertexPath {
    let gs = g_sequence(phi, params);
    let step = phi.at(1);
    let mut path: Vec<usize> = Vec::with_capacity(params.n);
    let mut v = 1;
    for _ in 0..params.n / gs.g[1] {
        path.push(v);
        v = params.shift(v, step);
    }
    for j in 2..=gs.ell {
        let copies = gs.g[j - 1] / gs.g[j];
        if copies == 1 {
            continue;
        }
        let shift = phi.at(j);
        let mut merged = Vec::with_capacity(path.len() * copies);
        for t in 0..copies {
            let offset = t * shift;
            let translate = path.iter().map(|&u| params.shift(u, offset));
            if t % 2 == 0 {
                merged.extend(translate);
            } else {
                merged.extend(translate.rev());
            }
        }
        path = merged;
    }
    VertexPath { n: params.n, order: path }
}

fn require_extensible(s: &EncodingSequence) -> Result<()> {
    let k = s.k();
    if k < 2 || s.get(k - 1).is_skip() {
        return Err(Error::ExtensionUndefined(s.to_string()));
    }
    Ok(())
}

/// The BLG path of `s` closed with one more length-`s_k` edge.
pub fn extend_to_cycle(s: &EncodingSequence, params: &InstanceParams) -> Result<EdgeLengthVector> {
    require_extensible(s)?;
    encoding_to_vector(s, params)?.close_with(s.last_length())
}

/// The explicit Hamiltonian cycle behind [`extend_to_cycle`]: the constructed
/// BLG path, whose endpoints are `1` and `1 + s_k`.
pub fn extended_cycle(s: &EncodingSequence, params: &InstanceParams) -> Result<VertexPath> {
    require_extensible(s)?;
    Ok(build_blg_path(&encoding_to_permutation(s, params)?, params))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLowerBound {
    /// `2^(k-2) prod_{i=1}^{k-3} (2^i + 1)`
    pub bound: BigUint,
    /// `2^((k^2 - 3k - 4) / 2)`, strictly below `bound`.
    pub crude: BigUint,
}

/// Lower bound on the vertex count of the edge-length polytope for `n = 2^k`,
/// `k >= 4`.
pub fn lower_bound_vertices(params: &InstanceParams) -> Result<VertexLowerBound> {
    let k = params.power_of_two()?;
    if k < 4 {
        return Err(Error::OutOfRange { k, min: 4 });
    }
    let mut bound = BigUint::one() << (k - 2);
    for i in 1..=k - 3 {
        bound *= (BigUint::one() << i) + 1u32;
    }
    // (k^2 - 3k - 4) / 2 = (k - 4)(k + 1) / 2
    let crude = BigUint::one() << ((k - 4) * (k + 1) / 2);
    Ok(VertexLowerBound { bound, crude })
}

#[cfg(test)]
mod tests {
    use super::*;
    use EncodingEntry::{Length as L, Skip as X};

    fn params(n: usize) -> InstanceParams {
        InstanceParams::new(n).unwrap()
    }

    fn enc(n: usize, s: &str) -> EncodingSequence {
        EncodingSequence::parse(&params(n), s).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let p = params(4);
        let all = enumerate_encodings(&p).unwrap();
        assert_eq!(all, vec![enc(4, "x,1"), enc(4, "2,1")]);
        let all = enumerate_encodings(&params(8)).unwrap();
        let shown: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            shown,
            [
                "(x, x, 1)", "(x, x, 3)", "(x, 2, 1)", "(x, 2, 3)",
                "(4, x, 1)", "(4, x, 3)", "(4, 2, 1)", "(4, 2, 3)"
            ]
        );
        assert_eq!(enumerate_encodings(&params(16)).unwrap().len(), 48);
        assert_eq!(enumerate_encodings(&params(12)), Err(Error::UnsupportedModulus(12)));
    }

    #[test]
    fn counts() {
        assert_eq!(count_blg(&params(4)).unwrap(), 2u32.into());
        assert_eq!(count_blg(&params(8)).unwrap(), 8u32.into());
        assert_eq!(count_blg(&params(16)).unwrap(), 48u32.into());
        assert_eq!(count_blg(&params(32)).unwrap(), 480u32.into());
        assert!(count_blg(&params(24)).is_err());
    }

    #[test]
    fn vectors() {
        assert_eq!(encoding_to_vector(&enc(8, "x,2,1"), &params(8)).unwrap().counts(), &[1, 6, 0, 0]);
        assert_eq!(encoding_to_vector(&enc(8, "4,x,3"), &params(8)).unwrap().counts(), &[0, 0, 3, 4]);
        let v = encoding_to_vector(&enc(16, "x,x,2,1"), &params(16)).unwrap();
        assert_eq!(v.counts(), &[1, 14, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn costs() {
        let p = params(8);
        let c = encoding_to_costs(&enc(8, "4,2,1"), &p).unwrap();
        assert_eq!(c, CirculantCosts::from_integers(&p, &[3, 2, 4, 1]).unwrap());
        let c = encoding_to_costs(&enc(8, "x,x,3"), &p).unwrap();
        assert_eq!(c, CirculantCosts::from_integers(&p, &[4, 5, 3, 6]).unwrap());
        let phi = encoding_to_permutation(&enc(8, "x,x,3"), &p).unwrap();
        assert_eq!(crate::gseq::blg_edge_multiset(&phi, &p).counts(), &[0, 0, 7, 0]);

        let p = params(16);
        let phi = encoding_to_permutation(&enc(16, "8,4,2,1"), &p).unwrap();
        assert_eq!(&g_sequence(&phi, &p).g[..5], &[16, 8, 4, 2, 1]);
        assert_eq!(crate::gseq::blg_edge_multiset(&phi, &p).counts(), &[1, 2, 0, 4, 0, 0, 0, 8]);
    }

    #[test]
    fn path_for_prefix_8_10_7() {
        let p = params(32);
        let phi = CostPermutation::from_prefix(&p, &[8, 10, 7]).unwrap();
        let path = build_blg_path(&phi, &p);
        assert!(path.is_hamiltonian());
        assert_eq!(&path.order()[..4], &[1, 9, 17, 25]);
        // second stage as drawn: 1 9 17 25 | 3 27 19 11 | 21 29 5 13 | 23 15 7 31
        assert_eq!(
            &path.order()[..16],
            &[1, 9, 17, 25, 3, 27, 19, 11, 21, 29, 5, 13, 23, 15, 7, 31]
        );
        assert_eq!(path.last(), 8);
        assert_eq!(path.path_vector().unwrap(), crate::gseq::blg_edge_multiset(&phi, &p));
    }

    #[test]
    fn trivial_and_n8_paths() {
        let p = params(8);
        let phi = CostPermutation::new(&p, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(build_blg_path(&phi, &p).order(), &[1, 2, 3, 4, 5, 6, 7, 8]);
        let phi = CostPermutation::new(&p, vec![4, 2, 1, 3]).unwrap();
        let path = build_blg_path(&phi, &p);
        assert!(path.is_hamiltonian());
        assert_eq!(path.path_vector().unwrap().counts(), &[1, 2, 0, 4]);
    }

    #[test]
    fn extension() {
        let p = params(8);
        assert_eq!(extend_to_cycle(&enc(8, "x,2,1"), &p).unwrap().counts(), &[2, 6, 0, 0]);
        assert_eq!(extend_to_cycle(&enc(8, "4,2,3"), &p).unwrap().counts(), &[0, 2, 2, 4]);
        assert!(matches!(extend_to_cycle(&enc(8, "4,x,1"), &p), Err(Error::ExtensionUndefined(_))));
        let s = enc(16, "x,x,2,1");
        let v = extend_to_cycle(&s, &params(16)).unwrap();
        assert_eq!((v.count(1), v.count(2)), (2, 14));
        let cycle = extended_cycle(&s, &params(16)).unwrap();
        assert!(cycle.is_hamiltonian());
        assert_eq!((cycle.first(), cycle.last()), (1, 2));
        assert_eq!(cycle.cycle_vector().unwrap(), v);
    }

    #[test]
    fn bounds() {
        let b = lower_bound_vertices(&params(16)).unwrap();
        assert_eq!((b.bound, b.crude), (12u32.into(), 1u32.into()));
        let b = lower_bound_vertices(&params(32)).unwrap();
        assert_eq!(b.bound, 120u32.into());
        assert!(b.crude < b.bound);
        assert_eq!(lower_bound_vertices(&params(8)), Err(Error::OutOfRange { k: 3, min: 4 }));
    }

    #[test]
    fn validation() {
        let p = params(8);
        assert!(EncodingSequence::new(&p, vec![L(4), L(2), X]).is_err());
        assert!(EncodingSequence::new(&p, vec![L(2), L(2), L(1)]).is_err());
        assert!(EncodingSequence::new(&p, vec![X, L(1)]).is_err());
        assert!(EncodingSequence::new(&p, vec![X, X, L(3)]).is_ok());
    }

    #[test]
    fn json_form() {
        let s = enc(8, "x,2,1");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["x",2,1]"#);
        let back: EncodingSequence = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<EncodingSequence>(r#"["y",1]"#).is_err());
    }

    #[test]
    fn reverse_map() {
        let p = params(16);
        for s in enumerate_encodings(&p).unwrap() {
            let phi = encoding_to_permutation(&s, &p).unwrap();
            assert_eq!(encoding_of_permutation(&phi, &p).unwrap(), s);
        }
    }
}

//! Circulant instances: edge lengths, cost vectors, edge-length vectors,
//! stripe classes and circulant graphs.
//!
//! Vertices are numbered `1..=n`, and all vertex arithmetic wraps into that
//! range.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Size parameters of a circulant instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InstanceParams {
    pub n: usize,
    /// Largest edge length, `floor(n / 2)`.
    pub d: usize,
    /// `Some(k)` when `n = 2^k` with `k >= 2`.
    pub k: Option<u32>,
}

impl InstanceParams {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize(n));
        }
        let k = (n.is_power_of_two()).then(|| n.trailing_zeros());
        Ok(Self { n, d: n / 2, k })
    }

    /// The exponent `k` for `n = 2^k`, or an unsupported-modulus error.
    pub fn power_of_two(&self) -> Result<u32> {
        self.k.ok_or(Error::UnsupportedModulus(self.n))
    }

    /// Wraps `v + delta` back into `1..=n`.
    pub fn shift(&self, v: usize, delta: usize) -> usize {
        (v - 1 + delta) % self.n + 1
    }
}

/// Length of the edge `{i, j}`: `min(|i - j|, n - |i - j|)`.
pub fn edge_length(i: usize, j: usize, n: usize) -> Result<usize> {
    if i == j || i == 0 || j == 0 || i > n || j > n {
        return Err(Error::InvalidEdge { i, j, n });
    }
    let diff = i.abs_diff(j);
    Ok(diff.min(n - diff))
}

/// Unchecked variant for hot loops over known-valid vertices.
#[inline]
pub(crate) fn length_unchecked(i: usize, j: usize, n: usize) -> usize {
    let diff = i.abs_diff(j);
    diff.min(n - diff)
}

/// One exact cost per edge length, `c_1..c_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantCosts {
    costs: Vec<Rational>,
}

impl CirculantCosts {
    pub fn new(params: &InstanceParams, costs: Vec<Rational>) -> Result<Self> {
        if costs.len() != params.d {
            return Err(Error::DimensionMismatch { expected: params.d, got: costs.len() });
        }
        Ok(Self { costs })
    }

    pub fn from_integers(params: &InstanceParams, costs: &[i64]) -> Result<Self> {
        Self::new(params, costs.iter().map(|&c| rational::from_int(c)).collect())
    }

    /// Parses a comma-separated list of integers or `p/q` fractions.
    pub fn parse(params: &InstanceParams, s: &str) -> Result<Self> {
        let costs = s.split(',').map(rational::parse).collect::<Result<Vec<_>>>()?;
        Self::new(params, costs)
    }

    /// Cost of edges of length `len` (1-based).
    pub fn cost(&self, len: usize) -> &Rational {
        &self.costs[len - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.costs
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Path,
    Cycle,
}

impl EdgeKind {
    /// Number of edges in a Hamiltonian path or cycle on `n` vertices.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            EdgeKind::Path => n - 1,
            EdgeKind::Cycle => n,
        }
    }
}

/// Counts `(t_1, ..., t_d)` of edges of each length in a Hamiltonian path or
/// cycle.
///
/// Construction checks arity and the edge total only. The bound on diameter
/// edges for even `n` is reported by [`respects_diameter_bound`] rather than
/// enforced, so that infeasible candidates can still be fed to the
/// feasibility checks.
///
/// [`respects_diameter_bound`]: EdgeLengthVector::respects_diameter_bound
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLengthVector {
    n: usize,
    kind: EdgeKind,
    t: Vec<usize>,
}

impl EdgeLengthVector {
    pub fn new(params: &InstanceParams, kind: EdgeKind, t: Vec<usize>) -> Result<Self> {
        if t.len() != params.d {
            return Err(Error::InvalidVector(format!(
                "expected {} entries for n = {}, got {}",
                params.d,
                params.n,
                t.len()
            )));
        }
        let sum: usize = t.iter().sum();
        let want = kind.edge_count(params.n);
        if sum != want {
            let what = match kind {
                EdgeKind::Path => "n-1",
                EdgeKind::Cycle => "n",
            };
            return Err(Error::InvalidVector(format!(
                "entries sum to {sum}; sum must be {what} = {want}"
            )));
        }
        Ok(Self { n: params.n, kind, t })
    }

    pub(crate) fn from_parts_unchecked(n: usize, kind: EdgeKind, t: Vec<usize>) -> Self {
        debug_assert_eq!(t.iter().sum::<usize>(), kind.edge_count(n));
        Self { n, kind, t }
    }

    /// Edge-length vector of the closed walk (cycle) or open walk (path) through
    /// `order`. Does not check that `order` is Hamiltonian.
    pub fn of_vertex_sequence(params: &InstanceParams, order: &[usize], kind: EdgeKind) -> Result<Self> {
        let mut t = vec![0; params.d];
        for w in order.windows(2) {
            t[edge_length(w[0], w[1], params.n)? - 1] += 1;
        }
        if kind == EdgeKind::Cycle && order.len() > 1 {
            t[edge_length(order[order.len() - 1], order[0], params.n)? - 1] += 1;
        }
        Self::new(params, kind, t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> EdgeKind {
        self.kind
    }

    pub fn counts(&self) -> &[usize] {
        &self.t
    }

    /// `t_len` for a 1-based length.
    pub fn count(&self, len: usize) -> usize {
        self.t[len - 1]
    }

    pub fn into_counts(self) -> Vec<usize> {
        self.t
    }

    /// Only `n/2` distinct diameter edges exist when `n` is even.
    pub fn respects_diameter_bound(&self) -> bool {
        self.n % 2 == 1 || self.t.last().is_none_or(|&td| td <= self.n / 2)
    }

    /// Adds one edge of length `len`, turning a path vector into a cycle vector.
    pub fn close_with(&self, len: usize) -> Result<Self> {
        if self.kind != EdgeKind::Path {
            return Err(Error::InvalidVector("only path vectors can be closed".into()));
        }
        if len == 0 || len > self.t.len() {
            return Err(Error::InvalidVector(format!("no edge length {len}")));
        }
        let mut t = self.t.clone();
        t[len - 1] += 1;
        Ok(Self { n: self.n, kind: EdgeKind::Cycle, t })
    }

    /// Linear objective `sum_i c_i t_i`.
    pub fn cost(&self, costs: &CirculantCosts) -> Rational {
        self.t
            .iter()
            .zip(costs.as_slice())
            .map(|(&t, c)| c * Rational::from_integer(t.into()))
            .sum()
    }
}

impl fmt::Display for EdgeLengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.t.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// The partition of `[d]` into `S_1..S_k` by `gcd(n, j) = 2^(k - i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripePartition {
    classes: Vec<Vec<usize>>,
}

impl StripePartition {
    /// `S_i` for 1-based `i`, lengths ascending.
    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i - 1]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Number of classes, `k`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// 1-based index of the class containing `len`.
    pub fn class_of(&self, len: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.binary_search(&len).is_ok()).map(|i| i + 1)
    }
}

pub fn stripe_partition(params: &InstanceParams) -> Result<StripePartition> {
    let k = params.power_of_two()?;
    let mut classes = vec![Vec::new(); k as usize];
    for j in 1..=params.d {
        let g = params.n.gcd(&j);
        // g = 2^(k - i)  =>  i = k - log2(g)
        let i = k - g.trailing_zeros();
        classes[i as usize - 1].push(j);
    }
    Ok(StripePartition { classes })
}

/// `C<S>`: the graph on `[n]` with exactly the edges whose lengths lie in `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    n: usize,
    lengths: BTreeSet<usize>,
}

impl CirculantGraph {
    pub fn new(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let params = InstanceParams::new(n)?;
        let lengths: BTreeSet<usize> = lengths.into_iter().collect();
        if lengths.is_empty() {
            return Err(Error::InvalidVector("circulant graph needs at least one length".into()));
        }
        if let Some(&bad) = lengths.iter().find(|&&l| l == 0 || l > params.d) {
            return Err(Error::InvalidVector(format!("length {bad} outside 1..={}", params.d)));
        }
        Ok(Self { n, lengths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.lengths.iter().copied()
    }

    /// Number of connected components, `gcd(n, S)`. Each has `n / gcd` vertices.
    pub fn component_count(&self) -> usize {
        self.lengths.iter().fold(self.n, |g, &l| g.gcd(&l))
    }

    /// `C<S>` is Hamiltonian exactly when it is connected.
    pub fn is_hamiltonian(&self) -> bool {
        self.component_count() == 1
    }
}

pub fn component_count(g: &CirculantGraph) -> usize {
    g.component_count()
}

pub fn is_hamiltonian_lengthset(g: &CirculantGraph) -> bool {
    g.is_hamiltonian()
}

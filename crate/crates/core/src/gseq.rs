//! Cost permutations, g-sequences and the greedy minimum-cost Hamiltonian
//! path on circulant instances.
//!
//! For a permutation `phi` of the edge lengths by nondecreasing cost, the
//! gcd cascade `g_0 = n, g_i = gcd(phi(i), g_{i-1})` counts the components of
//! the circulant graph on the `i` cheapest lengths. A minimum-cost Hamiltonian
//! path uses `g_{i-1} - g_i` edges of length `phi(i)`.

use num_integer::Integer;

use crate::circulant::{CirculantCosts, EdgeKind, EdgeLengthVector, InstanceParams};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A bijection `[d] -> [d]`, stored as the sequence `phi(1), ..., phi(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CostPermutation {
    phi: Vec<usize>,
}

impl CostPermutation {
    pub fn new(params: &InstanceParams, phi: Vec<usize>) -> Result<Self> {
        if phi.len() != params.d {
            return Err(Error::InvalidPermutation(format!(
                "expected {} entries, got {}",
                params.d,
                phi.len()
            )));
        }
        let mut seen = vec![false; params.d + 1];
        for &l in &phi {
            if l == 0 || l > params.d || std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{phi:?} is not a permutation of 1..={}",
                    params.d
                )));
            }
        }
        Ok(Self { phi })
    }

    /// Completes a prefix of distinct lengths with the remaining lengths in
    /// ascending order.
    pub fn from_prefix(params: &InstanceParams, prefix: &[usize]) -> Result<Self> {
        let mut phi = prefix.to_vec();
        phi.extend((1..=params.d).filter(|l| !prefix.contains(l)));
        Self::new(params, phi)
    }

    /// Sorts lengths by `(cost, length)`; equal costs are broken toward the
    /// shorter length.
    pub fn from_costs(costs: &CirculantCosts) -> Self {
        let mut phi: Vec<usize> = (1..=costs.len()).collect();
        phi.sort_by(|&a, &b| costs.cost(a).cmp(costs.cost(b)).then(a.cmp(&b)));
        Self { phi }
    }

    /// `phi(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.phi[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.phi
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSequence {
    /// All `d + 1` entries `g_0..g_d`.
    pub g: Vec<usize>,
    /// Smallest `i >= 1` with `g_i = 1`.
    pub ell: usize,
}

pub fn g_sequence(phi: &CostPermutation, params: &InstanceParams) -> GSequence {
    let mut g = Vec::with_capacity(params.d + 1);
    g.push(params.n);
    for &l in phi.as_slice() {
        let prev = *g.last().unwrap();
        g.push(l.gcd(&prev));
    }
    // Length 1 is always present, so the cascade reaches 1.
    let ell = g.iter().position(|&x| x == 1).expect("g-sequence reaches 1");
    GSequence { g, ell }
}

/// The greedy path's edge counts: `t_{phi(i)} = g_{i-1} - g_i`.
pub fn blg_edge_multiset(phi: &CostPermutation, params: &InstanceParams) -> EdgeLengthVector {
    let gs = g_sequence(phi, params);
    let mut t = vec![0; params.d];
    for (i, &l) in phi.as_slice().iter().enumerate() {
        t[l - 1] = gs.g[i] - gs.g[i + 1];
    }
    EdgeLengthVector::from_parts_unchecked(params.n, EdgeKind::Path, t)
}

/// Minimum cost of a Hamiltonian path under circulant costs.
pub fn min_path_cost(costs: &CirculantCosts, params: &InstanceParams) -> Result<Rational> {
    if costs.len() != params.d {
        return Err(Error::DimensionMismatch { expected: params.d, got: costs.len() });
    }
    let phi = CostPermutation::from_costs(costs);
    Ok(blg_edge_multiset(&phi, params).cost(costs))
}

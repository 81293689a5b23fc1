//! Exact convex-hull analysis of finite rational point sets.

mod affine;
mod dd;
mod lp;

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blg::lower_bound_vertices;
use crate::circulant::{CirculantCosts, InstanceParams};
use crate::enumerate::VectorSet;
use crate::error::{Error, Result};
use crate::rational::{from_int, Rational};

use affine::AffineFrame;

/// Largest affine dimension accepted by [`enumerate_facets`] by default.
pub const DEFAULT_MAX_FACET_DIM: usize = 7;

const RANDOM_DIRECTIONS_PER_DIM: usize = 64;
const DIRECTION_SEED: u64 = 0x5eed;

/// Distinct points of `Q^dim`, kept in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    /// Sorts the points and drops duplicates.
    pub fn new(dim: usize, mut points: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
        }
        points.sort();
        points.dedup();
        Ok(Self { dim, points })
    }

    pub fn from_integer_vectors(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(dim, points.iter().map(|p| p.iter().map(|&x| from_int(x)).collect()).collect())
    }

    pub fn from_vector_set(set: &VectorSet) -> Self {
        let dim = set.n() / 2;
        let points = set
            .vectors()
            .iter()
            .map(|t| t.counts().iter().map(|&x| from_int(x as i64)).collect())
            .collect();
        Self::new(dim, points).expect("edge-length vectors have d entries")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, x: &[Rational]) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_slice().cmp(x)).ok()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.position(x).is_some()
    }

    fn require(&self, x: &[Rational]) -> Result<usize> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        self.position(x).ok_or(Error::NotAMember)
    }
}

/// A valid inequality `normal . x + offset >= 0` defining a facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Facet {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>() + &self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullSummary {
    pub vertex_count: usize,
    /// Filled in by [`enumerate_facets`].
    pub facet_count: Option<usize>,
    pub affine_dim: usize,
    /// Lexicographically sorted.
    pub vertices: Vec<Vec<Rational>>,
}

fn homogenize(p: &[Rational]) -> Vec<Rational> {
    let mut v = p.to_vec();
    v.push(from_int(1));
    v
}

fn in_hull_of<'a>(x: &[Rational], others: impl Iterator<Item = &'a Vec<Rational>>) -> bool {
    let columns: Vec<Vec<Rational>> = others.map(|p| homogenize(p)).collect();
    !columns.is_empty() && lp::nonneg_combination_exists(&columns, &homogenize(x))
}

/// Whether `x` is an extreme point of `conv(set)`: decided by the
/// infeasibility of writing `x` as a convex combination of the other points.
pub fn certify_vertex(set: &PointSet, x: &[Rational]) -> Result<bool> {
    let i = set.require(x)?;
    let others = set.points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p);
    Ok(!in_hull_of(x, others))
}

/// Lexicographically first minimizer of a linear functional over a fixed
/// point list, using machine integers when the data allow it.
struct Minimizer<'a> {
    points: &'a [Vec<Rational>],
    ints: Option<Vec<Vec<i64>>>,
}

impl<'a> Minimizer<'a> {
    fn new(points: &'a [Vec<Rational>]) -> Self {
        let small = |x: &Rational| {
            if x.is_integer() {
                x.to_integer().to_i64().filter(|v| v.abs() < 1 << 40)
            } else {
                None
            }
        };
        let ints = points.iter().map(|p| p.iter().map(small).collect()).collect();
        Self { points, ints }
    }

    /// The first index attaining the minimum. Points are in lexicographic
    /// order, so this is the lexicographically smallest point of the
    /// minimizing face: a vertex of that face and hence of the polytope.
    fn argmin(&self, c: &[Rational]) -> usize {
        let l = c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let scaled: Vec<BigInt> = c.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let small: Option<Vec<i128>> =
            scaled.iter().map(|x| x.to_i64().filter(|v| v.abs() < 1 << 62).map(i128::from)).collect();
        match (&self.ints, small) {
            (Some(ints), Some(c)) => {
                lex_argmin(ints.iter().map(|p| p.iter().zip(&c).map(|(&a, b)| a as i128 * b).sum::<i128>()))
            }
            _ => lex_argmin(self.points.iter().map(|p| p.iter().zip(c).map(|(a, b)| a * b).sum::<Rational>())),
        }
        .expect("nonempty point list")
    }
}

fn lex_argmin<T: Ord>(values: impl Iterator<Item = T>) -> Option<usize> {
    let mut best: Option<(T, usize)> = None;
    for (i, v) in values.enumerate() {
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, i));
        }
    }
    best.map(|(_, i)| i)
}

/// Vertex flags for points in general position within `Q^r`, each verdict
/// identical to [`certify_vertex`].
///
/// Minimizers of linear functionals are vertices outright; a batch of axis
/// and pseudo-random directions seeds the certified set `V`. Each remaining
/// point `x` is tested for membership in `conv(V)`, a small program. If it is
/// inside, `x` is not a vertex, as `V` excludes it. Otherwise the Farkas
/// certificate separates `x` from `conv(V)`, and minimizing that functional
/// over all points certifies a vertex outside `V`; the test repeats until `x`
/// is settled.
fn vertex_flags(points: &[Vec<Rational>]) -> Vec<bool> {
    let r = points[0].len();
    let minimizer = Minimizer::new(points);
    let mut flags = vec![false; points.len()];
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    let certify = |v: usize, flags: &mut Vec<bool>, columns: &mut Vec<Vec<Rational>>| {
        if !flags[v] {
            flags[v] = true;
            columns.push(homogenize(&points[v]));
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(DIRECTION_SEED);
    let axes = (0..r).flat_map(|i| {
        [1, -1].map(|s| (0..r).map(|k| from_int(if k == i { s } else { 0 })).collect::<Vec<_>>())
    });
    let random: Vec<Vec<Rational>> = (0..RANDOM_DIRECTIONS_PER_DIM * (r + 1))
        .map(|_| (0..r).map(|_| from_int(rng.gen_range(-1000..=1000))).collect())
        .collect();
    for c in axes.chain(random) {
        certify(minimizer.argmin(&c), &mut flags, &mut columns);
    }

    for i in 0..points.len() {
        while !flags[i] {
            match lp::nonneg_combination(&columns, &homogenize(&points[i])) {
                Ok(()) => break,
                Err(y) => {
                    let c: Vec<Rational> = y[..r].iter().map(|v| -v).collect();
                    let v = minimizer.argmin(&c);
                    debug_assert!(!flags[v]);
                    certify(v, &mut flags, &mut columns);
                }
            }
        }
    }
    flags
}

/// All extreme points of `conv(set)`.
pub fn enumerate_vertices(set: &PointSet) -> Result<HullSummary> {
    if set.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let frame = AffineFrame::new(&set.points);
    let affine_dim = frame.dim();
    let vertices = if affine_dim == 0 {
        set.points.clone()
    } else {
        let reduced: Vec<Vec<Rational>> = set.points.iter().map(|p| frame.reduce(p)).collect();
        let flags = vertex_flags(&reduced);
        set.points.iter().zip(flags).filter(|(_, v)| *v).map(|(p, _)| p.clone()).collect()
    };
    Ok(HullSummary { vertex_count: vertices.len(), facet_count: None, affine_dim, vertices })
}

/// Facets of `conv(set)` inside its affine hull, as inequalities on the
/// original coordinates, together with the vertices they determine.
pub fn facet_description(set: &PointSet, max_dim: usize) -> Result<(HullSummary, Vec<Facet>)> {
    if set.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let frame = AffineFrame::new(&set.points);
    let r = frame.dim();
    if r > max_dim {
        return Err(Error::ResourceLimit { what: "facet enumeration in affine dimension", n: r, bound: max_dim });
    }
    if r == 0 {
        let summary =
            HullSummary { vertex_count: 1, facet_count: Some(0), affine_dim: 0, vertices: set.points.clone() };
        return Ok((summary, Vec::new()));
    }
    let reduced: Vec<Vec<Rational>> = set.points.iter().map(|p| frame.reduce(p)).collect();
    let halfspaces = dd::facets(&reduced);
    let vertices: Vec<Vec<Rational>> =
        dd::vertices_from_facets(&reduced, &halfspaces).into_iter().map(|i| set.points[i].clone()).collect();
    let facets: Vec<Facet> = halfspaces
        .into_iter()
        .map(|h| {
            let mut normal = vec![Rational::zero(); set.dim];
            for (&c, a) in frame.pivots().iter().zip(h.normal) {
                normal[c] = a;
            }
            Facet { normal, offset: h.offset }
        })
        .collect();
    let summary =
        HullSummary { vertex_count: vertices.len(), facet_count: Some(facets.len()), affine_dim: r, vertices };
    Ok((summary, facets))
}

/// Facet count of `conv(set)` within its affine hull by double description.
/// The vertices are read off the facet description.
pub fn enumerate_facets(set: &PointSet, max_dim: usize) -> Result<HullSummary> {
    facet_description(set, max_dim).map(|(s, _)| s)
}

/// Whether `x` is the unique minimizer of `costs` over the set.
pub fn certify_unique_optimum(set: &PointSet, costs: &CirculantCosts, x: &[Rational]) -> Result<bool> {
    if costs.len() != set.dim {
        return Err(Error::DimensionMismatch { expected: set.dim, got: costs.len() });
    }
    let i = set.require(x)?;
    let value = |p: &[Rational]| p.iter().zip(costs.as_slice()).map(|(a, b)| a * b).sum::<Rational>();
    let best = value(x);
    Ok(set.points.iter().enumerate().all(|(j, p)| j == i || best < value(p)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexPrediction {
    Exact(u64),
    LowerBound(BigUint),
    Unknown,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// Closed-form vertex count of the edge-length polytope where one is known:
/// `d` for prime `n`, `(p^3 - p) / 4` for `n = p^2` with odd prime `p`, and a
/// lower bound for `n = 2^k`, `k >= 4`.
pub fn predicted_vertex_count(params: &InstanceParams) -> VertexPrediction {
    let n = params.n;
    if is_prime(n) {
        return VertexPrediction::Exact(params.d as u64);
    }
    let p = n.sqrt();
    if p * p == n && p >= 3 && is_prime(p) {
        let p = p as u64;
        return VertexPrediction::Exact((p * p * p - p) / 4);
    }
    if n.is_power_of_two() && n >= 16 {
        if let Ok(b) = lower_bound_vertices(params) {
            return VertexPrediction::LowerBound(b.bound);
        }
    }
    VertexPrediction::Unknown
}

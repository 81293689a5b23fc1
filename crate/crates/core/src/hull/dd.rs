//! Facet enumeration by double description.
//!
//! Points of a full-dimensional polytope in `Q^r` are inserted one at a time
//! into the H-representation of the hull of the points seen so far, starting
//! from a simplex. When a point sees some facets, every adjacent pair of a
//! visible and a strictly satisfied facet spawns a new facet through their
//! ridge and the point. Adjacency is decided combinatorially from incidence
//! sets.

use num_traits::{Signed, Zero};

use super::affine::{null_vector, rank};
use crate::rational::Rational;

/// `normal . x + offset >= 0`, tight on the points in `incidence`.
#[derive(Debug, Clone)]
pub(crate) struct HalfSpace {
    pub(crate) normal: Vec<Rational>,
    pub(crate) offset: Rational,
    pub(crate) incidence: BitSet,
}

impl HalfSpace {
    fn eval(&self, p: &[Rational]) -> Rational {
        self.normal.iter().zip(p).map(|(a, x)| a * x).sum::<Rational>() + &self.offset
    }

    /// Scales so the first nonzero normal coefficient is +-1.
    fn normalize(&mut self) {
        if let Some(lead) = self.normal.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
            for x in &mut self.normal {
                *x /= &lead;
            }
            self.offset /= &lead;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)] }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    fn intersection(&self, other: &Self) -> Self {
        Self { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Facets of `conv(points)`, which must be full-dimensional in `Q^r` with
/// `r >= 1`. Points are inserted in the given order.
pub(crate) fn facets(points: &[Vec<Rational>]) -> Vec<HalfSpace> {
    let r = points[0].len();
    assert!(r >= 1, "double description needs positive dimension");
    let total = points.len();

    // Greedy affinely independent simplex in insertion order.
    let mut simplex: Vec<usize> = vec![0];
    let mut diffs: Vec<Vec<Rational>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        if simplex.len() == r + 1 {
            break;
        }
        let d: Vec<Rational> = p.iter().zip(&points[0]).map(|(a, b)| a - b).collect();
        diffs.push(d);
        if rank(&diffs) == diffs.len() {
            simplex.push(i);
        } else {
            diffs.pop();
        }
    }
    assert_eq!(simplex.len(), r + 1, "point set is not full-dimensional");

    let mut hull: Vec<HalfSpace> = Vec::new();
    for (skip, &opposite) in simplex.iter().enumerate() {
        let on: Vec<usize> = simplex.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
        let anchor = &points[on[0]];
        let rows: Vec<Vec<Rational>> = on[1..]
            .iter()
            .map(|&v| points[v].iter().zip(anchor).map(|(a, b)| a - b).collect())
            .collect();
        let normal = null_vector(&rows, r).expect("simplex facet has a normal");
        let offset = -normal.iter().zip(anchor).map(|(a, x)| a * x).sum::<Rational>();
        let mut h = HalfSpace { normal, offset, incidence: BitSet::new(total) };
        if h.eval(&points[opposite]).is_negative() {
            h.normal.iter_mut().for_each(|x| *x = -x.clone());
            h.offset = -h.offset.clone();
        }
        h.normalize();
        for &v in &on {
            h.incidence.insert(v);
        }
        hull.push(h);
    }

    let mut inserted: Vec<usize> = simplex.clone();
    for (i, p) in points.iter().enumerate() {
        if simplex.contains(&i) {
            continue;
        }
        let values: Vec<Rational> = hull.iter().map(|h| h.eval(p)).collect();
        let visible: Vec<usize> = (0..hull.len()).filter(|&f| values[f].is_negative()).collect();
        if visible.is_empty() {
            for (h, v) in hull.iter_mut().zip(&values) {
                if v.is_zero() {
                    h.incidence.insert(i);
                }
            }
            inserted.push(i);
            continue;
        }
        let positive: Vec<usize> = (0..hull.len()).filter(|&f| values[f].is_positive()).collect();

        let mut created = Vec::new();
        for &fp in &positive {
            for &fm in &visible {
                let ridge = hull[fp].incidence.intersection(&hull[fm].incidence);
                if ridge.count() + 1 < r {
                    continue;
                }
                let adjacent = (0..hull.len())
                    .filter(|&g| g != fp && g != fm)
                    .all(|g| !ridge.is_subset(&hull[g].incidence));
                if !adjacent {
                    continue;
                }
                // values[fp] > 0 > values[fm]; the combination vanishes at p.
                let (a, b) = (&values[fp], -&values[fm]);
                let normal: Vec<Rational> = hull[fm]
                    .normal
                    .iter()
                    .zip(&hull[fp].normal)
                    .map(|(m, q)| a * m + &b * q)
                    .collect();
                let offset = a * &hull[fm].offset + &b * &hull[fp].offset;
                let mut incidence = ridge;
                incidence.insert(i);
                let mut h = HalfSpace { normal, offset, incidence };
                h.normalize();
                created.push(h);
            }
        }

        let mut next: Vec<HalfSpace> = Vec::with_capacity(hull.len() + created.len());
        for (f, mut h) in hull.into_iter().enumerate() {
            if values[f].is_negative() {
                continue;
            }
            if values[f].is_zero() {
                h.incidence.insert(i);
            }
            next.push(h);
        }
        next.extend(created);
        hull = next;
        inserted.push(i);
    }
    hull
}

/// Indices of points that are vertices according to the facet description: a
/// point is a vertex when the normals of the facets through it span `Q^r`.
pub(crate) fn vertices_from_facets(points: &[Vec<Rational>], hull: &[HalfSpace]) -> Vec<usize> {
    let r = points.first().map_or(0, Vec::len);
    (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<Rational>> =
                hull.iter().filter(|h| h.incidence.contains(i)).map(|h| h.normal.clone()).collect();
            normals.len() >= r && rank(&normals) == r
        })
        .collect()
}

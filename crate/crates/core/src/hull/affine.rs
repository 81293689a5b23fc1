//! Affine hulls by exact elimination on point differences.

use num_traits::Zero;

use crate::rational::Rational;

/// Coordinates that parametrize the affine hull of a point set.
///
/// The pivot columns of an echelon basis of the difference vectors form a
/// coordinate projection that is injective on the affine hull, so it maps the
/// hull's face lattice isomorphically onto a full-dimensional polytope.
#[derive(Debug, Clone)]
pub(crate) struct AffineFrame {
    pivots: Vec<usize>,
}

impl AffineFrame {
    pub(crate) fn new(points: &[Vec<Rational>]) -> Self {
        let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
        if let Some((base, rest)) = points.split_first() {
            for p in rest {
                let mut v: Vec<Rational> = p.iter().zip(base).map(|(a, b)| a - b).collect();
                for (col, row) in &basis {
                    if v[*col].is_zero() {
                        continue;
                    }
                    let f = &v[*col] / &row[*col];
                    for (x, y) in v.iter_mut().zip(row) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
                if let Some(col) = v.iter().position(|x| !x.is_zero()) {
                    basis.push((col, v));
                }
            }
        }
        let mut pivots: Vec<usize> = basis.into_iter().map(|(c, _)| c).collect();
        pivots.sort_unstable();
        Self { pivots }
    }

    pub(crate) fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn reduce(&self, p: &[Rational]) -> Vec<Rational> {
        self.pivots.iter().map(|&c| p[c].clone()).collect()
    }
}

/// Rank of a list of vectors.
pub(crate) fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (col, row) in &basis {
            if v[*col].is_zero() {
                continue;
            }
            let f = &v[*col] / &row[*col];
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        if let Some(col) = v.iter().position(|x| !x.is_zero()) {
            basis.push((col, v));
        }
    }
    basis.len()
}

/// A nonzero vector orthogonal to every row, for `rows` of rank `cols - 1`.
pub(crate) fn null_vector(rows: &[Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    // Reduced row echelon form.
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivot_cols.contains(c))?;
    let mut v = vec![Rational::zero(); cols];
    v[free] = Rational::from_integer(1.into());
    for (i, &c) in pivot_cols.iter().enumerate() {
        v[c] = -m[i][free].clone();
    }
    Some(v)
}

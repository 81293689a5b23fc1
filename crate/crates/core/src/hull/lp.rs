//! Exact phase-one simplex for `A x = b, x >= 0` feasibility.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{is_canonical, Rational};

/// Integer coordinates below this bound are priced in `i128`.
const SMALL: i64 = 1 << 40;

enum Columns {
    Small(Vec<Vec<i64>>),
    Big(Vec<Vec<BigInt>>),
}

impl Columns {
    /// Whether `y . A_j > 0`, for an integer row vector `y`.
    fn positive(&self, j: usize, y: &[BigInt], y_small: Option<&[i128]>) -> bool {
        match (self, y_small) {
            (Columns::Small(cols), Some(ys)) => cols[j].iter().zip(ys).map(|(&a, &b)| a as i128 * b).sum::<i128>() > 0,
            (Columns::Small(cols), None) => {
                cols[j].iter().zip(y).map(|(&a, b)| b * a).sum::<BigInt>().is_positive()
            }
            (Columns::Big(cols), _) => cols[j].iter().zip(y).map(|(a, b)| a * b).sum::<BigInt>().is_positive(),
        }
    }
}

/// Whether some `x >= 0` satisfies `sum_j x_j columns[j] = rhs`.
pub(crate) fn nonneg_combination_exists(columns: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    nonneg_combination(columns, rhs).is_ok()
}

/// Decides `A x = b, x >= 0` by phase one of the simplex method. On
/// infeasibility returns a Farkas certificate `y` with `y . A_j <= 0` for
/// every column and `y . b > 0`.
///
/// Revised simplex with one artificial per row. Pricing only needs the sign
/// of `y . A_j`, so columns and duals are scaled to integers and priced in
/// machine arithmetic when they fit. Bland's rule picks both the entering
/// column and, among tied ratios, the leaving variable.
pub(crate) fn nonneg_combination(columns: &[Vec<Rational>], rhs: &[Rational]) -> Result<(), Vec<Rational>> {
    let m = rhs.len();
    let n = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == m));

    let flip: Vec<bool> = rhs.iter().map(|x| x.is_negative()).collect();
    let mut xb: Vec<Rational> = rhs.iter().map(|x| x.abs()).collect();
    let oriented: Vec<Vec<Rational>> = columns
        .iter()
        .map(|c| c.iter().zip(&flip).map(|(x, &f)| if f { -x } else { x.clone() }).collect())
        .collect();
    let small: Option<Vec<Vec<i64>>> = oriented
        .iter()
        .map(|c| {
            c.iter()
                .map(|x| if x.is_integer() { x.to_integer().to_i64().filter(|v| v.abs() < SMALL) } else { None })
                .collect()
        })
        .collect();
    let priced = match small {
        Some(s) => Columns::Small(s),
        None => Columns::Big(
            oriented
                .iter()
                .map(|c| {
                    let l = c.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                    c.iter().map(|x| x.numer() * (&l / x.denom())).collect()
                })
                .collect(),
        ),
    };

    // Artificial for row i is labelled n + i.
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut binv: Vec<Vec<Rational>> = (0..m)
        .map(|i| (0..m).map(|k| if i == k { Rational::one() } else { Rational::zero() }).collect())
        .collect();

    loop {
        let artificial: Vec<usize> = (0..m).filter(|&i| basis[i] >= n).collect();
        if artificial.iter().all(|&i| xb[i].is_zero()) {
            return Ok(());
        }
        // Phase-one duals, scaled to a positive multiple with integer entries.
        let y: Vec<Rational> =
            (0..m).map(|k| artificial.iter().map(|&i| &binv[i][k]).sum::<Rational>()).collect();
        let l = y.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let y_int: Vec<BigInt> = y.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let y_small: Option<Vec<i128>> =
            y_int.iter().map(|x| x.to_i128().filter(|v| v.abs() < 1i128 << 80)).collect();

        let Some(enter) = (0..n).find(|&j| priced.positive(j, &y_int, y_small.as_deref())) else {
            return Err(y.into_iter().zip(&flip).map(|(v, &f)| if f { -v } else { v }).collect());
        };
        let u: Vec<Rational> = binv
            .iter()
            .map(|row| row.iter().zip(&oriented[enter]).filter(|(_, a)| !a.is_zero()).map(|(b, a)| b * a).sum())
            .collect();

        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if !u[i].is_positive() {
                continue;
            }
            let ratio = &xb[i] / &u[i];
            let better = match &best {
                None => true,
                Some(cur) => ratio < *cur || (ratio == *cur && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        // The phase-one objective is bounded below by zero, so some row
        // always limits the step.
        let r = leave.expect("phase-one problem is bounded");
        pivot(&mut binv, &mut xb, &u, r);
        basis[r] = enter;
    }
}

fn pivot(binv: &mut [Vec<Rational>], xb: &mut [Rational], u: &[Rational], r: usize) {
    let inv = u[r].recip();
    for x in binv[r].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    xb[r] *= &inv;
    let pivot_row = binv[r].clone();
    let pivot_x = xb[r].clone();
    for i in 0..binv.len() {
        if i == r || u[i].is_zero() {
            continue;
        }
        for (x, y) in binv[i].iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &u[i] * y;
            }
        }
        xb[i] -= &u[i] * &pivot_x;
    }
    debug_assert!(binv.iter().flatten().chain(xb.iter()).all(is_canonical));
}

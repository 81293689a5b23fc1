//! Brute-force oracles shared by the integration tests. They deliberately
//! avoid the library's search code.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use elpoly_core::rational::{from_int, Rational};
use num_traits::{Signed, Zero};

pub fn length(i: usize, j: usize, n: usize) -> usize {
    let diff = i.abs_diff(j);
    diff.min(n - diff)
}

/// Next lexicographic permutation in place; false after the last one.
pub fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn vector_of(order: &[usize], n: usize, close: bool) -> Vec<usize> {
    let mut t = vec![0; n / 2];
    for w in order.windows(2) {
        t[length(w[0], w[1], n) - 1] += 1;
    }
    if close {
        t[length(order[0], order[order.len() - 1], n) - 1] += 1;
    }
    t
}

/// Cycle vectors from every ordering of `2..=n` after vertex 1.
pub fn cycle_vectors(n: usize) -> BTreeSet<Vec<usize>> {
    let mut rest: Vec<usize> = (2..=n).collect();
    let mut out = BTreeSet::new();
    loop {
        let mut order = vec![1];
        order.extend(&rest);
        out.insert(vector_of(&order, n, true));
        if !next_permutation(&mut rest) {
            return out;
        }
    }
}

/// Path vectors from every ordering of `1..=n`.
pub fn path_vectors(n: usize) -> BTreeSet<Vec<usize>> {
    let mut order: Vec<usize> = (1..=n).collect();
    let mut out = BTreeSet::new();
    loop {
        out.insert(vector_of(&order, n, false));
        if !next_permutation(&mut order) {
            return out;
        }
    }
}

/// Connected components of the circulant graph by breadth-first search.
pub fn components(n: usize, lengths: &[usize]) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &l in lengths {
                for w in [(v + l) % n, (v + n - l) % n] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    count
}

/// Unique solution of `A y = b` for a full-column-rank `A`, if one exists.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, p);
        b.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
                let d = &f * &b[r];
                b[i] -= d;
            }
        }
        r += 1;
    }
    if b[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| &b[c] / &a[c][c]).collect())
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for i in start..n {
        cur.push(i);
        if subsets(n, k, i + 1, cur, f) {
            return true;
        }
        cur.pop();
    }
    false
}

/// Vertex test by Caratheodory: `x` is a vertex unless it is a convex
/// combination of some affinely independent subset of the other points.
pub fn naive_is_vertex(points: &[Vec<Rational>], x: &[Rational]) -> bool {
    let dim = x.len();
    let others: Vec<&Vec<Rational>> = points.iter().filter(|p| p.as_slice() != x).collect();
    for k in 1..=(dim + 1).min(others.len()) {
        let found = subsets(others.len(), k, 0, &mut Vec::new(), &mut |idx| {
            let mut a: Vec<Vec<Rational>> = (0..dim).map(|i| idx.iter().map(|&j| others[j][i].clone()).collect()).collect();
            a.push(vec![from_int(1); k]);
            let mut b = x.to_vec();
            b.push(from_int(1));
            // Skip dependent subsets: they are covered by smaller ones.
            let lambda = match full_rank(&a) {
                true => solve(a, b),
                false => None,
            };
            lambda.is_some_and(|l| l.iter().all(|v| !v.is_negative()))
        });
        if found {
            return false;
        }
    }
    true
}

fn full_rank(a: &[Vec<Rational>]) -> bool {
    let cols = a[0].len();
    let mut m = a.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            return false;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    true
}

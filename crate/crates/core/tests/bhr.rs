mod common;

use std::collections::BTreeSet;

use elpoly_core::bhr::{DEFAULT_COUNT_MAX_N, DEFAULT_REALIZE_MAX_N};
use elpoly_core::*;

fn params(n: usize) -> InstanceParams {
    InstanceParams::new(n).unwrap()
}

/// All vectors of `d` nonnegative entries summing to `total`.
fn compositions(total: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, d - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[test]
fn path_vector_sets_match_permutation_oracle() {
    for n in 3..=9 {
        let p = params(n);
        let got: BTreeSet<Vec<usize>> = realizable_path_vectors(&p, DEFAULT_COUNT_MAX_N)
            .unwrap()
            .into_iter()
            .map(|v| v.into_counts())
            .collect();
        assert_eq!(got, common::path_vectors(n), "n = {n}");
    }
}

#[test]
fn small_multiset_counts() {
    let count = |n| count_realizable_multisets(&params(n), DEFAULT_COUNT_MAX_N).unwrap();
    assert_eq!(count(4), 3);
    assert_eq!(count(5), 5);
    assert_eq!(count(6), 17);
}

#[test]
fn realizability_search_agrees_with_oracle_on_every_vector() {
    for n in 3..=8 {
        let p = params(n);
        let realized = common::path_vectors(n);
        for t in compositions(n - 1, p.d) {
            let v = EdgeLengthVector::new(&p, EdgeKind::Path, t.clone()).unwrap();
            let found = realizable_path(&v, &p, DEFAULT_REALIZE_MAX_N).unwrap();
            assert_eq!(found, realized.contains(&t), "n = {n}, t = {t:?}");
            if found {
                assert!(check_bhr(&v, &p).unwrap().feasible, "n = {n}, t = {t:?}");
            }
        }
    }
}

#[test]
fn violated_divisor_is_smallest_failing_constraint() {
    for n in [4, 6, 8, 9, 10, 12] {
        let p = params(n);
        for t in compositions(n - 1, p.d) {
            let v = EdgeLengthVector::new(&p, EdgeKind::Path, t.clone()).unwrap();
            let verdict = check_bhr(&v, &p).unwrap();
            let failing: Vec<usize> = (2..=p.d)
                .filter(|q| n % q == 0)
                .filter(|&q| (1..=p.d).filter(|i| i % q == 0).map(|i| t[i - 1]).sum::<usize>() > n - q)
                .collect();
            assert_eq!(verdict.violated_divisor, failing.first().copied(), "n = {n}, t = {t:?}");
            assert_eq!(verdict.feasible, failing.is_empty());
            assert_eq!(verdict.realizable, None);
        }
    }
}

#[test]
fn input_validation() {
    let p = params(12);
    assert!(EdgeLengthVector::new(&p, EdgeKind::Path, vec![2, 10, 0, 0, 0, 0]).is_err());
    assert!(EdgeLengthVector::new(&p, EdgeKind::Path, vec![11, 0]).is_err());
    let v = EdgeLengthVector::new(&p, EdgeKind::Path, vec![11, 0, 0, 0, 0, 0]).unwrap();
    assert!(matches!(realizable_path(&v, &p, 10), Err(Error::ResourceLimit { .. })));
    assert!(matches!(count_realizable_multisets(&params(11), DEFAULT_COUNT_MAX_N), Err(Error::ResourceLimit { .. })));
}

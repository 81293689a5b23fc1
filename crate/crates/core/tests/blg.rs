mod common;

use std::collections::BTreeSet;

use elpoly_core::*;
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params(n: usize) -> InstanceParams {
    InstanceParams::new(n).unwrap()
}

fn path_vector(order: &[usize], n: usize) -> Vec<usize> {
    let mut t = vec![0; n / 2];
    for w in order.windows(2) {
        t[common::length(w[0], w[1], n) - 1] += 1;
    }
    t
}

#[test]
fn encodings_are_sorted_distinct_and_counted() {
    for k in 2..=6 {
        let p = params(1 << k);
        let all = enumerate_encodings(&p).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]), "k = {k}: not strictly increasing");
        assert_eq!(BigUint::from(all.len()), count_blg(&p).unwrap());
        let stripes = stripe_partition(&p).unwrap();
        for s in &all {
            assert_eq!(s.k(), k);
            assert!(!s.get(k).is_skip());
            for (i, len) in s.used() {
                assert_eq!(stripes.class_of(len), Some(i));
            }
        }
    }
    assert_eq!(count_blg(&params(128)).unwrap(), BigUint::from(2u32.pow(7) * 3 * 5 * 9 * 17));
    assert!(enumerate_encodings(&params(12)).is_err());
}

#[test]
fn path_for_prefix_8_10_7() {
    let p = params(32);
    let phi = CostPermutation::from_prefix(&p, &[8, 10, 7]).unwrap();
    let path = build_blg_path(&phi, &p);
    assert_eq!(
        path.order(),
        &[
            1, 9, 17, 25, 3, 27, 19, 11, 21, 29, 5, 13, 23, 15, 7, 31, 6, 14, 22, 30, 20, 12, 4, 28, 18, 26, 2, 10,
            32, 24, 16, 8
        ]
    );
    let t = path.path_vector().unwrap();
    assert_eq!((t.count(8), t.count(10), t.count(7)), (24, 6, 1));
}

#[test]
fn extended_cycles_are_explicit_for_powers_of_two() {
    for k in 2..=6 {
        let n = 1 << k;
        let p = params(n);
        for s in enumerate_encodings(&p).unwrap() {
            match extend_to_cycle(&s, &p) {
                Ok(v) => {
                    let cycle = extended_cycle(&s, &p).unwrap();
                    assert!(cycle.is_hamiltonian());
                    assert_eq!((cycle.first(), cycle.last()), (1, 1 + s.last_length()));
                    assert_eq!(cycle.closing_length().unwrap(), s.last_length());
                    let mut t = path_vector(cycle.order(), n);
                    t[s.last_length() - 1] += 1;
                    assert_eq!(t, v.counts());
                }
                Err(e) => {
                    assert!(k >= 2 && s.get(k - 1).is_skip(), "{s}: {e}");
                    assert!(matches!(e, Error::ExtensionUndefined(_)));
                }
            }
        }
    }
}

#[test]
fn extended_vectors_are_distinct_and_meet_the_bound() {
    for k in 4..=6 {
        let p = params(1 << k);
        let extended: BTreeSet<Vec<usize>> = enumerate_encodings(&p)
            .unwrap()
            .iter()
            .filter_map(|s| extend_to_cycle(s, &p).ok())
            .map(|v| v.into_counts())
            .collect();
        let b = lower_bound_vertices(&p).unwrap();
        assert!(BigUint::from(extended.len()) >= b.bound, "k = {k}");
        assert!(b.crude <= b.bound);
    }
    assert_eq!(lower_bound_vertices(&params(64)).unwrap().bound, BigUint::from(2160u32));
}

#[test]
fn encoding_text_and_json() {
    let p = params(16);
    let s = EncodingSequence::parse(&p, "x, 4, 6, 1").unwrap();
    assert_eq!(s.to_string(), "(x, 4, 6, 1)");
    let json = serde_json::to_string(&s).unwrap();
    assert_eq!(json, r#"["x",4,6,1]"#);
    assert_eq!(serde_json::from_str::<EncodingSequence>(&json).unwrap(), s);
    assert!(EncodingSequence::parse(&p, "x,4,6,x").is_err());
    assert!(EncodingSequence::parse(&p, "x,6,2,1").is_err());
    assert!(EncodingSequence::parse(&p, "8,4,2").is_err());
    let costs = encoding_to_costs(&s, &p).unwrap();
    let expected = [4, 5, 6, 2, 7, 3, 8, 9];
    for (len, c) in (1..=8).zip(expected) {
        assert_eq!(costs.cost(len), &rational::from_int(c), "length {len}");
    }
}

proptest! {
    #[test]
    fn random_permutations_give_valid_paths(k in 2u32..7, seed in any::<u64>()) {
        let n = 1usize << k;
        let p = params(n);
        let mut phi: Vec<usize> = (1..=p.d).collect();
        phi.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let phi = CostPermutation::new(&p, phi).unwrap();
        let path = build_blg_path(&phi, &p);
        prop_assert!(path.is_hamiltonian());
        prop_assert_eq!(path_vector(path.order(), n), blg_edge_multiset(&phi, &p).into_counts());
        let s = encoding_of_permutation(&phi, &p).unwrap();
        prop_assert_eq!(encoding_to_vector(&s, &p).unwrap(), blg_edge_multiset(&phi, &p));
        let back = encoding_of_permutation(&encoding_to_permutation(&s, &p).unwrap(), &p).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn paths_for_arbitrary_n(n in 3usize..80, seed in any::<u64>()) {
        let p = params(n);
        let mut phi: Vec<usize> = (1..=p.d).collect();
        phi.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let phi = CostPermutation::new(&p, phi).unwrap();
        let path = build_blg_path(&phi, &p);
        prop_assert!(path.is_hamiltonian());
        prop_assert_eq!(path.first(), 1);
        prop_assert_eq!(path_vector(path.order(), n), blg_edge_multiset(&phi, &p).into_counts());
    }
}

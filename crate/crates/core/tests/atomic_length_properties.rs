mod common;

use std::collections::BTreeSet;

use atomic_core::atomiclen::{
    atomic_length, atomic_length_w0, image_set, image_set_naive, is_ideal, lambda_atomic_length,
    lambda_inversion_set, minuscule_weights, orbit_size,
};
use atomic_core::orbit::OrbitConfig;
use atomic_core::weyl::{all_reduced_words, evaluate, longest_element, DEFAULT_SUBGROUP_CAP};
use atomic_core::{Rational, RootSystem, RootVec, WeightVec, Word};
use common::{group, label_subsets, sys, word};

fn sample_weights(s: &RootSystem) -> Vec<WeightVec> {
    let n = s.rank();
    let mut out = vec![s.rho_weight()];
    out.extend((0..n).map(|i| s.fundamental_weight(i).unwrap()));
    out.push(s.weight_from_fund(&(0..n).map(|i| (i % 3) as i64).collect::<Vec<_>>()));
    out.push(s.weight_from_fund(&(0..n).map(|i| 2 - (i % 2) as i64).collect::<Vec<_>>()));
    out
}

#[test]
fn simply_laced_symmetry() {
    for label in ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "E6"] {
        let s = sys(label);
        for w in group(&s) {
            assert_eq!(atomic_length(&s, &w), atomic_length(&s, &w.inverse(&s)), "{label}");
        }
    }
}

#[test]
fn g2_breaks_symmetry() {
    let s = sys("G2");
    let w = evaluate(&s, &word(&[2, 1])).unwrap();
    assert_eq!(atomic_length(&s, &w), 3);
    assert_eq!(atomic_length(&s, &w.inverse(&s)), 5);
}

#[test]
fn anti_symmetry_and_maximality() {
    for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
        let s = sys(label);
        let w0 = longest_element(&s);
        for lambda in sample_weights(&s) {
            let top = lambda_atomic_length(&s, &w0, &lambda).unwrap();
            assert_eq!(top, atomic_length_w0(&s, &lambda).unwrap());
            for w in group(&s) {
                let v = lambda_atomic_length(&s, &w, &lambda).unwrap();
                let flipped = lambda_atomic_length(&s, &w0.multiply(&w).unwrap(), &lambda).unwrap();
                assert_eq!(flipped, top - v, "{label}");
                assert!((0..=top).contains(&v));
            }
        }
    }
}

fn root_coords(w: &WeightVec) -> Vec<Rational> {
    w.root_coords().to_vec()
}

#[test]
fn lambda_inversion_sets_sum_to_lambda_minus_w_lambda_on_every_reduced_word() {
    let s = sys("A4");
    for lambda in [s.rho_weight(), s.weight_from_fund(&[2, 0, 1, 3]), s.weight_from_fund(&[0, 1, 0, 0])] {
        for w in group(&s) {
            let image = w.act_weight(&s, &lambda).unwrap();
            let expect: Vec<Rational> =
                root_coords(&lambda).iter().zip(root_coords(&image)).map(|(a, b)| *a - b).collect();
            for rw in all_reduced_words(&s, &w) {
                let set = lambda_inversion_set(&s, &rw, &lambda).unwrap();
                let sum: Vec<Rational> = set.sum(4).0.iter().map(|&c| Rational::from_integer(c)).collect();
                assert_eq!(sum, expect, "{rw}");
                assert_eq!(set.total_height(), lambda_atomic_length(&s, &w, &lambda).unwrap());
            }
        }
    }
}

#[test]
fn weak_order_monotonicity() {
    for label in ["A3", "B3"] {
        let s = sys(label);
        for lambda in sample_weights(&s) {
            for w in group(&s) {
                let rw = w.reduced_word(&s);
                let mut last = 0;
                for k in 0..=rw.len() {
                    let prefix = evaluate(&s, &Word(rw.0[..k].to_vec())).unwrap();
                    let v = lambda_atomic_length(&s, &prefix, &lambda).unwrap();
                    assert!(v >= last);
                    last = v;
                }
            }
        }
    }
}

#[test]
fn parabolic_restriction() {
    for label in ["A3", "B3", "C3"] {
        let s = sys(label);
        for labels in label_subsets(3) {
            let idx: Vec<usize> = labels.iter().map(|i| i - 1).collect();
            let sub = s.parabolic(&idx).unwrap();
            for w in group(&s) {
                let rw = w.reduced_word(&s);
                if !rw.0.iter().all(|l| labels.contains(l)) {
                    continue;
                }
                let relabelled: Vec<usize> =
                    rw.0.iter().map(|l| labels.iter().position(|m| m == l).unwrap() + 1).collect();
                let inner = evaluate(&sub, &Word(relabelled)).unwrap();
                assert_eq!(atomic_length(&s, &w), atomic_length(&sub, &inner), "{label} {labels:?}");
            }
        }
    }
}

#[test]
fn minuscule_weights_are_ideal() {
    for label in ["A1", "A3", "A5", "B3", "C3", "D4", "D5", "E6", "E7"] {
        let s = sys(label);
        let mins = minuscule_weights(&s);
        assert!(!mins.is_empty(), "{label}");
        for lambda in mins {
            assert!(is_ideal(&s, &lambda, OrbitConfig::default()).unwrap().ideal, "{label}");
        }
    }
    assert!(minuscule_weights(&sys("E8")).is_empty());
}

#[test]
fn rho_minus_w_rho_is_the_inversion_sum() {
    for label in ["A3", "B3", "G2"] {
        let s = sys(label);
        let rho = s.rho_weight();
        for w in group(&s) {
            let sum = w.inversion_set(&s).iter().fold(RootVec::zero(s.rank()), |acc, r| acc.add(r));
            let image = w.act_weight(&s, &rho).unwrap();
            let diff: Vec<Rational> =
                rho.root_coords().iter().zip(image.root_coords()).map(|(a, b)| *a - *b).collect();
            assert_eq!(diff, sum.to_rational(), "{label}");
        }
    }
}

#[test]
fn orbit_image_equals_naive_image() {
    for label in ["A3", "B3", "C3", "G2"] {
        let s = sys(label);
        for lambda in sample_weights(&s) {
            let fast = image_set(&s, &lambda, OrbitConfig::default()).unwrap();
            let slow = image_set_naive(&s, &lambda, DEFAULT_SUBGROUP_CAP).unwrap();
            let fast_values: BTreeSet<u64> = fast.values.iter().copied().collect();
            assert_eq!(fast_values, slow, "{label}");
            assert_eq!(fast.orbit_size as u128, orbit_size(&s, &lambda).unwrap());
        }
    }
}

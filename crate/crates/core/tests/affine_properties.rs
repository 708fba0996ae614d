mod common;

use atomic_core::affine::{
    act_weight, act_weight_word, affine_atomic_length, affine_atomic_length_closed, affine_atomic_length_word,
    affine_decomposition_check, affine_from_word, level_one_atomic_length, shi_coefficient,
    shi_coefficient_signed, shi_vector, AffineElement, AffineSystem, AffineWeight,
};
use atomic_core::weyl::evaluate;
use atomic_core::{RootVec, Word};
use common::{aff, group, word};
use proptest::prelude::*;

fn affine_letters(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..=rank, 0..40)
}

fn check_recursion(asys: &AffineSystem, w: &[usize], gamma_idx: usize, m: i64) -> Result<(), TestCaseError> {
    let fin = asys.finite();
    let gamma = fin.positive_roots()[gamma_idx % fin.positive_roots().len()].clone();
    let t = AffineElement::reflection(asys, &gamma, m).unwrap();
    let w = affine_from_word(asys, &word(w)).unwrap();
    let tw = t.compose(&w).unwrap();
    for alpha in fin.positive_roots() {
        let lhs = shi_coefficient(asys, &tw, alpha);
        let rhs = shi_coefficient_signed(asys, &w, &t.finite.act_root(alpha)) + shi_coefficient(asys, &t, alpha);
        prop_assert_eq!(lhs, rhs, "alpha {}", alpha);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn recursion_a2(w in affine_letters(2), g in 0usize..16, m in -3i64..=3) {
        check_recursion(&aff("A2~"), &w, g, m)?;
    }

    #[test]
    fn recursion_b2(w in affine_letters(2), g in 0usize..16, m in -3i64..=3) {
        check_recursion(&aff("B2~"), &w, g, m)?;
    }

    #[test]
    fn recursion_c2(w in affine_letters(2), g in 0usize..16, m in -3i64..=3) {
        check_recursion(&aff("C2~"), &w, g, m)?;
    }

    #[test]
    fn recursion_g2(w in affine_letters(2), g in 0usize..16, m in -3i64..=3) {
        check_recursion(&aff("G2~"), &w, g, m)?;
    }

    #[test]
    fn shi_vectors_are_admissible(w in affine_letters(3)) {
        for label in ["A3~", "B3~", "C3~"] {
            let asys = aff(label);
            let x = affine_from_word(&asys, &word(&w)).unwrap();
            prop_assert!(shi_vector(&asys, &x).is_admissible(asys.finite()));
        }
    }

    #[test]
    fn level_one_length_ignores_the_finite_part(beta in prop::collection::vec(-4i64..=4, 2), f in prop::collection::vec(1usize..=2, 0..8)) {
        for label in ["A2~", "B2~", "C2~", "G2~"] {
            let asys = aff(label);
            // a lattice vector built from the lattice basis
            let basis = asys.lattice_basis();
            let b: Vec<i64> = (0..2).map(|j| beta[0] * basis[0][j] + beta[1] * basis[1][j]).collect();
            let t = AffineElement::translation(&asys, RootVec(b.clone())).unwrap();
            let fin = evaluate(asys.finite(), &word(&f)).unwrap();
            let x = t.compose(&AffineElement::from_finite(fin)).unwrap();
            let l0 = AffineWeight::lambda0(2);
            prop_assert_eq!(affine_atomic_length(&asys, &x, &l0).unwrap(), level_one_atomic_length(&asys, &RootVec(b)));
        }
    }

    #[test]
    fn translation_formula_matches_word_action(w in affine_letters(2)) {
        for label in ["A2~", "C2~", "G2~"] {
            let asys = aff(label);
            let x = affine_from_word(&asys, &word(&w)).unwrap();
            for m in [[1i64, 0, 0], [0, 1, 1], [2, 0, 1]] {
                let lambda = AffineWeight::from_affine_fund(&asys, &m).unwrap();
                prop_assert_eq!(act_weight(&asys, &x, &lambda), act_weight_word(&asys, &word(&w), &lambda).unwrap());
            }
        }
    }
}

#[test]
fn finite_elements_have_shi_entries_minus_one_on_inversions() {
    for label in ["A2~", "B2~", "C2~", "G2~", "A3~", "B3~"] {
        let asys = aff(label);
        let fin = asys.finite();
        for w in group(fin) {
            let v = shi_vector(&asys, &AffineElement::from_finite(w.clone()));
            let inv = w.inversion_set(fin);
            for (alpha, &k) in fin.positive_roots().iter().zip(&v.coefficients) {
                assert_eq!(k, if inv.contains(alpha) { -1 } else { 0 }, "{label}");
            }
        }
    }
}

/// Words of length at most `max` without immediate repeats.
fn words_up_to(rank: usize, max: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    let mut frontier = vec![Vec::<usize>::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..=rank {
                if w.last() != Some(&i) {
                    let mut v = w.clone();
                    v.push(i);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned().map(Word));
        frontier = next;
    }
    out
}

fn dual_path(label: &str, max_len: usize, weights: &[&[i64]]) {
    let asys = aff(label);
    let lambdas: Vec<AffineWeight> =
        weights.iter().map(|m| AffineWeight::from_affine_fund(&asys, m).unwrap()).collect();
    for w in words_up_to(asys.rank(), max_len) {
        let x = affine_from_word(&asys, &w).unwrap();
        for lambda in &lambdas {
            let direct = affine_atomic_length(&asys, &x, lambda).unwrap();
            assert_eq!(direct, affine_atomic_length_word(&asys, &w, lambda).unwrap(), "{label} {w}");
            assert_eq!(direct, affine_atomic_length_closed(&asys, &x, lambda).unwrap(), "{label} {w}");
            assert!(affine_decomposition_check(&asys, &x, lambda).unwrap());
        }
    }
}

#[test]
fn dual_path_a2() {
    dual_path("A2~", 10, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1], &[2, 0, 1]]);
}

#[test]
fn dual_path_a3() {
    dual_path("A3~", 8, &[&[1, 0, 0, 0], &[0, 1, 0, 1]]);
}

#[test]
fn dual_path_c2() {
    dual_path("C2~", 8, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 1]]);
}

#[test]
fn dual_path_b2_and_g2() {
    dual_path("B2~", 8, &[&[1, 0, 0], &[0, 0, 1]]);
    dual_path("G2~", 8, &[&[1, 0, 0], &[0, 1, 0]]);
}

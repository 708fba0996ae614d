mod common;

use atomic_core::atomiclen::two_rho_height;
use atomic_core::rootdata::{classical_positive_root_count, labels_up_to};
use atomic_core::weyl::longest_element;
use atomic_core::{Family, RootSystem, RootVec, TypeLabel};
use common::sys;

fn all_systems() -> Vec<RootSystem> {
    labels_up_to(8).into_iter().map(|l| RootSystem::new(l).unwrap()).collect()
}

#[test]
fn rho_check_pairing_is_height() {
    // 2ρ∨ is the sum of positive coroots
    for s in all_systems() {
        for beta in s.positive_roots() {
            let twice: i64 = s.positive_roots().iter().map(|a| s.coroot_pairing_root(beta, a)).sum();
            assert_eq!(twice, 2 * beta.height(), "{} {beta}", s.name());
        }
    }
}

#[test]
fn simple_reflections_permute_the_other_positive_roots() {
    for s in all_systems() {
        for i in 0..s.rank() {
            let ai = s.simple_root(i);
            for beta in s.positive_roots() {
                let img = s.reflect_root(beta, i);
                let formula = beta.sub(&ai.scale(s.coroot_pairing_root(beta, &ai)));
                assert_eq!(img, formula);
                if *beta == ai {
                    assert_eq!(img, ai.neg());
                } else {
                    assert!(img.is_positive() && s.is_root(&img), "{} s{} {beta}", s.name(), i + 1);
                }
            }
        }
    }
}

#[test]
fn positive_root_counts() {
    for s in all_systems() {
        let label = s.label().unwrap();
        assert_eq!(s.positive_roots().len(), classical_positive_root_count(label), "{label}");
    }
}

fn closed_form_w0(label: TypeLabel) -> i64 {
    let n = label.rank as i64;
    match label.family {
        Family::A => n * (n + 1) * (n + 2) / 6,
        Family::B | Family::C => n * (n + 1) * (4 * n - 1) / 6,
        Family::D => n * (n - 1) * (2 * n - 1) / 3,
        Family::E => [156, 399, 1240][label.rank - 6],
        Family::F => 110,
        Family::G => 16,
    }
}

#[test]
fn two_rho_height_matches_longest_element_values() {
    for s in all_systems() {
        let label = s.label().unwrap();
        assert_eq!(two_rho_height(&s), closed_form_w0(label), "{label}");
    }
}

#[test]
fn minus_w0_permutes_simple_roots() {
    for s in all_systems() {
        let w0 = longest_element(&s);
        let mut images: Vec<RootVec> = (0..s.rank()).map(|i| w0.act_root(&s.simple_root(i)).neg()).collect();
        images.sort();
        let mut simple: Vec<RootVec> = (0..s.rank()).map(|i| s.simple_root(i)).collect();
        simple.sort();
        assert_eq!(images, simple, "{}", s.name());
    }
}

#[test]
fn highest_roots_of_small_types() {
    assert_eq!(sys("B3").highest_root().0, vec![1, 2, 2]);
    assert_eq!(sys("C3").highest_root().0, vec![2, 2, 1]);
    assert_eq!(sys("F4").highest_root().0, vec![2, 3, 4, 2]);
    assert_eq!(sys("E8").highest_root().height(), 29);
}

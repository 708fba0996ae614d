#![allow(dead_code)]

use atomic_core::affine::AffineSystem;
use atomic_core::weyl::{elements, DEFAULT_SUBGROUP_CAP};
use atomic_core::{RootSystem, RootVec, WeylElement, Word};

pub fn sys(label: &str) -> RootSystem {
    RootSystem::new(label.parse().expect("type label")).expect("root system")
}

pub fn aff(label: &str) -> AffineSystem {
    AffineSystem::new(label.parse().expect("type label")).expect("affine system")
}

pub fn word(letters: &[usize]) -> Word {
    Word(letters.to_vec())
}

pub fn rv(coords: &[i64]) -> RootVec {
    RootVec(coords.to_vec())
}

pub fn group(s: &RootSystem) -> Vec<WeylElement> {
    elements(s, DEFAULT_SUBGROUP_CAP).expect("finite group")
}

/// Every nonempty subset of `1..=n`.
pub fn label_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n)).map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect()
}

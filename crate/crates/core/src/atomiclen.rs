//! The atomic length `L(w) = Σ_{α∈N(w)} ht(α)`, its weighted form
//! `L_λ(w) = ⟨λ − w(λ), ρ∨⟩`, λ-inversion sets, and image sets computed
//! over the orbit `W·λ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::orbit::{self, OrbitConfig, OrbitSummary, State};
use crate::rootdata::{RootSystem, RootVec, WeightVec};
use crate::weyl::{self, longest_element, WeylElement, Word};
use crate::{Error, Rational, Result};

/// `Σ_{α∈N(w)} ht(α)`.
pub fn atomic_length(sys: &RootSystem, w: &WeylElement) -> i64 {
    w.inversion_set(sys).iter().map(RootVec::height).sum()
}

fn check_dominant_integral(lambda: &WeightVec) -> Result<Vec<i64>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant);
    }
    lambda.integral_fund().ok_or(Error::NotIntegral)
}

/// `⟨λ − w(λ), ρ∨⟩`, the coordinate sum of `λ − w(λ)` on the simple roots.
pub fn lambda_atomic_length(sys: &RootSystem, w: &WeylElement, lambda: &WeightVec) -> Result<i64> {
    check_dominant_integral(lambda)?;
    let image = w.act_weight(sys, lambda)?;
    let diff: Rational = lambda.height() - image.height();
    debug_assert!(diff.is_integer() && !diff.is_negative());
    Ok(diff.to_integer())
}

/// One entry `m_j · w̲_{j,k}(α_j)` of a λ-inversion set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaEntry {
    /// Simple-reflection label `j` (1-based).
    pub letter: usize,
    /// Occurrence index `k` of `s_j` in the word (1-based).
    pub occurrence: usize,
    /// The coefficient `m_j = ⟨λ, α_j∨⟩`.
    pub coefficient: i64,
    /// The positive root `w̲_{j,k}(α_j)`.
    pub root: RootVec,
}

impl LambdaEntry {
    /// The scaled vector `m_j · w̲_{j,k}(α_j)`.
    pub fn scaled(&self) -> RootVec {
        self.root.scale(self.coefficient)
    }
}

/// λ-inversion set of a reduced word, kept as a multiset in word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaInversionSet {
    pub entries: Vec<LambdaEntry>,
    pub source_word: Word,
}

impl LambdaInversionSet {
    /// `Σ entries`, which equals `λ − w(λ)`.
    pub fn sum(&self, rank: usize) -> RootVec {
        self.entries.iter().fold(RootVec::zero(rank), |acc, e| acc.add(&e.scaled()))
    }

    pub fn total_height(&self) -> i64 {
        self.entries.iter().map(|e| e.coefficient * e.root.height()).sum()
    }

    /// Scaled vectors, sorted, for multiset comparison.
    pub fn sorted_scaled(&self) -> Vec<RootVec> {
        let mut v: Vec<RootVec> = self.entries.iter().map(LambdaEntry::scaled).collect();
        v.sort();
        v
    }
}

pub fn lambda_inversion_set(
    sys: &RootSystem,
    word: &Word,
    lambda: &WeightVec,
) -> Result<LambdaInversionSet> {
    let m = check_dominant_integral(lambda)?;
    let roots = weyl::inversion_set_from_word(sys, word)?;
    let mut seen = alloc::vec![0usize; sys.rank()];
    let entries = word
        .letters()
        .iter()
        .zip(roots)
        .map(|(&j, root)| {
            seen[j - 1] += 1;
            LambdaEntry { letter: j, occurrence: seen[j - 1], coefficient: m[j - 1], root }
        })
        .collect();
    Ok(LambdaInversionSet { entries, source_word: word.clone() })
}

/// Attained values of `L_λ` on the whole group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageReport {
    pub values: Vec<u64>,
    pub max_value: u64,
    pub missing: Vec<u64>,
    pub orbit_size: u64,
    /// Number of orbit points `w(λ)` at each value.
    pub histogram: BTreeMap<u64, u64>,
}

impl ImageReport {
    pub fn from_values(values: BTreeSet<u64>, orbit_size: u64, histogram: BTreeMap<u64, u64>) -> Self {
        let max_value = values.iter().next_back().copied().unwrap_or(0);
        let missing = missing_values(&values, max_value);
        ImageReport { values: values.into_iter().collect(), max_value, missing, orbit_size, histogram }
    }

    pub fn from_summary(summary: OrbitSummary) -> Self {
        let values = summary.depths.keys().copied().collect();
        Self::from_values(values, summary.states, summary.depths)
    }

    /// No gaps in `[0, max]`.
    pub fn is_interval(&self) -> bool {
        self.missing.is_empty() && self.values.first() == Some(&0)
    }
}

/// Integers of `[0, max]` absent from `values`.
pub fn missing_values(values: &BTreeSet<u64>, max: u64) -> Vec<u64> {
    (0..=max).filter(|v| !values.contains(v)).collect()
}

/// Image of `L_λ` via the orbit traversal, using a caller-supplied bucket
/// expander (see [`orbit::traverse_with`]).
pub fn image_set_with<F>(
    sys: &RootSystem,
    lambda: &WeightVec,
    config: OrbitConfig,
    expand: F,
) -> Result<ImageReport>
where
    F: FnMut(u64, &[State]) -> Vec<(u64, State)>,
{
    let m = check_dominant_integral(lambda)?;
    if orbit_size(sys, lambda)? > config.max_states as u128 {
        return Err(Error::OrbitTooLarge { cap: config.max_states });
    }
    let summary = orbit::traverse_with(&m, config, expand)?;
    let report = ImageReport::from_summary(summary);
    debug_assert_eq!(Ok(report.max_value as i64), atomic_length_w0(sys, lambda));
    Ok(report)
}

pub fn image_set(sys: &RootSystem, lambda: &WeightVec, config: OrbitConfig) -> Result<ImageReport> {
    let cartan = sys.cartan();
    image_set_with(sys, lambda, config, |d, bucket| {
        orbit::expand_bucket(cartan, d, bucket, config.max_depth)
    })
}

/// `|W·λ| = |W| / |W_J|` with `J = {i : ⟨λ, α_i∨⟩ = 0}`, the stabilizer
/// being the product of the Weyl groups of the components of `J`.
pub fn orbit_size(sys: &RootSystem, lambda: &WeightVec) -> Result<u128> {
    let m = check_dominant_integral(lambda)?;
    let whole = group_order(sys, &(0..sys.rank()).collect::<Vec<_>>())?;
    let fixed: Vec<usize> = (0..sys.rank()).filter(|&i| m[i] == 0).collect();
    Ok(whole / group_order(sys, &fixed)?)
}

fn group_order(sys: &RootSystem, indices: &[usize]) -> Result<u128> {
    let cartan = sys.cartan();
    let mut left: Vec<usize> = indices.to_vec();
    let mut order = 1u128;
    while let Some(seed) = left.pop() {
        let mut comp = alloc::vec![seed];
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            let (linked, rest): (Vec<usize>, Vec<usize>) = left.iter().partition(|&&j| cartan[i][j] != 0);
            comp.extend(linked);
            left = rest;
            k += 1;
        }
        comp.sort_unstable();
        order *= sys.parabolic(&comp)?.weyl_group_order().ok_or(Error::NotFiniteType)?;
    }
    Ok(order)
}

/// Image computed element by element over `W`; used as a reference.
pub fn image_set_naive(sys: &RootSystem, lambda: &WeightVec, cap: usize) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    for w in weyl::elements(sys, cap)? {
        out.insert(lambda_atomic_length(sys, &w, lambda)? as u64);
    }
    Ok(out)
}

/// `L_λ(w_0)`, the maximum of `L_λ`.
pub fn atomic_length_w0(sys: &RootSystem, lambda: &WeightVec) -> Result<i64> {
    lambda_atomic_length(sys, &longest_element(sys), lambda)
}

/// `⟨2ρ, ρ∨⟩`, which equals `L(w_0)`.
pub fn two_rho_height(sys: &RootSystem) -> i64 {
    let h: Rational = sys.rho().iter().sum();
    (h * Rational::from_integer(2)).to_integer()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub ideal: bool,
    /// Rejected without traversal because every `m_i ≥ 2`.
    pub fast_rejected: bool,
    pub report: Option<ImageReport>,
}

/// Whether `L_λ(W) = [0, L_λ(w_0)]`.
pub fn is_ideal(sys: &RootSystem, lambda: &WeightVec, config: OrbitConfig) -> Result<IdealReport> {
    let m = check_dominant_integral(lambda)?;
    if m.iter().all(|&x| x >= 2) {
        return Ok(IdealReport { ideal: false, fast_rejected: true, report: None });
    }
    let report = image_set(sys, lambda, config)?;
    Ok(IdealReport { ideal: report.is_interval(), fast_rejected: false, report: Some(report) })
}

/// Fundamental weights `ω_i` with `⟨ω_i, α∨⟩ ∈ {0, 1}` for every positive
/// root `α`; these are exactly the nonzero minuscule dominant weights.
pub fn minuscule_weights(sys: &RootSystem) -> Vec<WeightVec> {
    (0..sys.rank())
        .filter_map(|i| {
            let w = sys.fundamental_weight(i).expect("index in range");
            let ok = sys.positive_roots().iter().all(|a| {
                let p = sys.coroot_pairing(w.root_coords(), a);
                p == Rational::from_integer(0) || p == Rational::from_integer(1)
            });
            ok.then_some(w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::evaluate;
    use alloc::vec;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn atomic_length_examples() {
        let s = sys("A2");
        let w = evaluate(&s, &Word(vec![1, 2])).unwrap();
        assert_eq!(atomic_length(&s, &w), 3);
        assert_eq!(atomic_length(&s, &WeylElement::identity(2)), 0);
        let s = sys("A3");
        assert_eq!(atomic_length(&s, &longest_element(&s)), 10);
    }

    #[test]
    fn lambda_atomic_length_examples() {
        let s = sys("C3");
        let lambda = s.weight_from_fund(&[2, 1, 1]);
        assert_eq!(atomic_length_w0(&s, &lambda).unwrap(), 27);
        let zero = s.weight_from_fund(&[0, 0, 0]);
        assert_eq!(atomic_length_w0(&s, &zero).unwrap(), 0);
        let bad = s.weight_from_fund(&[1, -1, 0]);
        assert_eq!(atomic_length_w0(&s, &bad), Err(Error::NotDominant));
    }

    #[test]
    fn orbit_sizes() {
        let e7 = sys("E7");
        assert_eq!(orbit_size(&e7, &e7.rho_weight()), Ok(2_903_040));
        let a3 = sys("A3");
        assert_eq!(orbit_size(&a3, &a3.weight_from_fund(&[0, 1, 0])), Ok(6));
        assert_eq!(orbit_size(&a3, &a3.weight_from_fund(&[0, 0, 0])), Ok(1));
        let e8 = sys("E8");
        assert!(matches!(
            image_set(&e8, &e8.rho_weight(), OrbitConfig::default()),
            Err(Error::OrbitTooLarge { .. })
        ));
    }

    #[test]
    fn image_examples() {
        let cfg = OrbitConfig::default();
        let s = sys("A2");
        let r = image_set(&s, &s.rho_weight(), cfg).unwrap();
        assert_eq!(r.values, vec![0, 1, 3, 4]);
        assert_eq!(r.missing, vec![2]);
        assert_eq!(r.orbit_size, 6);
        let s = sys("G2");
        let r = image_set(&s, &s.rho_weight(), cfg).unwrap();
        assert_eq!(r.values, vec![0, 1, 3, 5, 8, 11, 13, 15, 16]);
        let s = sys("C3");
        let r = image_set(&s, &s.weight_from_fund(&[1, 2, 1]), cfg).unwrap();
        assert_eq!(r.max_value, 30);
        assert_eq!(r.missing, vec![3, 12, 18, 27]);
    }

    #[test]
    fn w0_values() {
        assert_eq!(atomic_length_w0(&sys("F4"), &sys("F4").rho_weight()).unwrap(), 110);
        assert_eq!(two_rho_height(&sys("F4")), 110);
        assert_eq!(atomic_length_w0(&sys("A3"), &sys("A3").rho_weight()).unwrap(), 10);
    }

    #[test]
    fn ideal_examples() {
        let cfg = OrbitConfig::default();
        let s = sys("C3");
        assert!(is_ideal(&s, &s.weight_from_fund(&[2, 1, 1]), cfg).unwrap().ideal);
        assert!(!is_ideal(&s, &s.weight_from_fund(&[1, 1, 2]), cfg).unwrap().ideal);
        let r = is_ideal(&s, &s.weight_from_fund(&[2, 2, 2]), cfg).unwrap();
        assert!(!r.ideal && r.fast_rejected);
    }

    #[test]
    fn minuscule_examples() {
        assert!(minuscule_weights(&sys("E8")).is_empty());
        assert_eq!(minuscule_weights(&sys("A3")).len(), 3);
        let b3 = sys("B3");
        assert_eq!(minuscule_weights(&b3), vec![b3.fundamental_weight(2).unwrap()]);
    }

    #[test]
    fn lambda_inversion_set_for_rho_is_inversion_set() {
        let s = sys("A2");
        let rho = s.rho_weight();
        let word = Word(vec![1, 2]);
        let set = lambda_inversion_set(&s, &word, &rho).unwrap();
        let mut roots: Vec<RootVec> = set.entries.iter().map(|e| e.scaled()).collect();
        roots.sort();
        let mut n = evaluate(&s, &word).unwrap().inversion_set(&s);
        n.sort();
        assert_eq!(roots, n);
    }
}

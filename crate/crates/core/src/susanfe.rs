//! Susanfe elements (`N(w)` equals the set of positive roots moved by `w`),
//! the restricted atomic length `L(w, A)`, the special reflections of the
//! classical types, and the interval induction built on them.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::atomiclen::{self, atomic_length, ImageReport};
use crate::orbit::OrbitConfig;
use crate::rootdata::{Family, RootSystem, RootVec, TypeLabel};
use crate::weyl::{self, a_decomposition, evaluate, ReflectionSubgroup, WeylElement, Word};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SusanfeReport {
    pub element: WeylElement,
    pub fixed_roots: Vec<RootVec>,
    pub inversion_set: Vec<RootVec>,
    pub is_susanfe: bool,
}

pub fn susanfe_check(sys: &RootSystem, w: &WeylElement) -> SusanfeReport {
    let inversion_set = w.inversion_set(sys);
    let (fixed_roots, moved): (Vec<RootVec>, Vec<RootVec>) =
        sys.positive_roots().iter().cloned().partition(|a| w.act_root(a) == *a);
    let is_susanfe = inversion_set == moved;
    SusanfeReport { element: w.clone(), fixed_roots, inversion_set, is_susanfe }
}

/// `L(w, A) = Σ_{α ∈ N(w) \ Φ_A} ht(α)`.
pub fn restricted_atomic_length(sys: &RootSystem, w: &WeylElement, a: &ReflectionSubgroup) -> i64 {
    w.inversion_set(sys)
        .iter()
        .filter(|r| !a.contains_root(r))
        .map(RootVec::height)
        .sum()
}

/// The distinguished reflection of a classical type together with the
/// parabolic `I = {s_2, …, s_n}` and `K_n = L(t, I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialReflection {
    pub t: WeylElement,
    pub root: RootVec,
    pub word: Word,
    /// Labels of `I` (1-based).
    pub labels: Vec<usize>,
    pub k: i64,
}

fn special_word(label: TypeLabel) -> Result<Vec<usize>> {
    let n = label.rank;
    let up_down = |top: usize| -> Vec<usize> { (1..=top).chain((1..top).rev()).collect() };
    match label.family {
        // A: s_θ; B: t' = s_{e_1}; C: s_θ. All are s_1…s_n…s_1.
        Family::A | Family::B | Family::C => Ok(up_down(n)),
        Family::D => {
            let mid: Vec<usize> = (2..=n - 2).collect();
            let mut w = mid.clone();
            w.extend([n, n - 1]);
            w.extend(mid.iter().rev());
            w.push(1);
            w.extend(&mid);
            w.extend([n - 1, n]);
            w.extend(mid.iter().rev());
            Ok(w)
        }
        _ => Err(Error::UnsupportedType(label.to_string())),
    }
}

/// Special reflection of a classical system. `K_n` is computed, not tabulated.
pub fn special_reflection(sys: &RootSystem) -> Result<SpecialReflection> {
    let label = sys.label().ok_or_else(|| Error::UnsupportedType(sys.name()))?;
    if label.family == Family::A && label.rank < 2 {
        return Err(Error::UnsupportedType(label.to_string()));
    }
    let word = Word(special_word(label)?);
    let t = evaluate(sys, &word)?;
    if !weyl::is_reduced(sys, &word)? {
        return Err(Error::NotReduced { word_len: word.len(), length: t.length(sys) });
    }
    let root = t.as_reflection(sys).ok_or(Error::NotAReflection)?;
    let labels: Vec<usize> = (2..=sys.rank()).collect();
    let i = ReflectionSubgroup::parabolic(sys, &labels)?;
    let k = restricted_atomic_length(sys, &t, &i);
    Ok(SpecialReflection { t, root, word, labels, k })
}

/// Conjugate subgroup `t W_B t`, generated by the reflections in `t(β)`.
pub fn conjugate_subgroup(
    sys: &RootSystem,
    t: &WeylElement,
    b: &ReflectionSubgroup,
    cap: usize,
) -> Result<ReflectionSubgroup> {
    let roots: Vec<RootVec> = b.simple_roots().iter().map(|r| t.act_root(r)).collect();
    ReflectionSubgroup::from_roots(sys, &roots, cap)
}

/// Checks `N(tw) = N_A((tw)_A) ⊔ (N(t) \ Φ_A)` and
/// `L(tw) = L_A((tw)_A) + L(t, A)` for `A = tBt`.
pub fn susanfe_decomposition_check(
    sys: &RootSystem,
    t: &WeylElement,
    w: &WeylElement,
    b: &ReflectionSubgroup,
    a: &ReflectionSubgroup,
) -> Result<bool> {
    if t.as_reflection(sys).is_none() || !susanfe_check(sys, t).is_susanfe {
        return Err(Error::PreconditionViolation("t is not a Susanfe reflection"));
    }
    if !b.contains(sys, w) {
        return Err(Error::PreconditionViolation("w is not in W_B"));
    }
    let tw = t.multiply(w)?;
    let (tw_a, _) = a_decomposition(sys, &tw, a);
    let left: HashSet<RootVec> = tw.inversion_set(sys).into_iter().collect();
    let part_a = a.inversion_set(sys, &tw_a);
    let part_t: Vec<RootVec> =
        t.inversion_set(sys).into_iter().filter(|r| !a.contains_root(r)).collect();
    let mut right: HashSet<RootVec> = HashSet::new();
    let disjoint = part_a.iter().chain(&part_t).all(|r| right.insert(r.clone()));
    let sets_ok = disjoint && left == right;
    let length_ok = atomic_length(sys, &tw)
        == a.atomic_length(sys, &tw_a) + restricted_atomic_length(sys, t, a);
    Ok(sets_ok && length_ok)
}

/// Every Susanfe reflection `s_α` with `L(s_α, I)` for `I = {s_2, …, s_n}`.
pub fn susanfe_reflections(sys: &RootSystem) -> Result<Vec<(RootVec, i64)>> {
    let labels: Vec<usize> = (2..=sys.rank()).collect();
    let i = ReflectionSubgroup::parabolic(sys, &labels)?;
    let mut out = Vec::new();
    for a in sys.positive_roots() {
        let t = WeylElement::reflection(sys, a)?;
        if susanfe_check(sys, &t).is_susanfe {
            out.push((a.clone(), restricted_atomic_length(sys, &t, &i)));
        }
    }
    Ok(out)
}

/// Largest rank computed directly; above it `K_{n+1} ≤ b_n` and the
/// interval induction applies.
pub fn induction_base_rank(family: Family) -> Result<usize> {
    match family {
        Family::A => Ok(3),
        Family::B | Family::C => Ok(4),
        Family::D => Ok(5),
        _ => Err(Error::UnsupportedType(alloc::format!("{family:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionStep {
    pub rank: usize,
    /// `b_{n}` of the previous rank.
    pub previous_max: u64,
    pub k: i64,
    /// Value adjoined by `w_0` (type D only).
    pub adjoined_max: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionReport {
    pub label: TypeLabel,
    pub base: TypeLabel,
    pub steps: Vec<InductionStep>,
    pub image: ImageReport,
}

/// Rebuilds `L(W)` as `L(W_I) ∪ (L(W_I) + K_n)` (plus `L(w_0)` in type D),
/// starting from a directly computed base rank.
pub fn surjectivity_susanfe_induction(label: TypeLabel, config: OrbitConfig) -> Result<InductionReport> {
    let label = label.finite();
    let base_rank = induction_base_rank(label.family)?.min(label.rank);
    let base = TypeLabel::new(label.family, base_rank)?;
    let base_sys = RootSystem::new(base)?;
    let base_report = atomiclen::image_set(&base_sys, &base_sys.rho_weight(), config)?;
    let mut values: BTreeSet<u64> = base_report.values.iter().copied().collect();
    let mut steps = Vec::new();
    for rank in base_rank + 1..=label.rank {
        let sys = RootSystem::new(TypeLabel::new(label.family, rank)?)?;
        let special = special_reflection(&sys)?;
        let k = special.k as u64;
        let previous_max = values.iter().next_back().copied().unwrap_or(0);
        let shifted: Vec<u64> = values.iter().map(|v| v + k).collect();
        values.extend(shifted);
        let adjoined_max = (label.family == Family::D).then(|| atomiclen::two_rho_height(&sys) as u64);
        if let Some(b) = adjoined_max {
            values.insert(b);
        }
        steps.push(InductionStep { rank, previous_max, k: special.k, adjoined_max });
    }
    let image = ImageReport::from_values(values, base_report.orbit_size, Default::default());
    Ok(InductionReport { label, base, steps, image })
}

/// Images of `W_I` and of the coset `W_I t`, computed by enumeration.
///
/// `shift_holds` records `L(W_I t) = L(W_I) + K_n`; `covers_interval`
/// records that `L(W_I) ∪ L(W_I t)`, together with `L(w_0)` in type D,
/// is all of `[0, L(w_0)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionCheck {
    pub parabolic_image: BTreeSet<u64>,
    pub coset_image: BTreeSet<u64>,
    pub k: i64,
    pub shift_holds: bool,
    pub covers_interval: bool,
}

pub fn union_identity_check(sys: &RootSystem, cap: usize) -> Result<UnionCheck> {
    let special = special_reflection(sys)?;
    let i = ReflectionSubgroup::parabolic(sys, &special.labels)?;
    let w_i = i.elements(sys, cap)?;
    let mut parabolic_image = BTreeSet::new();
    let mut coset_image = BTreeSet::new();
    for x in &w_i {
        parabolic_image.insert(atomic_length(sys, x) as u64);
        coset_image.insert(atomic_length(sys, &x.multiply(&special.t)?) as u64);
    }
    let k = special.k as u64;
    let shifted: BTreeSet<u64> = parabolic_image.iter().map(|v| v + k).collect();
    let top = atomiclen::two_rho_height(sys) as u64;
    let mut union: BTreeSet<u64> = parabolic_image.union(&coset_image).copied().collect();
    if sys.label().is_some_and(|l| l.family == Family::D) {
        union.insert(top);
    }
    Ok(UnionCheck {
        shift_holds: coset_image == shifted,
        covers_interval: union == (0..=top).collect(),
        parabolic_image,
        coset_image,
        k: special.k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn highest_root_reflection_is_susanfe() {
        let s = sys("F4");
        let t = WeylElement::reflection(&s, s.highest_root()).unwrap();
        assert!(susanfe_check(&s, &t).is_susanfe);
        // N(e) and the set of moved roots are both empty
        let r = susanfe_check(&s, &WeylElement::identity(4));
        assert!(r.is_susanfe && r.inversion_set.is_empty());
        assert_eq!(r.fixed_roots.len(), 24);
    }

    #[test]
    fn b4_t_prime() {
        let s = sys("B4");
        let sp = special_reflection(&s).unwrap();
        assert_eq!(sp.root, RootVec(vec![1, 1, 1, 1]));
        assert_eq!(sp.k, 28);
        let r = susanfe_check(&s, &sp.t);
        assert!(r.is_susanfe);
        let i = ReflectionSubgroup::parabolic(&s, &[2, 3, 4]).unwrap();
        assert_eq!(r.fixed_roots, i.positive_roots());
    }

    #[test]
    fn special_constants() {
        assert_eq!(special_reflection(&sys("A4")).unwrap().k, 10);
        assert_eq!(special_reflection(&sys("D5")).unwrap().k, 31);
        assert_eq!(special_reflection(&sys("C4")).unwrap().k, 28);
        assert_eq!(special_reflection(&sys("A4")).unwrap().word, Word(vec![1, 2, 3, 4, 3, 2, 1]));
        assert!(matches!(special_reflection(&sys("E6")), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn restricted_length_of_full_group_is_zero() {
        let s = sys("B3");
        let full = ReflectionSubgroup::full(&s);
        let w0 = weyl::longest_element(&s);
        assert_eq!(restricted_atomic_length(&s, &w0, &full), 0);
    }

    #[test]
    fn induction_a4() {
        let r = surjectivity_susanfe_induction("A4".parse().unwrap(), OrbitConfig::default()).unwrap();
        assert_eq!(r.steps, vec![InductionStep { rank: 4, previous_max: 10, k: 10, adjoined_max: None }]);
        assert!(r.image.is_interval());
        assert_eq!(r.image.max_value, 20);
    }
}

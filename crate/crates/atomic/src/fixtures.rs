//! Worked examples with published values, run by `atomic verify`.
//!
//! Each fixture recomputes its values from scratch and compares them with
//! the tabulated ones. A fixture returns a short detail string on success.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::panic::{self, AssertUnwindSafe};

use atomic_core::affine::{
    affine_atomic_length, affine_atomic_length_closed, affine_atomic_length_word, affine_from_word,
    affine_image_probe, level_one_atomic_length, shi_vector, AffineElement, AffineSystem, AffineWeight,
};
use atomic_core::atomiclen::{
    atomic_length, atomic_length_w0, image_set, is_ideal, lambda_atomic_length, lambda_inversion_set,
    minuscule_weights, two_rho_height,
};
use atomic_core::cores::{core_count_vs_lattice, is_core, orbit_cores, residue_reflect, Partition};
use atomic_core::orbit::OrbitConfig;
use atomic_core::perms::{
    cosine_range_probe, inversion_root, invsum_total, permutohedron_distance_sq, to_weyl, type_a_system,
    Permutation, Permutations,
};
use atomic_core::rootdata::labels_up_to;
use atomic_core::susanfe::{special_reflection, surjectivity_susanfe_induction, susanfe_check};
use atomic_core::weyl::{
    a_decomposition, elements, evaluate, inversion_set_from_word, is_reduced, longest_element, utopic_check, utopic_check_in,
    ReflectionSubgroup, DEFAULT_SUBGROUP_CAP,
};
use atomic_core::{RootSystem, RootVec, WeylElement, Word};

use crate::report::{CheckJson, CoresJson, ImageJson};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

impl From<atomic_core::Error> for Failure {
    fn from(e: atomic_core::Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure(s)
    }
}

pub type Check = Result<String, Failure>;

pub struct Fixture {
    pub name: &'static str,
    pub check: fn() -> Check,
}

fn ensure_eq<T: PartialEq + Debug>(what: &str, got: T, want: T) -> Result<(), Failure> {
    if got == want {
        Ok(())
    } else {
        Err(Failure(format!("{what}: got {got:?}, expected {want:?}")))
    }
}

fn ensure(what: &str, cond: bool) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure(format!("{what} does not hold")))
    }
}

fn sys(label: &str) -> Result<RootSystem, Failure> {
    Ok(RootSystem::new(label.parse()?)?)
}

fn aff(label: &str) -> Result<AffineSystem, Failure> {
    Ok(AffineSystem::new(label.parse()?)?)
}

fn rv(v: &[i64]) -> RootVec {
    RootVec(v.to_vec())
}

fn word(v: &[usize]) -> Word {
    Word(v.to_vec())
}

fn element(s: &RootSystem, v: &[usize]) -> Result<WeylElement, Failure> {
    Ok(evaluate(s, &word(v))?)
}

fn set<T: Ord>(v: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    v.into_iter().collect()
}

/// `e_i − e_j` in `A_{n−1}`.
fn e(n: usize, i: usize, j: usize) -> RootVec {
    inversion_root(n, i, j)
}

fn image_of(s: &RootSystem, m: &[i64]) -> Result<BTreeSet<u64>, Failure> {
    let r = image_set(s, &s.weight_from_fund(m), OrbitConfig::default())?;
    Ok(set(r.values))
}

// ---- root data ----

fn a2_positive_roots() -> Check {
    let s = sys("A2")?;
    ensure_eq("positive roots", s.positive_roots().to_vec(), vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])])?;
    ensure_eq("highest root", s.highest_root(), &rv(&[1, 1]))?;
    Ok("Φ+ = {α1, α2, α1+α2}, θ = α1+α2".into())
}

fn type_a_root_heights() -> Check {
    for n in 2..=6 {
        let s = type_a_system(n)?;
        for i in 1..n {
            for j in i + 1..=n {
                let r = e(n, i, j);
                ensure("e_ij is a root", s.is_root(&r))?;
                ensure_eq("ht(e_ij)", r.height(), (j - i) as i64)?;
            }
        }
    }
    Ok("ht(e_ij) = j − i for A1..A5".into())
}

fn b4_highest_root_height() -> Check {
    let s = sys("B4")?;
    ensure_eq("θ", s.highest_root(), &rv(&[1, 2, 2, 2]))?;
    ensure_eq("ht θ", s.highest_root().height(), 7)?;
    Ok("ht(e1+e2) = 7".into())
}

fn a2_cartan_entry() -> Check {
    let s = sys("A2")?;
    ensure_eq("⟨α2, α1∨⟩", s.pairing_root(&rv(&[0, 1]), 0), -1)?;
    ensure_eq("a_12", s.cartan()[0][1], -1)?;
    Ok("⟨α2, α1∨⟩ = −1".into())
}

fn a3_two_rho_height() -> Check {
    ensure_eq("⟨2ρ, ρ∨⟩", two_rho_height(&sys("A3")?), 10)?;
    Ok("⟨2ρ, ρ∨⟩ = 10 in A3".into())
}

// ---- Weyl group ----

fn a2_simple_action() -> Check {
    let s = sys("A2")?;
    ensure_eq("s1(α2)", WeylElement::simple(&s, 1)?.act_root(&rv(&[0, 1])), rv(&[1, 1]))?;
    Ok("s1(α2) = α1+α2".into())
}

fn a2_inversion_sets() -> Check {
    let s = sys("A2")?;
    let w = element(&s, &[1, 2])?;
    ensure_eq("N(s1s2)", set(w.inversion_set(&s)), set([rv(&[1, 0]), rv(&[1, 1])]))?;
    ensure_eq("word formula", set(inversion_set_from_word(&s, &word(&[1, 2]))?), set(w.inversion_set(&s)))?;
    ensure_eq("N(s2s1)", set(element(&s, &[2, 1])?.inversion_set(&s)), set([rv(&[0, 1]), rv(&[1, 1])]))?;
    ensure_eq("L(s1s2)", atomic_length(&s, &w), 3)?;
    Ok("N(s1s2) = {α1, α1+α2}, N(s2s1) = {α2, α1+α2}, both of atomic length 3".into())
}

fn a3_inversion_set() -> Check {
    let s = sys("A3")?;
    let w = element(&s, &[1, 2, 1, 3])?;
    let want = set([e(4, 1, 2), e(4, 1, 3), e(4, 2, 3), e(4, 1, 4)]);
    ensure_eq("N(s1s2s1s3)", set(w.inversion_set(&s)), want)?;
    ensure_eq("L(s1s2s1s3)", atomic_length(&s, &w), 7)?;
    Ok("N(s1s2s1s3) = {e12, e13, e23, e14}, L = 7".into())
}

fn a4_word_inversion_set() -> Check {
    let s = sys("A4")?;
    let got = inversion_set_from_word(&s, &word(&[1, 2, 1, 3, 4, 3]))?;
    let want = [e(5, 1, 2), e(5, 2, 3), e(5, 1, 3), e(5, 1, 4), e(5, 4, 5), e(5, 1, 5)];
    ensure_eq("length", got.len(), 6)?;
    ensure_eq("N(s1s2s1s3s4s3)", set(got), set(want))?;
    Ok("{e12, e23, e13, e14, e45, e15}".into())
}

fn a2_longest_length() -> Check {
    let s = sys("A2")?;
    ensure_eq("ℓ(w0)", longest_element(&s).length(&s), 3)?;
    ensure_eq("w0", longest_element(&s), element(&s, &[1, 2, 1])?)?;
    Ok("ℓ(s1s2s1) = 3".into())
}

fn a_longest_one_line() -> Check {
    for n in 2..=6 {
        let w0 = Permutation::longest(n);
        ensure_eq("one-line w0", w0.one_line().to_vec(), (1..=n).rev().collect::<Vec<_>>())?;
        let s = type_a_system(n)?;
        ensure_eq("to_weyl(w0)", to_weyl(&s, &w0)?, longest_element(&s))?;
    }
    Ok("w0 = n(n−1)…1 for n ≤ 6".into())
}

fn a3_reflection_subgroup() -> Check {
    let s = sys("A3")?;
    let gens = [element(&s, &[1, 2, 1])?, element(&s, &[3])?];
    let a = ReflectionSubgroup::from_reflections(&s, &gens, DEFAULT_SUBGROUP_CAP)?;
    ensure_eq("Δ_A", set(a.simple_roots().to_vec()), set([e(4, 1, 3), e(4, 3, 4)]))?;
    ensure_eq("Φ_A+", set(a.positive_roots().to_vec()), set([e(4, 1, 3), e(4, 3, 4), e(4, 1, 4)]))?;
    ensure_eq("Cartan of W_A", a.cartan().to_vec(), vec![vec![2, -1], vec![-1, 2]])?;
    let w = element(&s, &[1, 2, 1, 3])?;
    ensure("w ∈ W_A", a.contains(&s, &w))?;
    ensure_eq("N_A(w)", set(a.inversion_set(&s, &w)), set([e(4, 1, 3), e(4, 1, 4)]))?;
    ensure_eq("L_A(w)", a.atomic_length(&s, &w), 5)?;
    ensure_eq("L(w)", atomic_length(&s, &w), 7)?;
    Ok("Δ_A = {e13, e34}, W_A of type A2, L_A(s1s2s1s3) = 5 ≠ 7 = L".into())
}

fn a4_special_decomposition() -> Check {
    let s = sys("A4")?;
    let t = element(&s, &[1, 2, 3, 4, 3, 2, 1])?;
    let i = ReflectionSubgroup::parabolic(&s, &[2, 3, 4])?;
    let (t_i, rest) = a_decomposition(&s, &t, &i);
    ensure_eq("t_I", t_i, element(&s, &[4, 3, 2])?)?;
    ensure_eq("ᴵt", rest.clone(), element(&s, &[1, 2, 3, 4])?)?;
    ensure_eq("N(ᴵt)", set(rest.inversion_set(&s)), set((2..=5).map(|j| e(5, 1, j))))?;
    Ok("t_I = s4s3s2, ᴵt = s1s2s3s4, N(ᴵt) = {e12, …, e15}".into())
}

fn c4_special_decomposition() -> Check {
    let s = sys("C4")?;
    let sp = special_reflection(&s)?;
    ensure_eq("word", sp.word.clone(), word(&[1, 2, 3, 4, 3, 2, 1]))?;
    ensure_eq("root", sp.root.clone(), s.highest_root().clone())?;
    let i = ReflectionSubgroup::parabolic(&s, &sp.labels)?;
    let (t_i, rest) = a_decomposition(&s, &sp.t, &i);
    ensure("t_I = e", t_i.is_identity())?;
    ensure_eq("ᴵt", rest, sp.t.clone())?;
    ensure("ᴵt is Susanfe", susanfe_check(&s, &sp.t).is_susanfe)?;
    Ok("t_I = e and ᴵt = t".into())
}

fn reflections_are_utopic() -> Check {
    let mut checked = 0;
    for label in ["A3", "B3", "C3"] {
        let s = sys(label)?;
        for mask in 0u32..8 {
            let labels: Vec<usize> = (1..=3).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            let i = ReflectionSubgroup::parabolic(&s, &labels)?;
            for alpha in s.positive_roots() {
                let t = WeylElement::reflection(&s, alpha)?;
                ensure("reflection utopic", utopic_check(&s, &t, &i, DEFAULT_SUBGROUP_CAP)?)?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (reflection, standard parabolic) pairs in A3, B3, C3"))
}

fn b_utopic_counts() -> Check {
    let mut out = Vec::new();
    let (mut f_prev, mut f) = (1u64, 1u64);
    // B5 alone costs seconds; the trend is visible by B4
    for n in 2..=4 {
        (f_prev, f) = (f, f + f_prev);
        let s = RootSystem::new(atomic_core::TypeLabel::new(atomic_core::Family::B, n)?)?;
        let labels: Vec<usize> = (2..=n).collect();
        let i = ReflectionSubgroup::parabolic(&s, &labels)?;
        let group = i.elements(&s, DEFAULT_SUBGROUP_CAP)?;
        let mut count = 0;
        for w in elements(&s, DEFAULT_SUBGROUP_CAP)? {
            if utopic_check_in(&s, &w, &i, &group)? {
                count += 1;
            }
        }
        out.push(format!("B{n}: {count} (F_{}−1 = {})", n + 1, f - 1));
    }
    // exploratory, reported without a verdict
    Ok(out.join(", "))
}

// ---- atomic length ----

fn a2_atomic_length() -> Check {
    let s = sys("A2")?;
    ensure_eq("L(s1s2)", atomic_length(&s, &element(&s, &[1, 2])?), 3)?;
    ensure_eq("L(s1)", atomic_length(&s, &element(&s, &[1])?), 1)?;
    Ok("L(s1s2) = 3".into())
}

fn a3_w0_atomic_length() -> Check {
    let s = sys("A3")?;
    ensure_eq("L(w0)", atomic_length(&s, &longest_element(&s)), 10)?;
    ensure_eq("L_ρ(w0)", atomic_length_w0(&s, &s.rho_weight())?, 10)?;
    Ok("L(w0) = 10 in A3".into())
}

fn rho_length_is_atomic_length() -> Check {
    for label in ["A2", "B2"] {
        let s = sys(label)?;
        for w in elements(&s, DEFAULT_SUBGROUP_CAP)? {
            ensure_eq(label, lambda_atomic_length(&s, &w, &s.rho_weight())?, atomic_length(&s, &w))?;
        }
    }
    Ok("L_ρ = L on A2 and B2".into())
}

fn a4_lambda_inversion_sets() -> Check {
    let s = sys("A4")?;
    let m = [2, 3, 5, 7];
    let lambda = s.weight_from_fund(&m);
    let first = word(&[1, 2, 1, 3, 4, 3]);
    let second = word(&[2, 1, 4, 2, 3, 4]);
    ensure_eq("same element", evaluate(&s, &first)?, evaluate(&s, &second)?)?;
    ensure("both reduced", is_reduced(&s, &first)? && is_reduced(&s, &second)?)?;
    let pairs = |w: &Word| -> Result<Vec<(usize, RootVec)>, Failure> {
        let mut v: Vec<_> =
            lambda_inversion_set(&s, w, &lambda)?.entries.into_iter().map(|x| (x.letter, x.root)).collect();
        v.sort();
        Ok(v)
    };
    let mut want1 = vec![
        (1, e(5, 1, 2)),
        (1, e(5, 2, 3)),
        (2, e(5, 1, 3)),
        (3, e(5, 1, 4)),
        (3, e(5, 4, 5)),
        (4, e(5, 1, 5)),
    ];
    let mut want2 = vec![
        (1, e(5, 1, 3)),
        (2, e(5, 2, 3)),
        (2, e(5, 1, 2)),
        (3, e(5, 1, 5)),
        (4, e(5, 1, 4)),
        (4, e(5, 4, 5)),
    ];
    want1.sort();
    want2.sort();
    ensure_eq("N_λ(first word)", pairs(&first)?, want1)?;
    ensure_eq("N_λ(second word)", pairs(&second)?, want2)?;
    let scaled = |w: &Word| -> Result<BTreeSet<RootVec>, Failure> {
        Ok(set(lambda_inversion_set(&s, w, &lambda)?.entries.iter().map(|x| x.scaled())))
    };
    ensure("the two λ-inversion sets differ", scaled(&first)? != scaled(&second)?)?;
    Ok("both λ-inversion sets reproduced; they differ for m = (2,3,5,7)".into())
}

fn rank_two_images() -> Check {
    let a2 = image_set(&sys("A2")?, &sys("A2")?.rho_weight(), OrbitConfig::default())?;
    ensure_eq("A2", a2.values.clone(), vec![0, 1, 3, 4])?;
    ensure_eq("A2 missing", a2.missing, vec![2])?;
    ensure_eq("B2", image_of(&sys("B2")?, &[1, 1])?, set([0, 1, 3, 4, 6, 7]))?;
    ensure_eq("G2", image_of(&sys("G2")?, &[1, 1])?, set([0, 1, 3, 5, 8, 11, 13, 15, 16]))?;
    Ok("A2, B2, G2 images match".into())
}

fn w0_table() -> Check {
    for (label, v) in [("A3", 10), ("F4", 110), ("E6", 156), ("E7", 399), ("E8", 1240), ("G2", 16)] {
        let s = sys(label)?;
        ensure_eq(label, two_rho_height(&s), v)?;
        ensure_eq(label, atomic_length_w0(&s, &s.rho_weight())?, v)?;
    }
    Ok("A3 10, F4 110, E6 156, E7 399, E8 1240, G2 16".into())
}

fn c3_ideal_examples() -> Check {
    let s = sys("C3")?;
    let cfg = OrbitConfig::default();
    let l211 = s.weight_from_fund(&[2, 1, 1]);
    ensure_eq("L_λ(w0), λ = (2,1,1)", atomic_length_w0(&s, &l211)?, 27)?;
    ensure_eq("(2,1,1)", image_of(&s, &[2, 1, 1])?, set(0..=27))?;
    ensure("(2,1,1) ideal", is_ideal(&s, &l211, cfg)?.ideal)?;
    let want121 = set([
        0, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 19, 20, 21, 22, 23, 24, 25, 26, 28, 29, 30,
    ]);
    ensure_eq("(1,2,1)", image_of(&s, &[1, 2, 1])?, want121)?;
    let r = image_set(&s, &s.weight_from_fund(&[1, 2, 1]), cfg)?;
    ensure_eq("(1,2,1) missing", r.missing, vec![3, 12, 18, 27])?;
    let want112 = set([
        0, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 13, 14, 15, 16, 17, 18, 20, 21, 22, 23, 24, 25, 27, 28, 29, 30, 31,
    ]);
    ensure_eq("(1,1,2)", image_of(&s, &[1, 1, 2])?, want112)?;
    ensure("(1,1,2) not ideal", !is_ideal(&s, &s.weight_from_fund(&[1, 1, 2]), cfg)?.ideal)?;
    Ok("(2,1,1) ideal with max 27; (1,2,1) and (1,1,2) not ideal".into())
}

fn minuscule_tables() -> Check {
    let fund = |label: &str| -> Result<Vec<Vec<i64>>, Failure> {
        Ok(minuscule_weights(&sys(label)?).iter().filter_map(|w| w.integral_fund()).collect())
    };
    ensure_eq("E8", fund("E8")?, vec![])?;
    ensure_eq("F4", fund("F4")?, vec![])?;
    ensure_eq("G2", fund("G2")?, vec![])?;
    ensure_eq("A3", fund("A3")?, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])?;
    ensure_eq("B3", fund("B3")?, vec![vec![0, 0, 1]])?;
    Ok("none in E8, F4, G2; all ω_i in A3; ω3 in B3".into())
}

// ---- Susanfe reflections ----

fn highest_root_reflections_are_susanfe() -> Check {
    let labels = labels_up_to(8);
    for label in &labels {
        let s = RootSystem::new(*label)?;
        let t = WeylElement::reflection(&s, s.highest_root())?;
        ensure(&format!("s_θ Susanfe in {label}"), susanfe_check(&s, &t).is_susanfe)?;
    }
    Ok(format!("{} types up to rank 8", labels.len()))
}

fn b4_t_prime_is_susanfe() -> Check {
    let s = sys("B4")?;
    let sp = special_reflection(&s)?;
    ensure_eq("root of t′", sp.root.clone(), rv(&[1, 1, 1, 1]))?;
    let report = susanfe_check(&s, &sp.t);
    ensure("t′ Susanfe", report.is_susanfe)?;
    let i = ReflectionSubgroup::parabolic(&s, &[2, 3, 4])?;
    ensure_eq("Fix(t′)", set(report.fixed_roots), set(i.positive_roots().to_vec()))?;
    Ok("t′ = s_e1 is Susanfe with Fix = Φ_I+".into())
}

fn special_constants() -> Check {
    let k = |label: &str| -> Result<i64, Failure> { Ok(special_reflection(&sys(label)?)?.k) };
    ensure_eq("K(A4)", k("A4")?, 10)?;
    ensure_eq("K(B4)", k("B4")?, 28)?;
    ensure_eq("K(D5)", k("D5")?, 31)?;
    let s = sys("A4")?;
    let sp = special_reflection(&s)?;
    ensure_eq("A4 word", sp.word.clone(), word(&[1, 2, 3, 4, 3, 2, 1]))?;
    let i = ReflectionSubgroup::parabolic(&s, &sp.labels)?;
    let (_, rest) = a_decomposition(&s, &sp.t, &i);
    ensure_eq("N(ᴵt)", set(rest.inversion_set(&s)), set((2..=5).map(|j| e(5, 1, j))))?;
    Ok("K(A4) = 10, K(B4) = 28, K(D5) = 31".into())
}

fn a4_induction() -> Check {
    let r = surjectivity_susanfe_induction("A4".parse()?, OrbitConfig::default())?;
    ensure_eq("image", set(r.image.values.clone()), set(0..=20))?;
    let step = r.steps.last().ok_or_else(|| Failure("no induction step".into()))?;
    ensure_eq("b_3 + K_4", step.previous_max as i64 + step.k, 20)?;
    ensure_eq("b_3", step.previous_max, 10)?;
    Ok("[0, 20] = [0, b_3] ∪ ([0, b_3] + 10)".into())
}

fn d6_induction() -> Check {
    let r = surjectivity_susanfe_induction("D6".parse()?, OrbitConfig::default())?;
    let step = r.steps.last().ok_or_else(|| Failure("no induction step".into()))?;
    let b6 = two_rho_height(&sys("D6")?);
    ensure_eq("b_5 + K_6", step.previous_max as i64 + step.k, b6 - 1)?;
    ensure_eq("adjoined", step.adjoined_max, Some(b6 as u64))?;
    ensure("interval", r.image.is_interval() && r.image.max_value == b6 as u64)?;
    Ok(format!("b_5 + K_6 = {} + {} = b_6 − 1", step.previous_max, step.k))
}

// ---- affine ----

struct AffineRow {
    word: &'static [usize],
    finite: &'static [usize],
    beta: [i64; 2],
    gamma: [i64; 2],
    value: i64,
}

const A2_AFFINE_ROWS: [AffineRow; 12] = [
    AffineRow { word: &[], finite: &[], beta: [0, 0], gamma: [0, 0], value: 0 },
    AffineRow { word: &[0], finite: &[2, 1, 2], beta: [1, 1], gamma: [-1, -1], value: 1 },
    AffineRow { word: &[1, 0], finite: &[2, 1], beta: [0, 1], gamma: [-1, -1], value: 2 },
    AffineRow { word: &[2, 0], finite: &[1, 2], beta: [1, 0], gamma: [-1, -1], value: 2 },
    AffineRow { word: &[2, 1, 0], finite: &[1], beta: [0, -1], gamma: [-1, -1], value: 4 },
    AffineRow { word: &[1, 2, 0], finite: &[2], beta: [-1, 0], gamma: [-1, -1], value: 4 },
    AffineRow { word: &[2, 1, 2, 0], finite: &[], beta: [-1, -1], gamma: [-1, -1], value: 5 },
    AffineRow { word: &[0, 2, 1, 0], finite: &[1, 2], beta: [2, 1], gamma: [-1, -2], value: 6 },
    AffineRow { word: &[0, 1, 2, 0], finite: &[2, 1], beta: [1, 2], gamma: [-2, -1], value: 6 },
    AffineRow { word: &[0, 2, 1, 2, 0], finite: &[1, 2, 1], beta: [2, 2], gamma: [-2, -2], value: 8 },
    AffineRow { word: &[1, 0, 2, 1, 0], finite: &[2], beta: [-1, 1], gamma: [-1, -2], value: 9 },
    AffineRow { word: &[2, 0, 1, 2, 0], finite: &[1], beta: [1, -1], gamma: [-2, -1], value: 9 },
];

fn a2_affine_decomposition_table() -> Check {
    let asys = aff("A2~")?;
    let l0 = AffineWeight::lambda0(2);
    for row in &A2_AFFINE_ROWS {
        let w = word(row.word);
        let x = affine_from_word(&asys, &w)?;
        let tag = format!("{w}");
        ensure_eq(&format!("{tag}: w̄"), x.finite.clone(), element(asys.finite(), row.finite)?)?;
        ensure_eq(&format!("{tag}: β"), x.beta.clone(), rv(&row.beta))?;
        ensure_eq(&format!("{tag}: γ"), x.gamma(&asys), rv(&row.gamma))?;
        ensure_eq(&format!("{tag}: L direct"), affine_atomic_length(&asys, &x, &l0)?, row.value)?;
        ensure_eq(&format!("{tag}: L closed"), affine_atomic_length_closed(&asys, &x, &l0)?, row.value)?;
        ensure_eq(&format!("{tag}: L by word"), affine_atomic_length_word(&asys, &w, &l0)?, row.value)?;
        ensure_eq(&format!("{tag}: L lattice"), level_one_atomic_length(&asys, &x.beta), row.value)?;
    }
    Ok("12 rows: values 0,1,2,2,4,4,5,6,6,8,9,9".into())
}

fn a2_affine_s0() -> Check {
    let asys = aff("A2~")?;
    let x = affine_from_word(&asys, &word(&[0]))?;
    ensure_eq("β", x.beta.clone(), rv(&[1, 1]))?;
    ensure_eq("w̄", x.finite.clone(), WeylElement::reflection(asys.finite(), &rv(&[1, 1]))?)?;
    ensure_eq("w̄ = s2s1s2", x.finite.clone(), element(asys.finite(), &[2, 1, 2])?)?;
    ensure_eq("L(s0)", affine_atomic_length(&asys, &x, &AffineWeight::lambda0(2))?, 1)?;
    Ok("s0 = τ_θ s_θ, L_Λ0(s0) = 1".into())
}

fn a2_affine_values() -> Check {
    let asys = aff("A2~")?;
    let l0 = AffineWeight::lambda0(2);
    let x = affine_from_word(&asys, &word(&[2, 1, 0]))?;
    ensure_eq("β(s2s1s0)", x.beta.clone(), rv(&[0, -1]))?;
    ensure_eq("w̄(s2s1s0)", x.finite.clone(), element(asys.finite(), &[1])?)?;
    let y = affine_from_word(&asys, &word(&[0, 2, 1, 2, 0]))?;
    ensure_eq("L(s0s2s1s2s0)", affine_atomic_length(&asys, &y, &l0)?, 8)?;
    ensure_eq("β = α1+α2", level_one_atomic_length(&asys, &rv(&[1, 1])), 1)?;
    ensure_eq("β = α1−α2", level_one_atomic_length(&asys, &rv(&[1, -1])), 9)?;
    Ok("s2s1s0 → (−α2, s1); L(s0s2s1s2s0) = 8; lattice values 1 and 9".into())
}

fn a2_lambda0_probe() -> Check {
    let asys = aff("A2~")?;
    let r = affine_image_probe(&asys, &AffineWeight::lambda0(2), 12, OrbitConfig::default())?;
    ensure_eq("first values", r.values[..5].to_vec(), vec![0, 1, 2, 4, 5])?;
    ensure("3 is missing", r.missing.contains(&3))?;
    ensure_eq("lattice cross-check", r.lattice_agrees, Some(true))?;
    Ok(format!("values up to 12: {:?}", r.values))
}

fn a3_lambda0_probe() -> Check {
    let asys = aff("A3~")?;
    let r = affine_image_probe(&asys, &AffineWeight::lambda0(3), 30, OrbitConfig::default())?;
    ensure_eq("missing", r.missing, vec![])?;
    ensure_eq("lattice cross-check", r.lattice_agrees, Some(true))?;
    Ok("[0, 30] attained".into())
}

/// Shi coefficients of a finite element, rows by height, lowest first.
fn finite_shi_rows(label: &str, w: &[usize]) -> Result<Vec<Vec<i64>>, Failure> {
    let asys = aff(&format!("{label}~"))?;
    let x = AffineElement::from_finite(element(asys.finite(), w)?);
    let shi = shi_vector(&asys, &x);
    ensure("admissible", shi.is_admissible(asys.finite()))?;
    Ok(shi.rows_by_height(asys.finite()).into_iter().map(|r| r.into_iter().map(|(_, k)| k).collect()).collect())
}

fn shi_a4() -> Check {
    let got = finite_shi_rows("A4", &[1, 2, 3, 4, 3, 2, 1])?;
    ensure_eq("Shi(t)", got, vec![vec![-1, 0, 0, -1], vec![-1, 0, -1], vec![-1, -1], vec![-1]])?;
    Ok("−1 at e12, e45, e13, e35, e14, e25, e15".into())
}

const B4_T: [usize; 11] = [2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 2];

fn shi_b4() -> Check {
    let s = sys("B4")?;
    ensure_eq("t = s_θ", element(&s, &B4_T)?, WeylElement::reflection(&s, s.highest_root())?)?;
    let got = finite_shi_rows("B4", &B4_T)?;
    let want = vec![
        vec![0, -1, 0, 0],
        vec![-1, -1, 0],
        vec![-1, -1, 0],
        vec![-1, -1],
        vec![-1, -1],
        vec![-1],
        vec![-1],
    ];
    ensure_eq("Shi(t)", got, want)?;
    // the two factors of t = t_I · ᴵt
    let parts = (finite_shi_rows("B4", &B4_T[..5])?, finite_shi_rows("B4", &B4_T[5..])?);
    let want_i = vec![vec![0, -1, 0, 0], vec![0, -1, 0], vec![0, -1, 0], vec![0, -1], vec![0, -1], vec![0], vec![0]];
    let want_rest =
        vec![vec![-1, 0, 0, 0], vec![-1, 0, 0], vec![-1, 0, 0], vec![-1, 0], vec![-1, 0], vec![-1], vec![0]];
    ensure_eq("Shi(t_I)", parts.0, want_i)?;
    ensure_eq("Shi(ᴵt)", parts.1, want_rest)?;
    let i = ReflectionSubgroup::parabolic(&s, &[2, 3, 4])?;
    let (t_i, rest) = a_decomposition(&s, &element(&s, &B4_T)?, &i);
    ensure_eq("t_I", t_i, element(&s, &B4_T[..5])?)?;
    ensure_eq("ᴵt", rest, element(&s, &B4_T[5..])?)?;
    Ok("Shi vectors of t, t_I and ᴵt match".into())
}

fn shi_b4_t_prime() -> Check {
    let got = finite_shi_rows("B4", &[1, 2, 3, 4, 3, 2, 1])?;
    let want = vec![vec![-1, 0, 0, 0], vec![-1, 0, 0], vec![-1, 0, 0], vec![-1, 0], vec![-1, 0], vec![-1], vec![-1]];
    ensure_eq("Shi(t′)", got, want)?;
    Ok("seven entries −1, all in the first column".into())
}

fn shi_c4() -> Check {
    let got = finite_shi_rows("C4", &[1, 2, 3, 4, 3, 2, 1])?;
    let want = vec![vec![-1, 0, 0, 0], vec![-1, 0, 0], vec![-1, 0, 0], vec![-1, 0], vec![-1, 0], vec![-1], vec![-1]];
    ensure_eq("Shi(t)", got, want.clone())?;
    let identity = finite_shi_rows("C4", &[])?;
    ensure("Shi(t_I) = 0", identity.iter().flatten().all(|&k| k == 0))?;
    Ok("Shi(t) matches; t_I = e contributes zeros".into())
}

// ---- cores ----

fn part(v: &[usize]) -> Result<Partition, Failure> {
    Ok(Partition::new(v.to_vec())?)
}

fn core_examples() -> Check {
    ensure("(3,1,1) is a 3-core", is_core(&part(&[3, 1, 1])?, 3)?)?;
    ensure("(2,1) is not a 3-core", !is_core(&part(&[2, 1])?, 3)?)?;
    ensure_eq("s0 ∅", residue_reflect(&Partition::empty(), 0, 2)?, part(&[1])?)?;
    ensure_eq("s1 (1)", residue_reflect(&part(&[1])?, 1, 2)?, part(&[2])?)?;
    ensure_eq("s2 (1)", residue_reflect(&part(&[1])?, 2, 2)?, part(&[1, 1])?)?;
    Ok("(3,1,1) core, (2,1) not; ∅ → (1) → (2), (1,1)".into())
}

fn crystal_shading() -> Check {
    let shaded: [&[usize]; 7] = [&[], &[1], &[2], &[1, 1], &[3, 1], &[2, 1, 1], &[3, 1, 1]];
    let plain: [&[usize]; 8] = [&[3], &[2, 1], &[4], &[2, 2], &[5], &[4, 1], &[2, 2, 1], &[3, 2]];
    for p in shaded {
        ensure(&format!("{p:?} is a 3-core"), is_core(&part(p)?, 3)?)?;
    }
    for p in plain {
        ensure(&format!("{p:?} is not a 3-core"), !is_core(&part(p)?, 3)?)?;
    }
    let orbit: BTreeSet<Partition> = orbit_cores(2, 5, 100)?.into_values().flatten().collect();
    let want = shaded.iter().map(|p| part(p)).collect::<Result<BTreeSet<_>, _>>()?;
    ensure_eq("3-cores of size ≤ 5", orbit, want)?;
    Ok("shaded vertices are exactly the 3-cores of size ≤ 5".into())
}

fn three_core_sizes() -> Check {
    let sizes: Vec<usize> = orbit_cores(2, 5, 100)?.into_keys().collect();
    ensure_eq("sizes", sizes, vec![0, 1, 2, 4, 5])?;
    ensure_eq("size 3", core_count_vs_lattice(2, 3)?, (0, 0))?;
    Ok("3-core sizes 0,1,2,4,5; none of size 3".into())
}

fn four_cores_fill_interval() -> Check {
    let sizes: Vec<usize> = orbit_cores(3, 30, 100)?.into_keys().collect();
    ensure_eq("sizes", sizes, (0..=30).collect())?;
    Ok("every size in [0, 30]".into())
}

// ---- permutations ----

fn perm(s: &str) -> Result<Permutation, Failure> {
    Ok(s.parse()?)
}

fn s4_longest_statistics() -> Check {
    let w0 = perm("4321")?;
    ensure_eq("invsum", w0.invsum(), 10)?;
    ensure_eq("ninvsum", w0.ninvsum(), 0)?;
    ensure_eq("E(w0)", permutohedron_distance_sq(&w0, &[1, 2, 3, 4])?, 20)?;
    ensure_eq("entropy", w0.entropy(), 2 * w0.invsum())?;
    Ok("invsum(4321) = 10, |w0(x) − x|² = 20".into())
}

fn invsum_ninvsum_total() -> Check {
    for n in 1..=6 {
        for w in Permutations::all(n) {
            ensure_eq("invsum + ninvsum", w.invsum() + w.ninvsum(), invsum_total(n))?;
        }
    }
    Ok("invsum + ninvsum = C(n+1, 3) for n ≤ 6".into())
}

fn small_permutations() -> Check {
    let s = type_a_system(3)?;
    ensure_eq("L(231)", atomic_length(&s, &to_weyl(&s, &perm("231")?)?), 3)?;
    ensure_eq("132", to_weyl(&s, &perm("132")?)?, element(&s, &[2])?)?;
    ensure_eq("L(132)", atomic_length(&s, &to_weyl(&s, &perm("132")?)?), 1)?;
    let s4 = type_a_system(4)?;
    for w in Permutations::all(4) {
        ensure_eq("invsum = L", w.invsum() as i64, atomic_length(&s4, &to_weyl(&s4, &w)?))?;
    }
    Ok("231 ↦ L = 3, 132 ↦ s2; invsum = L on S4".into())
}

fn cosine_statistics() -> Check {
    let probe = cosine_range_probe(8, 30)?;
    ensure("16 is a certified gap", probe.certified_gaps().contains(&16))?;
    for n in 1..=6 {
        let c0 = Permutation::longest(n).cosine();
        for w in Permutations::all(n) {
            ensure_eq("cos = cos(w0) + ninvsum", w.cosine(), c0 + w.ninvsum())?;
        }
    }
    Ok(format!("gaps ≤ 30 for n ≤ 8: {:?}", probe.gaps))
}

// ---- command line ----

fn cli_json<T: serde::de::DeserializeOwned>(args: &[&str]) -> Result<T, Failure> {
    let out = crate::cli::run(std::iter::once("atomic").chain(args.iter().copied()));
    if out.code != 0 {
        return Err(Failure(format!("exit code {}: {}", out.code, out.stderr.trim())));
    }
    serde_json::from_str(&out.stdout).map_err(|e| Failure(e.to_string()))
}

fn cli_examples() -> Check {
    let image: ImageJson = cli_json(&["image", "--type", "A2", "--weight", "1,1", "--json"])?;
    ensure_eq("image values", image.values, vec![0, 1, 3, 4])?;
    let w0: crate::report::W0Json = cli_json(&["w0", "--type", "E6", "--json"])?;
    ensure_eq("w0 E6", w0.value, 156)?;
    let cores: CoresJson = cli_json(&["cores", "--n", "2", "--max", "5", "--json"])?;
    ensure_eq("3-core counts", cores.sizes, BTreeMap::from([(0, 1), (1, 1), (2, 2), (4, 2), (5, 1)]))?;
    Ok("image, w0 and cores commands".into())
}

pub fn all() -> Vec<Fixture> {
    macro_rules! fixtures {
        ($($f:ident),* $(,)?) => { vec![$(Fixture { name: stringify!($f), check: $f }),*] };
    }
    fixtures![
        a2_positive_roots,
        type_a_root_heights,
        b4_highest_root_height,
        a2_cartan_entry,
        a3_two_rho_height,
        a2_simple_action,
        a2_inversion_sets,
        a3_inversion_set,
        a4_word_inversion_set,
        a2_longest_length,
        a_longest_one_line,
        a3_reflection_subgroup,
        a4_special_decomposition,
        c4_special_decomposition,
        reflections_are_utopic,
        b_utopic_counts,
        a2_atomic_length,
        a3_w0_atomic_length,
        rho_length_is_atomic_length,
        a4_lambda_inversion_sets,
        rank_two_images,
        w0_table,
        c3_ideal_examples,
        minuscule_tables,
        highest_root_reflections_are_susanfe,
        b4_t_prime_is_susanfe,
        special_constants,
        a4_induction,
        d6_induction,
        a2_affine_decomposition_table,
        a2_affine_s0,
        a2_affine_values,
        a2_lambda0_probe,
        a3_lambda0_probe,
        shi_a4,
        shi_b4,
        shi_b4_t_prime,
        shi_c4,
        core_examples,
        crystal_shading,
        three_core_sizes,
        four_cores_fill_interval,
        s4_longest_statistics,
        invsum_ninvsum_total,
        small_permutations,
        cosine_statistics,
        cli_examples,
    ]
}

/// Runs one fixture, turning a panic into a failure.
pub fn run(f: &Fixture) -> CheckJson {
    let result = panic::catch_unwind(AssertUnwindSafe(f.check)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "panic".into());
        Err(Failure(format!("panicked: {msg}")))
    });
    match result {
        Ok(detail) => CheckJson { name: f.name.into(), ok: true, detail },
        Err(Failure(detail)) => CheckJson { name: f.name.into(), ok: false, detail },
    }
}

pub fn run_all() -> Vec<CheckJson> {
    all().iter().map(run).collect()
}

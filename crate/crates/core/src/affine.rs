//! Untwisted affine Weyl groups.
//!
//! An element is a pair `(β, w̄)` acting on the finite space by
//! `x ↦ w̄(x) + β`, with `s_0 = (θ, s_θ)`. The walls are the hyperplanes
//! `(α | x) = k`, so the fundamental alcove is `0 < (α | x) < 1` and the
//! translation lattice is spanned by the long roots. Weights are triples
//! `λ̄ + ℓΛ_0 + zδ`.
//!
//! The pairing `⟨δ, ρ∨⟩` equals `Σ_{i≥0} a_i = h`, the Coxeter number; it
//! agrees with `h∨` only in simply-laced types.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;
use num_traits::{Signed, Zero};

use crate::atomiclen::{lambda_atomic_length, missing_values};
use crate::linalg;
use crate::orbit::{self, OrbitConfig, State};
use crate::rootdata::{RootSystem, RootVec, TypeLabel, WeightVec};
use crate::weyl::{WeylElement, Word};
use crate::{Error, Rational, Result};

/// Default cap on the depth explored by image probes.
pub const DEFAULT_RADIUS_CAP: u64 = 100_000;

#[derive(Debug, Clone)]
pub struct AffineSystem {
    label: TypeLabel,
    fin: RootSystem,
    cartan: Vec<Vec<i64>>,
    lattice: Vec<Vec<i64>>,
    x0: Vec<Rational>,
}

impl AffineSystem {
    pub fn new(label: TypeLabel) -> Result<Self> {
        let fin = RootSystem::new(label.finite())?;
        let n = fin.rank();
        let theta = fin.highest_root().clone();
        let mut cartan = vec![vec![0i64; n + 1]; n + 1];
        cartan[0][0] = 2;
        for j in 0..n {
            let aj = fin.simple_root(j);
            // ⟨α_j, α_0∨⟩ = −⟨α_j, θ∨⟩ and ⟨α_0, α_j∨⟩ = −⟨θ, α_j∨⟩
            cartan[0][j + 1] = -fin.coroot_pairing_root(&aj, &theta);
            cartan[j + 1][0] = -fin.pairing_root(&theta, j);
            for i in 0..n {
                cartan[i + 1][j + 1] = fin.cartan()[i][j];
            }
        }
        let lattice = translation_lattice(&fin);
        let h = Rational::from_integer(fin.coxeter_number());
        let ones = vec![Rational::from_integer(1) / h; n];
        let x0 = linalg::mat_vec(fin.form_inverse(), &ones);
        Ok(AffineSystem { label: label.affinized(), fin, cartan, lattice, x0 })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn finite(&self) -> &RootSystem {
        &self.fin
    }

    /// Finite rank `n`; the affine group has generators `s_0..s_n`.
    pub fn rank(&self) -> usize {
        self.fin.rank()
    }

    /// Affine Cartan matrix indexed `0..=n`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Hermite basis of the translation lattice, in root coordinates.
    pub fn lattice_basis(&self) -> &[Vec<i64>] {
        &self.lattice
    }

    /// `⟨δ, ρ∨⟩ = Σ_{i≥0} a_i`.
    pub fn delta_height(&self) -> i64 {
        self.fin.coxeter_number()
    }

    /// The alcove sample point with `(α_i | x_0) = 1/h`.
    pub fn sample_point(&self) -> &[Rational] {
        &self.x0
    }

    pub fn in_lattice(&self, v: &RootVec) -> bool {
        lattice_coordinates(&self.lattice, &v.0).is_some()
    }

    /// Coordinates of `v` on [`Self::lattice_basis`].
    pub fn lattice_coords(&self, v: &RootVec) -> Option<Vec<i64>> {
        lattice_coordinates(&self.lattice, &v.0)
    }

    pub fn norm_sq(&self, v: &RootVec) -> Rational {
        self.fin.inner_roots(v, v)
    }
}

/// Span of the orbit `W̄·θ` (the long roots), in Hermite form.
fn translation_lattice(fin: &RootSystem) -> Vec<Vec<i64>> {
    let n = fin.rank();
    let mut seen: HashSet<RootVec> = HashSet::new();
    let mut stack = vec![fin.highest_root().clone()];
    seen.insert(fin.highest_root().clone());
    while let Some(v) = stack.pop() {
        for i in 0..n {
            let u = fin.reflect_root(&v, i);
            if seen.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    let mut rows: Vec<Vec<i64>> = seen.into_iter().map(|r| r.0).collect();
    rows.sort();
    linalg::hermite_basis(&rows)
}

/// Solves `v = Σ c_k basis_k` over the integers for an echelon basis.
fn lattice_coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for row in basis {
        let pivot = row.iter().position(|&x| x != 0)?;
        if rest[pivot] % row[pivot] != 0 {
            return None;
        }
        let c = rest[pivot] / row[pivot];
        for (r, b) in rest.iter_mut().zip(row) {
            *r -= c * b;
        }
        coords.push(c);
    }
    rest.iter().all(|&x| x == 0).then_some(coords)
}

/// `(β, w̄)`, acting by `x ↦ w̄(x) + β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub beta: RootVec,
    pub finite: WeylElement,
}

impl AffineElement {
    pub fn identity(n: usize) -> Self {
        AffineElement { beta: RootVec::zero(n), finite: WeylElement::identity(n) }
    }

    pub fn is_identity(&self) -> bool {
        self.beta.is_zero() && self.finite.is_identity()
    }

    /// Generator `s_i`, `0 ≤ i ≤ n`.
    pub fn simple(asys: &AffineSystem, i: usize) -> Result<Self> {
        let fin = asys.finite();
        match i {
            0 => {
                let theta = fin.highest_root().clone();
                let finite = WeylElement::reflection(fin, &theta)?;
                Ok(AffineElement { beta: theta, finite })
            }
            _ => Ok(AffineElement {
                beta: RootVec::zero(fin.rank()),
                finite: WeylElement::simple(fin, i)?,
            }),
        }
    }

    /// A finite element viewed in the affine group.
    pub fn from_finite(w: WeylElement) -> Self {
        AffineElement { beta: RootVec::zero(w.rank()), finite: w }
    }

    /// Translation `τ_β`.
    pub fn translation(asys: &AffineSystem, beta: RootVec) -> Result<Self> {
        if !asys.in_lattice(&beta) {
            return Err(Error::PreconditionViolation("vector is not in the translation lattice"));
        }
        Ok(AffineElement { finite: WeylElement::identity(beta.dim()), beta })
    }

    /// The affine reflection in the wall `(γ | x) = m`.
    pub fn reflection(asys: &AffineSystem, gamma: &RootVec, m: i64) -> Result<Self> {
        let fin = asys.finite();
        let finite = WeylElement::reflection(fin, gamma)?;
        // translation part m·γ∨ with γ∨ = 2γ/(γ|γ)
        let scale = Rational::from_integer(2 * m) / fin.inner_roots(gamma, gamma);
        debug_assert!(scale.is_integer());
        Ok(AffineElement { beta: gamma.scale(scale.to_integer()), finite })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineElement) -> Result<AffineElement> {
        Ok(AffineElement {
            beta: self.beta.add(&self.finite.act_root(&other.beta)),
            finite: self.finite.multiply(&other.finite)?,
        })
    }

    pub fn inverse(&self, asys: &AffineSystem) -> AffineElement {
        let inv = self.finite.inverse(asys.finite());
        AffineElement { beta: inv.act_root(&self.beta).neg(), finite: inv }
    }

    /// Geometric action on a point in root coordinates.
    pub fn act_point(&self, x: &[Rational]) -> Vec<Rational> {
        self.finite
            .act_rational(x)
            .into_iter()
            .zip(&self.beta.0)
            .map(|(a, &b)| a + Rational::from_integer(b))
            .collect()
    }

    /// `γ = w̄⁻¹(β)`, so that `w = w̄·τ_γ`.
    pub fn gamma(&self, asys: &AffineSystem) -> RootVec {
        self.finite.inverse(asys.finite()).act_root(&self.beta)
    }
}

/// Folds a word in `s_0..s_n` into `(β, w̄)`.
pub fn affine_from_word(asys: &AffineSystem, word: &Word) -> Result<AffineElement> {
    let n = asys.rank();
    let mut acc = AffineElement::identity(n);
    for &i in word.letters() {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        if i == 0 {
            acc = acc.compose(&AffineElement::simple(asys, 0)?)?;
        } else {
            acc.finite.mul_simple_right(asys.finite(), i - 1);
        }
    }
    Ok(acc)
}

/// Shi coefficients `k(w, α)` over the positive roots, in root order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiVector {
    pub coefficients: Vec<i64>,
}

impl ShiVector {
    /// `k_α + k_β ≤ k_{α+β} ≤ k_α + k_β + 1` whenever `α + β` is a root.
    pub fn is_admissible(&self, fin: &RootSystem) -> bool {
        let roots = fin.positive_roots();
        for (i, a) in roots.iter().enumerate() {
            for (j, b) in roots.iter().enumerate().skip(i + 1) {
                if let Some(k) = fin.root_index(&a.add(b)) {
                    let s = self.coefficients[i] + self.coefficients[j];
                    let v = self.coefficients[k];
                    if v < s || v > s + 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Coefficients grouped by root height, lowest first, for display.
    pub fn rows_by_height(&self, fin: &RootSystem) -> Vec<Vec<(RootVec, i64)>> {
        let mut rows: BTreeMap<i64, Vec<(RootVec, i64)>> = BTreeMap::new();
        for (r, &k) in fin.positive_roots().iter().zip(&self.coefficients) {
            rows.entry(r.height()).or_default().push((r.clone(), k));
        }
        rows.into_values().collect()
    }
}

/// `k(w, α) = ⌊(α | w·x_0)⌋`.
pub fn shi_coefficient(asys: &AffineSystem, w: &AffineElement, alpha: &RootVec) -> i64 {
    let y = w.act_point(asys.sample_point());
    let v = asys.finite().inner_product(&alpha.to_rational(), &y).expect("same rank");
    v.floor().to_integer()
}

/// `k(w, α)` extended to negative roots by `k(w, −α) = −k(w, α)`, the
/// extension under which `k(tw, α) = k(w, t(α)) + k(t, α)` holds.
pub fn shi_coefficient_signed(asys: &AffineSystem, w: &AffineElement, alpha: &RootVec) -> i64 {
    if alpha.is_negative() {
        -shi_coefficient(asys, w, &alpha.neg())
    } else {
        shi_coefficient(asys, w, alpha)
    }
}

pub fn shi_vector(asys: &AffineSystem, w: &AffineElement) -> ShiVector {
    let y = w.act_point(asys.sample_point());
    let fin = asys.finite();
    let coefficients = fin
        .positive_roots()
        .iter()
        .map(|a| fin.inner_product(&a.to_rational(), &y).expect("same rank").floor().to_integer())
        .collect();
    ShiVector { coefficients }
}

/// `λ̄ + ℓΛ_0 + zδ` with `λ̄` in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    pub finite: Vec<Rational>,
    pub level: i64,
    pub delta: Rational,
}

impl AffineWeight {
    /// `Λ_0`.
    pub fn lambda0(n: usize) -> Self {
        AffineWeight { finite: vec![Rational::zero(); n], level: 1, delta: Rational::zero() }
    }

    /// Level-zero weight with finite part `λ̄`.
    pub fn from_finite(w: &WeightVec) -> Self {
        AffineWeight { finite: w.root_coords().to_vec(), level: 0, delta: Rational::zero() }
    }

    /// Weight with affine fundamental coordinates `m_0..m_n` and `z = 0`:
    /// level `Σ a_i∨ m_i` and `λ̄ = Σ_{i≥1} m_i ω_i`.
    pub fn from_affine_fund(asys: &AffineSystem, m: &[i64]) -> Result<Self> {
        let n = asys.rank();
        if m.len() != n + 1 {
            return Err(Error::DimensionMismatch { left: m.len(), right: n + 1 });
        }
        let comarks = asys.finite().affine_comarks();
        let level = m.iter().zip(&comarks).map(|(a, b)| a * b).sum();
        let fin = asys.finite().weight_from_fund(&m[1..]);
        Ok(AffineWeight { finite: fin.root_coords().to_vec(), level, delta: Rational::zero() })
    }

    /// `⟨λ, α_i∨⟩` for `i = 0..=n`; index 0 is `ℓ − ⟨λ̄, θ∨⟩`.
    pub fn affine_fund(&self, asys: &AffineSystem) -> Vec<Rational> {
        let fin = asys.finite();
        let mut out = Vec::with_capacity(fin.rank() + 1);
        out.push(Rational::from_integer(self.level) - fin.coroot_pairing(&self.finite, fin.highest_root()));
        for i in 0..fin.rank() {
            out.push(fin.pairing(&self.finite, i).expect("same rank"));
        }
        out
    }

    pub fn is_dominant(&self, asys: &AffineSystem) -> bool {
        self.affine_fund(asys).iter().all(|m| !m.is_negative())
    }

    pub fn is_integral(&self, asys: &AffineSystem) -> bool {
        self.affine_fund(asys).iter().all(|m| m.is_integer())
    }

    pub fn finite_weight(&self, asys: &AffineSystem) -> WeightVec {
        asys.finite().weight_from_root(&self.finite).expect("same rank")
    }
}

/// Applies the generator `s_i` to a weight.
pub fn apply_simple(asys: &AffineSystem, i: usize, mu: &AffineWeight) -> Result<AffineWeight> {
    let fin = asys.finite();
    let n = fin.rank();
    let mut out = mu.clone();
    if i == 0 {
        // α_0 = δ − θ
        let m0 = Rational::from_integer(mu.level) - fin.coroot_pairing(&mu.finite, fin.highest_root());
        for (x, &t) in out.finite.iter_mut().zip(&fin.highest_root().0) {
            *x += m0 * Rational::from_integer(t);
        }
        out.delta -= m0;
    } else if i <= n {
        let mi = fin.pairing(&mu.finite, i - 1)?;
        out.finite[i - 1] -= mi;
    } else {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    Ok(out)
}

/// Word action, applying letters right to left.
pub fn act_weight_word(asys: &AffineSystem, word: &Word, mu: &AffineWeight) -> Result<AffineWeight> {
    word.letters().iter().rev().try_fold(mu.clone(), |acc, &i| apply_simple(asys, i, &acc))
}

/// Action of `w = τ_β w̄` through
/// `τ_β(μ) = μ + ℓβ − ((μ̄|β) + ½|β|²ℓ)δ`.
pub fn act_weight(asys: &AffineSystem, w: &AffineElement, mu: &AffineWeight) -> AffineWeight {
    let fin = asys.finite();
    let wmu = w.finite.act_rational(&mu.finite);
    let beta = w.beta.to_rational();
    let level = Rational::from_integer(mu.level);
    let pair = fin.inner_product(&wmu, &beta).expect("same rank");
    let norm = fin.inner_product(&beta, &beta).expect("same rank");
    let finite = wmu.iter().zip(&beta).map(|(a, b)| *a + level * *b).collect();
    let delta = mu.delta - (pair + norm * level / Rational::from_integer(2));
    AffineWeight { finite, level: mu.level, delta }
}

fn check_affine_dominant(asys: &AffineSystem, lambda: &AffineWeight) -> Result<()> {
    if !lambda.is_dominant(asys) {
        return Err(Error::NotDominant);
    }
    if !lambda.is_integral(asys) {
        return Err(Error::NotIntegral);
    }
    Ok(())
}

/// `⟨λ − μ, ρ∨⟩` using `⟨α_i, ρ∨⟩ = 1` and `⟨δ, ρ∨⟩ = h`.
fn rho_check_pairing(asys: &AffineSystem, lambda: &AffineWeight, mu: &AffineWeight) -> Rational {
    let fin_diff: Rational = lambda.finite.iter().zip(&mu.finite).map(|(a, b)| *a - *b).sum();
    fin_diff + Rational::from_integer(asys.delta_height()) * (lambda.delta - mu.delta)
}

/// `L_λ(w)` by applying `w` to `λ`.
pub fn affine_atomic_length(asys: &AffineSystem, w: &AffineElement, lambda: &AffineWeight) -> Result<i64> {
    check_affine_dominant(asys, lambda)?;
    let mu = act_weight(asys, w, lambda);
    let v = rho_check_pairing(asys, lambda, &mu);
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// `L_λ(w)` from a word, applying the generators to `λ` one at a time.
pub fn affine_atomic_length_word(asys: &AffineSystem, word: &Word, lambda: &AffineWeight) -> Result<i64> {
    check_affine_dominant(asys, lambda)?;
    let mu = act_weight_word(asys, word, lambda)?;
    Ok(rho_check_pairing(asys, lambda, &mu).to_integer())
}

/// `L_λ̄(w̄) − ℓ·ht(β) + h·((λ̄ | w̄⁻¹β) + ½|β|²ℓ)`.
pub fn affine_atomic_length_closed(
    asys: &AffineSystem,
    w: &AffineElement,
    lambda: &AffineWeight,
) -> Result<i64> {
    check_affine_dominant(asys, lambda)?;
    let fin = asys.finite();
    let lbar = lambda.finite_weight(asys);
    let finite_part = lambda_atomic_length(fin, &w.finite, &lbar)?;
    let gamma = w.gamma(asys).to_rational();
    let level = Rational::from_integer(lambda.level);
    let h = Rational::from_integer(asys.delta_height());
    let pair = fin.inner_product(&lambda.finite, &gamma)?;
    let v = Rational::from_integer(finite_part - lambda.level * w.beta.height())
        + h * (pair + asys.norm_sq(&w.beta) * level / Rational::from_integer(2));
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// `L_{Λ_0}(τ_β w̄) = (h/2)|β|² − ht(β)`, independent of `w̄`.
pub fn level_one_atomic_length(asys: &AffineSystem, beta: &RootVec) -> i64 {
    let v = Rational::from_integer(asys.delta_height()) * asys.norm_sq(beta) / Rational::from_integer(2)
        - Rational::from_integer(beta.height());
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// `L_λ(w) = L_λ̄(w̄) + ℓ·L_{Λ_0}(w) + h·(λ̄ | γ)` with `γ = w̄⁻¹β`.
pub fn affine_decomposition_check(asys: &AffineSystem, w: &AffineElement, lambda: &AffineWeight) -> Result<bool> {
    let direct = affine_atomic_length(asys, w, lambda)?;
    let fin = asys.finite();
    let lbar = lambda.finite_weight(asys);
    let gamma = w.gamma(asys).to_rational();
    let cross = Rational::from_integer(asys.delta_height()) * fin.inner_product(&lambda.finite, &gamma)?;
    let three = Rational::from_integer(
        lambda_atomic_length(fin, &w.finite, &lbar)? + lambda.level * level_one_atomic_length(asys, &w.beta),
    ) + cross;
    Ok(three == Rational::from_integer(direct))
}

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = 1u128 << (x.ilog2() / 2 + 1);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

/// Counts of lattice vectors `β` by `(h/2)|β|² − ht(β)` for every value `≤ max`.
pub fn lattice_level_one_values(asys: &AffineSystem, max: u64) -> BTreeMap<u64, u64> {
    let fin = asys.finite();
    let n = fin.rank();
    let h = Rational::from_integer(asys.delta_height());
    // y with (α_i | y) = 1, so ht(β) = (β | y)
    let y = linalg::mat_vec(fin.form_inverse(), &vec![Rational::from_integer(1); n]);
    let y_sq = fin.inner_product(&y, &y).expect("same rank");
    // (h/2)|β|² − |β||y| ≤ N and |β||y| ≤ |y|²/h + (h/4)|β|² give
    // |β|² ≤ (4/h)(N + |y|²/h).
    let bound = Rational::from_integer(4) / h * (Rational::from_integer(max as i64) + y_sq / h);
    let g_inv = fin.form_inverse();
    let limits: Vec<i64> = (0..n)
        .map(|i| {
            let b = (bound * g_inv[i][i]).floor().to_integer().max(0) as u128;
            isqrt(b) as i64 + 1
        })
        .collect();
    let mut out = BTreeMap::new();
    let mut c: Vec<i64> = limits.iter().map(|l| -l).collect();
    loop {
        let v = RootVec(c.clone());
        if asys.in_lattice(&v) {
            let q = level_one_atomic_length(asys, &v);
            if q >= 0 && (q as u64) <= max {
                *out.entry(q as u64).or_insert(0) += 1;
            }
        }
        // odometer step
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if c[k] < limits[k] {
                c[k] += 1;
                break;
            }
            c[k] = -limits[k];
            k += 1;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    /// Attained values in `[0, certified_max]`.
    pub values: Vec<u64>,
    /// Every value up to this bound has been decided exactly.
    pub certified_max: u64,
    pub missing: Vec<u64>,
    pub orbit_size: u64,
    /// For `λ = Λ_0`: whether the lattice enumeration gives the same values.
    pub lattice_agrees: Option<bool>,
}

/// Attained values of `L_λ` up to `radius`. The orbit traversal reaches every
/// orbit point of depth `≤ radius` through shallower points, so the whole
/// range `[0, radius]` is certified.
pub fn affine_image_probe_with<F>(
    asys: &AffineSystem,
    lambda: &AffineWeight,
    radius: u64,
    radius_cap: u64,
    config: OrbitConfig,
    expand: F,
) -> Result<ProbeReport>
where
    F: FnMut(u64, &[State]) -> Vec<(u64, State)>,
{
    if radius > radius_cap {
        return Err(Error::RadiusTooLarge { radius, cap: radius_cap });
    }
    check_affine_dominant(asys, lambda)?;
    let m: Vec<i64> = lambda.affine_fund(asys).iter().map(|x| x.to_integer()).collect();
    let cfg = OrbitConfig { max_depth: Some(radius), ..config };
    let summary = orbit::traverse_with(&m, cfg, expand)?;
    let values: BTreeSet<u64> = summary.depths.keys().copied().collect();
    let lattice_agrees = (*lambda == AffineWeight::lambda0(asys.rank())).then(|| {
        let lat: BTreeSet<u64> = lattice_level_one_values(asys, radius).into_keys().collect();
        lat == values
    });
    Ok(ProbeReport {
        missing: missing_values(&values, radius),
        values: values.into_iter().collect(),
        certified_max: radius,
        orbit_size: summary.states,
        lattice_agrees,
    })
}

pub fn affine_image_probe(
    asys: &AffineSystem,
    lambda: &AffineWeight,
    radius: u64,
    config: OrbitConfig,
) -> Result<ProbeReport> {
    let cartan = asys.cartan();
    affine_image_probe_with(asys, lambda, radius, DEFAULT_RADIUS_CAP, config, |d, b| {
        orbit::expand_bucket(cartan, d, b, Some(radius))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff(s: &str) -> AffineSystem {
        AffineSystem::new(s.parse().unwrap()).unwrap()
    }

    fn word(v: &[usize]) -> Word {
        Word(v.to_vec())
    }

    #[test]
    fn affine_cartan_a2() {
        let a = aff("A2~");
        assert_eq!(a.cartan(), &[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        let c = aff("C2~");
        // α_0 is long and joined to the short α_1 by a double bond
        assert_eq!(c.cartan()[0][1], -1);
        assert_eq!(c.cartan()[1][0], -2);
        assert_eq!(c.cartan()[0][2], 0);
    }

    #[test]
    fn from_word_examples() {
        let a = aff("A2~");
        let s0 = affine_from_word(&a, &word(&[0])).unwrap();
        assert_eq!(s0.beta, RootVec(vec![1, 1]));
        assert_eq!(s0.finite.reduced_word(a.finite()), word(&[1, 2, 1]));
        assert!(affine_from_word(&a, &Word::default()).unwrap().is_identity());
        let w = affine_from_word(&a, &word(&[2, 1, 0])).unwrap();
        assert_eq!(w.beta, RootVec(vec![0, -1]));
        assert_eq!(w.finite, WeylElement::simple(a.finite(), 1).unwrap());
        assert!(affine_from_word(&a, &word(&[3])).is_err());
    }

    #[test]
    fn shi_of_identity_is_zero() {
        let a = aff("B3~");
        let v = shi_vector(&a, &AffineElement::identity(3));
        assert!(v.coefficients.iter().all(|&k| k == 0));
    }

    #[test]
    fn s0_on_lambda0() {
        let a = aff("A2~");
        let l0 = AffineWeight::lambda0(2);
        let mu = apply_simple(&a, 0, &l0).unwrap();
        assert_eq!(mu.finite, vec![Rational::from_integer(1); 2]);
        assert_eq!(mu.delta, Rational::from_integer(-1));
        assert_eq!(mu.level, 1);
        let s0 = affine_from_word(&a, &word(&[0])).unwrap();
        assert_eq!(affine_atomic_length(&a, &s0, &l0).unwrap(), 1);
    }

    #[test]
    fn level_one_examples() {
        let a = aff("A2~");
        assert_eq!(level_one_atomic_length(&a, &RootVec(vec![0, 0])), 0);
        assert_eq!(level_one_atomic_length(&a, &RootVec(vec![1, 1])), 1);
        assert_eq!(level_one_atomic_length(&a, &RootVec(vec![1, -1])), 9);
    }

    #[test]
    fn lattice_of_simply_laced_types_is_q() {
        for label in ["A3~", "D4~", "E6~"] {
            let a = aff(label);
            assert_eq!(a.lattice_basis(), &linalg::identity(a.rank())[..], "{label}");
        }
        let b = aff("B2~");
        assert_ne!(b.lattice_basis(), &linalg::identity(2)[..]);
    }

    #[test]
    fn probe_examples() {
        let a = aff("A2~");
        let l0 = AffineWeight::lambda0(2);
        let r = affine_image_probe(&a, &l0, 9, OrbitConfig::default()).unwrap();
        assert_eq!(r.values, vec![0, 1, 2, 4, 5, 6, 8, 9]);
        assert_eq!(r.missing, vec![3, 7]);
        assert_eq!(r.lattice_agrees, Some(true));
        let r = affine_image_probe(&a, &l0, 0, OrbitConfig::default()).unwrap();
        assert_eq!(r.values, vec![0]);
        assert!(matches!(
            affine_image_probe(&a, &l0, DEFAULT_RADIUS_CAP + 1, OrbitConfig::default()),
            Err(Error::RadiusTooLarge { .. })
        ));
    }
}

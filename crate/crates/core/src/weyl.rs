//! Finite Weyl group elements as integer matrices on simple-root coordinates,
//! words, inversion sets, reflection subgroups and A-decompositions.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::rootdata::{root_order, RootSystem, RootVec, WeightVec};
use crate::{Error, Rational, Result};

/// Default bound on subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: usize = 10_000_000;

/// A word in the simple reflections. Letters use the usual 1-based labels
/// `s_1..s_n`; affine words additionally use `0` for `s_0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &i in &self.0 {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// An element of a finite Weyl group. Column `j` of the matrix holds the
/// simple-root coordinates of `w(α_j)`. Equality and hashing use the matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    m: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![0; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        WeylElement { n, m }
    }

    /// The simple reflection `s_i` for a 1-based label `i`.
    pub fn simple(sys: &RootSystem, i: usize) -> Result<Self> {
        let k = letter_index(sys, i)?;
        let mut w = Self::identity(sys.rank());
        w.mul_simple_right(sys, k);
        Ok(w)
    }

    /// The reflection `s_α` for a root `α`.
    pub fn reflection(sys: &RootSystem, alpha: &RootVec) -> Result<Self> {
        if !sys.is_root(alpha) {
            return Err(Error::NotAReflection);
        }
        let n = sys.rank();
        let mut m = vec![0; n * n];
        for j in 0..n {
            let col = sys.reflect_by(alpha, &RootVec::simple(n, j));
            for i in 0..n {
                m[i * n + j] = col.0[i];
            }
        }
        Ok(WeylElement { n, m })
    }

    /// Builds an element from column images `w(α_j)`, checking that the
    /// matrix permutes the root system.
    pub fn from_columns(sys: &RootSystem, cols: &[RootVec]) -> Result<Self> {
        let n = sys.rank();
        if cols.len() != n || cols.iter().any(|c| c.dim() != n) {
            return Err(Error::DimensionMismatch { left: cols.len(), right: n });
        }
        let mut m = vec![0; n * n];
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[i * n + j] = c.0[i];
            }
        }
        let w = WeylElement { n, m };
        if sys.positive_roots().iter().all(|r| sys.is_root(&w.act_root(r))) {
            Ok(w)
        } else {
            Err(Error::PreconditionViolation("matrix does not permute the roots"))
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[i64] {
        &self.m
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        self.m.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> RootVec {
        RootVec((0..self.n).map(|i| self.m[i * self.n + j]).collect())
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.m[i * self.n + j] == i64::from(i == j)))
    }

    /// `self ← self · s_k` for a 0-based index `k`:
    /// column `j` becomes `col_j − a_kj·col_k`.
    pub fn mul_simple_right(&mut self, sys: &RootSystem, k: usize) {
        let n = self.n;
        let a = sys.cartan();
        for j in 0..n {
            let c = a[k][j];
            if j == k || c == 0 {
                continue;
            }
            for i in 0..n {
                let v = self.m[i * n + k];
                self.m[i * n + j] -= c * v;
            }
        }
        for i in 0..n {
            self.m[i * n + k] = -self.m[i * n + k];
        }
    }

    /// `self ← s_k · self` for a 0-based index `k`.
    pub fn mul_simple_left(&mut self, sys: &RootSystem, k: usize) {
        let n = self.n;
        let a = &sys.cartan()[k];
        for j in 0..n {
            let p: i64 = (0..n).map(|i| a[i] * self.m[i * n + j]).sum();
            self.m[k * n + j] -= p;
        }
    }

    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        if self.n != other.n {
            return Err(Error::SystemMismatch);
        }
        let n = self.n;
        let mut m = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.m[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    m[i * n + j] += a * other.m[k * n + j];
                }
            }
        }
        Ok(WeylElement { n, m })
    }

    /// Inverse by stripping right descents: if `w = u·s_i` then `w⁻¹ = s_i·u⁻¹`,
    /// so the stripped letters multiplied in order give `w⁻¹`.
    pub fn inverse(&self, sys: &RootSystem) -> WeylElement {
        let mut cur = self.clone();
        let mut inv = WeylElement::identity(self.n);
        while let Some(i) = (0..self.n).find(|&i| cur.is_right_descent(i)) {
            cur.mul_simple_right(sys, i);
            inv.mul_simple_right(sys, i);
        }
        inv
    }

    pub fn act_root(&self, v: &RootVec) -> RootVec {
        let n = self.n;
        RootVec((0..n).map(|i| (0..n).map(|j| self.m[i * n + j] * v.0[j]).sum()).collect())
    }

    pub fn act_rational(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| Rational::from_integer(self.m[i * n + j]) * v[j]).sum())
            .collect()
    }

    pub fn act_weight(&self, sys: &RootSystem, w: &WeightVec) -> Result<WeightVec> {
        if w.dim() != self.n || sys.rank() != self.n {
            return Err(Error::SystemMismatch);
        }
        sys.weight_from_root(&self.act_rational(w.root_coords()))
    }

    /// `w(α_i) < 0` for the 0-based index `i`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        // w(α_i) is a root, so the sign of any nonzero entry decides.
        (0..self.n).map(|r| self.m[r * self.n + i]).find(|&x| x != 0).is_some_and(|x| x < 0)
    }

    /// Right descents as 1-based labels.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.is_right_descent(i)).map(|i| i + 1).collect()
    }

    /// Left descents as 1-based labels.
    pub fn left_descents(&self, sys: &RootSystem) -> Vec<usize> {
        self.inverse(sys).right_descents()
    }

    /// Coxeter length: the number of positive roots sent negative.
    pub fn length(&self, sys: &RootSystem) -> usize {
        sys.positive_roots().iter().filter(|r| self.act_root(r).is_negative()).count()
    }

    /// `N(w) = {α ∈ Φ+ : w⁻¹(α) < 0}` in root order.
    pub fn inversion_set(&self, sys: &RootSystem) -> Vec<RootVec> {
        let inv = self.inverse(sys);
        sys.positive_roots()
            .iter()
            .filter(|r| inv.act_root(r).is_negative())
            .cloned()
            .collect()
    }

    /// Reduced word obtained by stripping the smallest right descent.
    pub fn reduced_word(&self, sys: &RootSystem) -> Word {
        let mut cur = self.clone();
        let mut letters = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| cur.is_right_descent(i)) {
            cur.mul_simple_right(sys, i);
            letters.push(i + 1);
        }
        letters.reverse();
        Word(letters)
    }

    /// The positive root `α` with `self = s_α`, if any.
    pub fn as_reflection(&self, sys: &RootSystem) -> Option<RootVec> {
        sys.positive_roots()
            .iter()
            .find(|a| {
                self.act_root(a) == a.neg()
                    && WeylElement::reflection(sys, a).is_ok_and(|s| &s == self)
            })
            .cloned()
    }

    /// `w(ρ)` in root coordinates.
    pub fn act_rho(&self, sys: &RootSystem) -> Vec<Rational> {
        self.act_rational(sys.rho())
    }
}

fn letter_index(sys: &RootSystem, i: usize) -> Result<usize> {
    if (1..=sys.rank()).contains(&i) {
        Ok(i - 1)
    } else {
        Err(Error::IndexOutOfRange { index: i, rank: sys.rank() })
    }
}

/// Evaluates a word of 1-based letters.
pub fn evaluate(sys: &RootSystem, word: &Word) -> Result<WeylElement> {
    let mut w = WeylElement::identity(sys.rank());
    for &i in &word.0 {
        let k = letter_index(sys, i)?;
        w.mul_simple_right(sys, k);
    }
    Ok(w)
}

pub fn is_reduced(sys: &RootSystem, word: &Word) -> Result<bool> {
    Ok(evaluate(sys, word)?.length(sys) == word.len())
}

fn require_reduced(sys: &RootSystem, word: &Word) -> Result<WeylElement> {
    let w = evaluate(sys, word)?;
    let length = w.length(sys);
    if length == word.len() {
        Ok(w)
    } else {
        Err(Error::NotReduced { word_len: word.len(), length })
    }
}

/// `(α_{i1}, s_{i1}(α_{i2}), s_{i1}s_{i2}(α_{i3}), …)` for a reduced word.
pub fn inversion_set_from_word(sys: &RootSystem, word: &Word) -> Result<Vec<RootVec>> {
    require_reduced(sys, word)?;
    let mut prefix = WeylElement::identity(sys.rank());
    let mut out = Vec::with_capacity(word.len());
    for &i in &word.0 {
        let k = i - 1;
        out.push(prefix.column(k));
        prefix.mul_simple_right(sys, k);
    }
    Ok(out)
}

/// The longest element, built by right-multiplying by non-descents.
pub fn longest_element(sys: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(sys.rank());
    while let Some(i) = (0..sys.rank()).find(|&i| !w.is_right_descent(i)) {
        w.mul_simple_right(sys, i);
    }
    w
}

/// All group elements, grouped by length (level `k` holds the elements of
/// length `k`, sorted by matrix).
pub fn elements_by_length(sys: &RootSystem, cap: usize) -> Result<Vec<Vec<WeylElement>>> {
    let n = sys.rank();
    let mut levels = vec![vec![WeylElement::identity(n)]];
    let mut total = 1usize;
    loop {
        let last = levels.last().expect("nonempty");
        let mut next: HashSet<WeylElement> = HashSet::new();
        for w in last {
            for i in 0..n {
                if !w.is_right_descent(i) {
                    let mut v = w.clone();
                    v.mul_simple_right(sys, i);
                    next.insert(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        total += next.len();
        if total > cap {
            return Err(Error::SubgroupTooLarge { cap });
        }
        let mut next: Vec<WeylElement> = next.into_iter().collect();
        next.sort_unstable();
        levels.push(next);
    }
    Ok(levels)
}

/// All group elements in order of length.
pub fn elements(sys: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
    Ok(elements_by_length(sys, cap)?.into_iter().flatten().collect())
}

/// Every reduced word of `w`, in lexicographic order.
pub fn all_reduced_words(sys: &RootSystem, w: &WeylElement) -> Vec<Word> {
    let mut out = Vec::new();
    let mut suffix = Vec::new();
    collect_reduced_words(sys, w.clone(), &mut suffix, &mut out);
    out.sort();
    out
}

fn collect_reduced_words(
    sys: &RootSystem,
    w: WeylElement,
    suffix: &mut Vec<usize>,
    out: &mut Vec<Word>,
) {
    if w.is_identity() {
        out.push(Word(suffix.iter().rev().copied().collect()));
        return;
    }
    for i in 0..sys.rank() {
        if w.is_right_descent(i) {
            let mut v = w.clone();
            v.mul_simple_right(sys, i);
            suffix.push(i + 1);
            collect_reduced_words(sys, v, suffix, out);
            suffix.pop();
        }
    }
}

/// A reflection subgroup `W_A` with its root subsystem `Φ_A` and canonical
/// simple system `Δ_A`.
#[derive(Debug, Clone)]
pub struct ReflectionSubgroup {
    generators: Vec<RootVec>,
    phi_plus: Vec<RootVec>,
    phi_set: HashSet<RootVec>,
    delta: Vec<RootVec>,
    cartan: Vec<Vec<i64>>,
}

impl ReflectionSubgroup {
    /// Subgroup generated by reflections. `W_A` is enumerated exactly and
    /// `Φ_A = {α : s_α ∈ W_A}`.
    pub fn from_reflections(sys: &RootSystem, gens: &[WeylElement], cap: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::PreconditionViolation("empty generating set"));
        }
        let roots = gens
            .iter()
            .map(|g| {
                if g.rank() != sys.rank() {
                    return Err(Error::SystemMismatch);
                }
                g.as_reflection(sys).ok_or(Error::NotAReflection)
            })
            .collect::<Result<Vec<_>>>()?;
        let group = close_group(sys, gens, cap)?;
        let phi_plus: Vec<RootVec> = sys
            .positive_roots()
            .iter()
            .filter(|a| {
                WeylElement::reflection(sys, a).is_ok_and(|s| group.contains(&s))
            })
            .cloned()
            .collect();
        Ok(Self::from_phi(sys, roots, phi_plus))
    }

    /// Subgroup generated by the reflections in the given roots.
    pub fn from_roots(sys: &RootSystem, roots: &[RootVec], cap: usize) -> Result<Self> {
        let gens = roots
            .iter()
            .map(|r| WeylElement::reflection(sys, r))
            .collect::<Result<Vec<_>>>()?;
        Self::from_reflections(sys, &gens, cap)
    }

    /// Standard parabolic subgroup on 1-based labels `I`; `Φ_I` is the set of
    /// roots supported on `I`, so no enumeration is needed.
    pub fn parabolic(sys: &RootSystem, labels: &[usize]) -> Result<Self> {
        let n = sys.rank();
        let mut mask = vec![false; n];
        for &i in labels {
            mask[letter_index(sys, i)?] = true;
        }
        let roots: Vec<RootVec> = labels.iter().map(|&i| RootVec::simple(n, i - 1)).collect();
        let phi_plus: Vec<RootVec> = sys
            .positive_roots()
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(k, &c)| c == 0 || mask[k]))
            .cloned()
            .collect();
        Ok(Self::from_phi(sys, roots, phi_plus))
    }

    /// The whole group.
    pub fn full(sys: &RootSystem) -> Self {
        let labels: Vec<usize> = (1..=sys.rank()).collect();
        Self::parabolic(sys, &labels).expect("labels in range")
    }

    fn from_phi(sys: &RootSystem, generators: Vec<RootVec>, phi_plus: Vec<RootVec>) -> Self {
        let phi_set: HashSet<RootVec> = phi_plus.iter().cloned().collect();
        let in_phi = |r: &RootVec| phi_set.contains(r) || phi_set.contains(&r.neg());
        let mut delta: Vec<RootVec> = phi_plus
            .iter()
            .filter(|a| {
                let s = WeylElement::reflection(sys, a).expect("root");
                s.inversion_set(sys).iter().filter(|b| in_phi(b)).count() == 1
            })
            .cloned()
            .collect();
        delta.sort_by(root_order);
        let cartan = delta
            .iter()
            .map(|bi| delta.iter().map(|bj| sys.coroot_pairing_root(bj, bi)).collect())
            .collect();
        ReflectionSubgroup { generators, phi_plus, phi_set, delta, cartan }
    }

    pub fn generators(&self) -> &[RootVec] {
        &self.generators
    }

    /// `Φ_A ∩ Φ+` in root order.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.phi_plus
    }

    /// Canonical simple roots `Δ_A` in root order.
    pub fn simple_roots(&self) -> &[RootVec] {
        &self.delta
    }

    /// Cartan matrix of `(W_A, S_A)`: entry `[i][j] = ⟨β_j, β_i∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.delta.len()
    }

    /// Membership of a root (of either sign) in `Φ_A`.
    pub fn contains_root(&self, r: &RootVec) -> bool {
        self.phi_set.contains(r) || self.phi_set.contains(&r.neg())
    }

    /// Root system of `(W_A, S_A)` built from the induced Cartan matrix.
    pub fn intrinsic_system(&self) -> Result<RootSystem> {
        RootSystem::from_cartan(self.cartan.clone())
    }

    pub fn contains(&self, sys: &RootSystem, w: &WeylElement) -> bool {
        a_decomposition(sys, w, self).1.is_identity()
    }

    /// `N_A(w) = N(w) ∩ Φ_A`.
    pub fn inversion_set(&self, sys: &RootSystem, w: &WeylElement) -> Vec<RootVec> {
        w.inversion_set(sys).into_iter().filter(|r| self.contains_root(r)).collect()
    }

    /// Atomic length of `w ∈ W_A` measured with ambient heights, `Σ_{N_A(w)} ht`.
    pub fn atomic_length(&self, sys: &RootSystem, w: &WeylElement) -> i64 {
        self.inversion_set(sys, w).iter().map(RootVec::height).sum()
    }

    /// Elements of `W_A`, by BFS over the canonical generators.
    pub fn elements(&self, sys: &RootSystem, cap: usize) -> Result<Vec<WeylElement>> {
        let gens = self
            .delta
            .iter()
            .map(|r| WeylElement::reflection(sys, r))
            .collect::<Result<Vec<_>>>()?;
        let set = close_group(sys, &gens, cap)?;
        let mut v: Vec<WeylElement> = set.into_iter().collect();
        v.sort_unstable_by(|a, b| a.length(sys).cmp(&b.length(sys)).then_with(|| a.cmp(b)));
        Ok(v)
    }
}

fn close_group(sys: &RootSystem, gens: &[WeylElement], cap: usize) -> Result<HashSet<WeylElement>> {
    let id = WeylElement::identity(sys.rank());
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let v = w.multiply(g)?;
            if seen.insert(v.clone()) {
                if seen.len() > cap {
                    return Err(Error::SubgroupTooLarge { cap });
                }
                queue.push_back(v);
            }
        }
    }
    Ok(seen)
}

/// `w = w_A · ᴬw` with `w_A ∈ W_A` and `N(ᴬw) ∩ Φ_A = ∅`.
pub fn a_decomposition(
    sys: &RootSystem,
    w: &WeylElement,
    a: &ReflectionSubgroup,
) -> (WeylElement, WeylElement) {
    // simple roots of A that are simple in Φ act by the cheap column update
    let gens: Vec<(Option<usize>, WeylElement)> = a
        .simple_roots()
        .iter()
        .map(|r| (r.simple_index(), WeylElement::reflection(sys, r).expect("root")))
        .collect();
    let step = |x: &mut WeylElement, g: &(Option<usize>, WeylElement)| match g.0 {
        Some(k) => x.mul_simple_right(sys, k),
        None => *x = x.multiply(&g.1).expect("same rank"),
    };
    // track cur⁻¹ so each step is a single product
    let mut inv = w.inverse(sys);
    let mut w_a = WeylElement::identity(sys.rank());
    'outer: loop {
        for (alpha, g) in a.simple_roots().iter().zip(&gens) {
            if inv.act_root(alpha).is_negative() {
                step(&mut inv, g);
                step(&mut w_a, g);
                continue 'outer;
            }
        }
        break;
    }
    let cur = w_a.inverse(sys).multiply(w).expect("same rank");
    (w_a, cur)
}

/// Whether `x ↦ (w·x)_A` is a bijection from `wW_Aw⁻¹` onto `W_A`.
pub fn utopic_check(
    sys: &RootSystem,
    w: &WeylElement,
    a: &ReflectionSubgroup,
    cap: usize,
) -> Result<bool> {
    utopic_check_in(sys, w, a, &a.elements(sys, cap)?)
}

/// [`utopic_check`] against a precomputed element list of `W_A`.
pub fn utopic_check_in(
    sys: &RootSystem,
    w: &WeylElement,
    a: &ReflectionSubgroup,
    group: &[WeylElement],
) -> Result<bool> {
    let w_inv = w.inverse(sys);
    let mut image: HashSet<WeylElement> = HashSet::with_capacity(group.len());
    for x in group {
        let y = w.multiply(x)?.multiply(&w_inv)?;
        let (ya, _) = a_decomposition(sys, &w.multiply(&y)?, a);
        image.insert(ya);
    }
    Ok(image.len() == group.len())
}

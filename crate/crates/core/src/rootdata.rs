//! Cartan data, positive roots and weights for the finite crystallographic
//! types, labelled as in Bourbaki's planches.
//!
//! Vectors are kept in simple-root coordinates. The Cartan matrix follows the
//! convention `cartan[i][j] = ⟨α_j, α_i∨⟩`, so the pairing of a vector `x`
//! with `α_i∨` is `Σ_j cartan[i][j]·x_j`. The invariant form is normalised so
//! that long roots have squared length 2.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashMap;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{self, RatMatrix};
use crate::{Error, Rational, Result};

/// Upper bound on the number of positive roots accepted while closing a
/// Cartan matrix; finite types stay far below it (E8 has 120).
const MAX_POSITIVE_ROOTS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// True for the families whose roots all have the same length.
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

/// A Dynkin type such as `B4`, optionally flagged as its untwisted affinization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub rank: usize,
    pub affine: bool,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { family, rank, affine: false })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn affine(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::new(family, rank)?.affinized())
    }

    pub fn affinized(self) -> Self {
        TypeLabel { affine: true, ..self }
    }

    pub fn finite(self) -> Self {
        TypeLabel { affine: false, ..self }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)?;
        if self.affine {
            f.write_str("~")?;
        }
        Ok(())
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Accepts `A5`, `e8`, `A2~` and `A2^(1)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let (body, affine) = if let Some(b) = s.strip_suffix('~') {
            (b, true)
        } else if let Some(b) = s.strip_suffix("^(1)") {
            (b, true)
        } else {
            (s, false)
        };
        let mut chars = body.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = digits.parse().map_err(|_| bad())?;
        let label = TypeLabel::new(family, rank)?;
        Ok(if affine { label.affinized() } else { label })
    }
}

/// Integer vector in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn zero(n: usize) -> Self {
        RootVec(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// 0-based index `i` when the vector is the simple root `α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let i = self.0.iter().position(|&c| c != 0)?;
        (self.0[i] == 1 && self.height() == 1).then_some(i)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Self {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &RootVec) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVec) -> Self {
        RootVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        RootVec(self.0.iter().map(|c| k * c).collect())
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&c| Rational::from_integer(c)).collect()
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A weight, carried in both the fundamental-weight and simple-root bases.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    fund: Vec<Rational>,
    root: Vec<Rational>,
}

impl WeightVec {
    /// Coordinates `m_i = ⟨λ, α_i∨⟩` on the fundamental weights.
    pub fn fund_coords(&self) -> &[Rational] {
        &self.fund
    }

    pub fn root_coords(&self) -> &[Rational] {
        &self.root
    }

    pub fn dim(&self) -> usize {
        self.fund.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.fund.iter().all(|m| !m.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.fund.iter().all(|m| m.is_integer())
    }

    /// Integer fundamental coordinates, when the weight is integral.
    pub fn integral_fund(&self) -> Option<Vec<i64>> {
        self.fund.iter().map(|m| m.is_integer().then(|| m.to_integer())).collect()
    }

    /// `⟨λ, ρ∨⟩`, the sum of the simple-root coordinates.
    pub fn height(&self) -> Rational {
        self.root.iter().sum()
    }
}

/// Root datum of a finite crystallographic root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: Option<TypeLabel>,
    cartan: Vec<Vec<i64>>,
    cartan_q: RatMatrix,
    cartan_inv: RatMatrix,
    positive: Vec<RootVec>,
    index: HashMap<RootVec, usize>,
    symmetrizer: Vec<Rational>,
    form: RatMatrix,
    form_inv: RatMatrix,
    rho: Vec<Rational>,
    highest: RootVec,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl Eq for RootSystem {}

/// Bourbaki Cartan matrix for a finite label.
pub fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i64>> {
    let n = label.rank;
    let mut a = linalg::identity(n);
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x *= 2;
        }
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match label.family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // α_n short
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            // α_1, α_2 long; α_3, α_4 short
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // α_1 short, α_2 long
            link(0, 1, -3, -1);
        }
    }
    a
}

impl RootSystem {
    /// Root system of the finite type underlying `label` (the affine flag is
    /// ignored here; see [`crate::affine::AffineSystem`]).
    pub fn new(label: TypeLabel) -> Result<Self> {
        let label = TypeLabel::new(label.family, label.rank)?;
        let mut sys = Self::from_cartan(cartan_matrix(label))?;
        sys.label = Some(label);
        Ok(sys)
    }

    /// Builds the root datum of an arbitrary finite-type Cartan matrix
    /// (possibly reducible), closing the simple roots under simple reflections.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::NotFiniteType);
        }
        let positive = close_positive_roots(&cartan)?;
        let index: HashMap<RootVec, usize> =
            positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let symmetrizer = symmetrize(&cartan, &positive)?;
        let form: RatMatrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| symmetrizer[i] * Rational::from_integer(cartan[i][j]))
                    .collect()
            })
            .collect();
        let form_inv = linalg::invert(&form).ok_or(Error::NotFiniteType)?;
        let cartan_q = linalg::to_rational(&cartan);
        let cartan_inv = linalg::invert(&cartan_q).ok_or(Error::NotFiniteType)?;
        let mut rho = vec![Rational::zero(); n];
        for r in &positive {
            for (x, &c) in rho.iter_mut().zip(&r.0) {
                *x += Rational::from_integer(c);
            }
        }
        for x in rho.iter_mut() {
            *x /= Rational::from_integer(2);
        }
        let highest = positive.last().cloned().expect("at least one positive root");
        Ok(RootSystem {
            label: None,
            cartan,
            cartan_q,
            cartan_inv,
            positive,
            index,
            symmetrizer,
            form,
            form_inv,
            rho,
            highest,
        })
    }

    pub fn label(&self) -> Option<TypeLabel> {
        self.label
    }

    pub fn name(&self) -> String {
        match self.label {
            Some(l) => l.to_string(),
            None => format!("rank-{} subsystem", self.rank()),
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    /// Position of a positive root in [`Self::positive_roots`].
    pub fn root_index(&self, root: &RootVec) -> Option<usize> {
        self.index.get(root).copied()
    }

    pub fn is_root(&self, v: &RootVec) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&v.neg())
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::simple(self.rank(), i)
    }

    /// The root of maximal height. For an irreducible system this is the
    /// highest root θ.
    pub fn highest_root(&self) -> &RootVec {
        &self.highest
    }

    pub fn is_irreducible(&self) -> bool {
        self.highest.0.iter().all(|&c| c > 0)
    }

    /// `d_i = (α_i|α_i)/2`; also equal to `a_i∨/a_i` for irreducible systems.
    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    /// Gram matrix `(α_i|α_j)` of the invariant form.
    pub fn form_matrix(&self) -> &RatMatrix {
        &self.form
    }

    pub fn form_inverse(&self) -> &RatMatrix {
        &self.form_inv
    }

    /// ρ in simple-root coordinates.
    pub fn rho(&self) -> &[Rational] {
        &self.rho
    }

    pub fn rho_weight(&self) -> WeightVec {
        self.weight_from_fund(&vec![1; self.rank()])
    }

    /// Coefficients `a_1..a_n` of θ on the simple roots.
    pub fn marks(&self) -> Vec<i64> {
        self.highest.0.clone()
    }

    /// `a_i∨ = a_i·d_i`: coefficients of θ∨ on the simple coroots.
    pub fn comarks(&self) -> Vec<i64> {
        self.highest
            .0
            .iter()
            .zip(&self.symmetrizer)
            .map(|(&a, d)| (Rational::from_integer(a) * d).to_integer())
            .collect()
    }

    /// Affine labels `a_0..a_n` with `a_0 = 1`.
    pub fn affine_marks(&self) -> Vec<i64> {
        let mut m = vec![1];
        m.extend(self.marks());
        m
    }

    /// Affine colabels `a_0∨..a_n∨` with `a_0∨ = 1`.
    pub fn affine_comarks(&self) -> Vec<i64> {
        let mut m = vec![1];
        m.extend(self.comarks());
        m
    }

    /// Coxeter number `h = 1 + ht(θ)`.
    pub fn coxeter_number(&self) -> i64 {
        1 + self.highest.height()
    }

    /// Dual Coxeter number `h∨ = 1 + Σ a_i∨`.
    pub fn dual_coxeter_number(&self) -> i64 {
        1 + self.comarks().iter().sum::<i64>()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { left: len, right: self.rank() })
        }
    }

    /// `⟨x, α_i∨⟩` for an integer vector.
    pub fn pairing_root(&self, x: &RootVec, i: usize) -> i64 {
        self.cartan[i].iter().zip(&x.0).map(|(a, c)| a * c).sum()
    }

    /// `⟨x, α_i∨⟩` for a rational vector in root coordinates (0-based `i`).
    pub fn pairing(&self, x: &[Rational], i: usize) -> Result<Rational> {
        self.check_index(i)?;
        self.check_dim(x.len())?;
        Ok(self.cartan_q[i].iter().zip(x).map(|(a, c)| *a * *c).sum())
    }

    /// `(x|y)` for rational vectors in root coordinates.
    pub fn inner_product(&self, x: &[Rational], y: &[Rational]) -> Result<Rational> {
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch { left: x.len(), right: y.len() });
        }
        self.check_dim(x.len())?;
        let mut total = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                total += *xi * self.form[i][j] * *yj;
            }
        }
        Ok(total)
    }

    pub fn inner_roots(&self, x: &RootVec, y: &RootVec) -> Rational {
        let mut total = Rational::zero();
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                if yj != 0 {
                    total += Rational::from_integer(xi * yj) * self.form[i][j];
                }
            }
        }
        total
    }

    /// `⟨x, α∨⟩ = 2(x|α)/(α|α)` for a root α.
    pub fn coroot_pairing(&self, x: &[Rational], alpha: &RootVec) -> Rational {
        let a = alpha.to_rational();
        let num = self.inner_product(x, &a).expect("dimension checked by caller");
        let den = self.inner_roots(alpha, alpha);
        Rational::from_integer(2) * num / den
    }

    /// Integer version of [`Self::coroot_pairing`] for lattice vectors.
    pub fn coroot_pairing_root(&self, x: &RootVec, alpha: &RootVec) -> i64 {
        let v = Rational::from_integer(2) * self.inner_roots(x, alpha) / self.inner_roots(alpha, alpha);
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    /// Applies the simple reflection `s_i` to an integer vector.
    pub fn reflect_root(&self, x: &RootVec, i: usize) -> RootVec {
        let p = self.pairing_root(x, i);
        let mut out = x.clone();
        out.0[i] -= p;
        out
    }

    /// Applies the reflection `s_α` to an integer vector.
    pub fn reflect_by(&self, alpha: &RootVec, x: &RootVec) -> RootVec {
        let p = self.coroot_pairing_root(x, alpha);
        x.sub(&alpha.scale(p))
    }

    pub fn weight_from_fund(&self, m: &[i64]) -> WeightVec {
        let fund: Vec<Rational> = m.iter().map(|&x| Rational::from_integer(x)).collect();
        self.weight_from_fund_rational(&fund).expect("length checked by caller")
    }

    pub fn weight_from_fund_rational(&self, fund: &[Rational]) -> Result<WeightVec> {
        self.check_dim(fund.len())?;
        let root = linalg::mat_vec(&self.cartan_inv, fund);
        Ok(WeightVec { fund: fund.to_vec(), root })
    }

    pub fn weight_from_root(&self, root: &[Rational]) -> Result<WeightVec> {
        self.check_dim(root.len())?;
        let fund = linalg::mat_vec(&self.cartan_q, root);
        Ok(WeightVec { fund, root: root.to_vec() })
    }

    /// Fundamental weight `ω_i` (0-based).
    pub fn fundamental_weight(&self, i: usize) -> Result<WeightVec> {
        self.check_index(i)?;
        let mut m = vec![0; self.rank()];
        m[i] = 1;
        Ok(self.weight_from_fund(&m))
    }

    /// Sub-root-system on the simple roots `indices` (0-based, kept in the
    /// given order). Simple root `k` of the result is `α_{indices[k]}`.
    pub fn parabolic(&self, indices: &[usize]) -> Result<RootSystem> {
        for &i in indices {
            self.check_index(i)?;
        }
        let cartan = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        RootSystem::from_cartan(cartan)
    }

    /// Embeds a vector of a parabolic subsystem built by [`Self::parabolic`].
    pub fn embed(&self, indices: &[usize], v: &RootVec) -> RootVec {
        let mut out = RootVec::zero(self.rank());
        for (k, &i) in indices.iter().enumerate() {
            out.0[i] = v.0[k];
        }
        out
    }

    /// Order of the Weyl group of an irreducible system, `n!·Π a_i·det(C)`.
    pub fn weyl_group_order(&self) -> Option<u128> {
        if !self.is_irreducible() {
            return None;
        }
        let n = self.rank() as u128;
        let fact: u128 = (1..=n).product();
        let marks: u128 = self.marks().iter().map(|&a| a as u128).product();
        let det = linalg::determinant(&self.cartan_q).to_integer().to_u128()?;
        Some(fact * marks * det)
    }
}

fn close_positive_roots(cartan: &[Vec<i64>]) -> Result<Vec<RootVec>> {
    let n = cartan.len();
    let mut seen: hashbrown::HashSet<RootVec> = hashbrown::HashSet::new();
    let mut queue: VecDeque<RootVec> = VecDeque::new();
    for i in 0..n {
        let r = RootVec::simple(n, i);
        seen.insert(r.clone());
        queue.push_back(r);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            if beta.0[i] == 1 && beta.0.iter().sum::<i64>() == 1 {
                continue; // β = α_i
            }
            let p: i64 = cartan[i].iter().zip(&beta.0).map(|(a, c)| a * c).sum();
            if p >= 0 {
                continue; // s_i lowers or fixes β
            }
            let mut gamma = beta.clone();
            gamma.0[i] -= p;
            if seen.insert(gamma.clone()) {
                if seen.len() > MAX_POSITIVE_ROOTS {
                    return Err(Error::NotFiniteType);
                }
                queue.push_back(gamma);
            }
        }
    }
    let mut roots: Vec<RootVec> = seen.into_iter().collect();
    roots.sort_by(root_order);
    Ok(roots)
}

/// The ordering used for positive roots: by height, then by decreasing
/// coordinate vector, so simple roots come as `α_1, α_2, …`.
pub fn root_order(a: &RootVec, b: &RootVec) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// Solves `d_i a_ij = d_j a_ji` along the Dynkin graph and normalises every
/// connected component so that its long roots have `d = 1`.
fn symmetrize(cartan: &[Vec<i64>], positive: &[RootVec]) -> Result<Vec<Rational>> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    let mut component = vec![usize::MAX; n];
    let mut comp_id = 0;
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        component[start] = comp_id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].expect("assigned");
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                if cartan[j][i] == 0 {
                    return Err(Error::NotFiniteType);
                }
                let dj = di * Rational::new(cartan[i][j], cartan[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component[j] = comp_id;
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => return Err(Error::NotFiniteType),
                    Some(_) => {}
                }
            }
        }
        comp_id += 1;
    }
    let mut d: Vec<Rational> = d.into_iter().map(|x| x.expect("assigned")).collect();
    // Longest roots of a component are among its roots; simple roots already
    // realise both lengths, so the maximum over simple roots is the long length.
    let _ = positive;
    for c in 0..comp_id {
        let max = (0..n)
            .filter(|&i| component[i] == c)
            .map(|i| d[i])
            .max()
            .expect("nonempty component");
        for i in 0..n {
            if component[i] == c {
                d[i] /= max;
            }
        }
    }
    Ok(d)
}

/// Closed-form positive-root counts.
pub fn classical_positive_root_count(label: TypeLabel) -> usize {
    let n = label.rank;
    match label.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

/// Every finite label with rank in `ranks` (skipping invalid combinations).
pub fn labels_up_to(max_rank: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
        for rank in 1..=max_rank {
            if let Ok(l) = TypeLabel::new(family, rank) {
                out.push(l);
            }
        }
    }
    out
}

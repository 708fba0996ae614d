//! Permutation statistics in one-line notation and the bridge to type A
//! Weyl groups, where `invsum` is the atomic length.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::rootdata::{Family, RootSystem, RootVec, TypeLabel};
use crate::weyl::{evaluate, WeylElement, Word};
use crate::{Error, Result};

/// Largest `n` the cosine probe enumerates by default.
pub const DEFAULT_PROBE_MAX_N: usize = 10;

/// A bijection of `{1..n}` stored as its one-line word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = alloc::vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(k)` for `1 ≤ k ≤ n`.
    pub fn apply(&self, k: usize) -> usize {
        self.one_line[k - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Position pairs `i < j` with `w(i) > w(j)`, 1-based.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(i, j)| self.apply(i) > self.apply(j)).collect()
    }

    pub fn length(&self) -> usize {
        self.inversions().len()
    }

    pub fn cosine(&self) -> u64 {
        self.one_line.iter().enumerate().map(|(i, &v)| ((i + 1) * v) as u64).sum()
    }

    pub fn entropy(&self) -> u64 {
        self.one_line.iter().enumerate().map(|(i, &v)| sq_diff(i + 1, v)).sum()
    }

    pub fn invsum(&self) -> u64 {
        self.pairs().filter(|&(i, j)| self.apply(i) > self.apply(j)).map(|(i, j)| (j - i) as u64).sum()
    }

    pub fn ninvsum(&self) -> u64 {
        self.pairs().filter(|&(i, j)| self.apply(i) < self.apply(j)).map(|(i, j)| (j - i) as u64).sum()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    /// A reduced word for `to_weyl`, read off by bubble sort: repeatedly
    /// swap the leftmost adjacent descent of `w⁻¹`, then reverse.
    pub fn bubble_word(&self) -> Word {
        let mut inv = self.inverse().one_line;
        let mut letters = Vec::new();
        while let Some(i) = (0..inv.len().saturating_sub(1)).find(|&i| inv[i] > inv[i + 1]) {
            inv.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        Word::new(letters)
    }
}

fn sq_diff(a: usize, b: usize) -> u64 {
    let d = a.abs_diff(b) as u64;
    d * d
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"2413"` or `"2,4,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Permutation::new(parts.ok_or(Error::NotAPermutation)?)
    }
}

/// Lexicographic enumeration of `S_n`, optionally restricted to a fixed
/// first entry so that scans can be split into `n` independent shards.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
    first: Option<usize>,
}

impl Permutations {
    pub fn all(n: usize) -> Self {
        Permutations { next: Some((1..=n).collect()), first: None }
    }

    pub fn starting_with(n: usize, first: usize) -> Self {
        if first == 0 || first > n {
            return Permutations { next: None, first: None };
        }
        let mut start = alloc::vec![first];
        start.extend((1..=n).filter(|&v| v != first));
        Permutations { next: Some(start), first: Some(first) }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) && self.first.is_none_or(|f| succ[0] == f) {
            self.next = Some(succ);
        }
        Some(Permutation { one_line: cur })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap_or(i);
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The root system `A_{n−1}` that `S_n` acts on.
pub fn type_a_system(n: usize) -> Result<RootSystem> {
    if n < 2 {
        return Err(Error::PreconditionViolation("to_weyl needs n ≥ 2"));
    }
    RootSystem::new(TypeLabel::new(Family::A, n - 1)?)
}

/// `e_a − e_b` in simple-root coordinates of `A_{n−1}`.
fn difference_root(n: usize, a: usize, b: usize) -> RootVec {
    let mut v = RootVec::zero(n - 1);
    let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
    for k in lo..hi {
        v.0[k - 1] = sign;
    }
    v
}

/// The Weyl element sending `e_k` to `e_{w⁻¹(k)}`, whose inversion set is
/// `{e_i − e_j : (i, j) an inversion of w}`.
pub fn to_weyl(sys: &RootSystem, w: &Permutation) -> Result<WeylElement> {
    let n = w.n();
    if sys.rank() + 1 != n {
        return Err(Error::DimensionMismatch { left: n, right: sys.rank() + 1 });
    }
    let inv = w.inverse();
    let cols: Vec<RootVec> =
        (1..n).map(|j| difference_root(n, inv.apply(j), inv.apply(j + 1))).collect();
    WeylElement::from_columns(sys, &cols)
}

/// `to_weyl` computed by evaluating the bubble-sort word.
pub fn to_weyl_via_word(sys: &RootSystem, w: &Permutation) -> Result<WeylElement> {
    evaluate(sys, &w.bubble_word())
}

/// The root `e_i − e_j` attached to an inversion pair.
pub fn inversion_root(n: usize, i: usize, j: usize) -> RootVec {
    difference_root(n, i, j)
}

/// `|w(x) − x|²` with `w` acting on the coordinate values of `x`.
pub fn permutohedron_distance_sq(w: &Permutation, x: &[i64]) -> Result<u64> {
    let n = w.n();
    if x.len() != n || !is_adequate(x) {
        return Err(Error::NotAdequate);
    }
    Ok(x.iter().map(|&xi| sq_diff(w.apply(xi as usize), xi as usize)).sum())
}

/// Integer coordinates in `[1, n]`, pairwise distinct.
pub fn is_adequate(x: &[i64]) -> bool {
    let n = x.len() as i64;
    let distinct: BTreeSet<i64> = x.iter().copied().collect();
    distinct.len() == x.len() && x.iter().all(|&v| (1..=n).contains(&v))
}

/// Cosines attained by `S_0, …, S_max_n` within `[0, bound]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosineProbe {
    pub max_n: usize,
    pub bound: u64,
    pub attained: BTreeSet<u64>,
    pub gaps: Vec<u64>,
    /// Every `S_m` with `m > max_n` has cosine at least this, so gaps
    /// below it are genuine.
    pub certified_below: u64,
}

impl CosineProbe {
    pub fn certified_gaps(&self) -> Vec<u64> {
        self.gaps.iter().copied().filter(|&g| g < self.certified_below).collect()
    }
}

fn binomial3(m: u64) -> u64 {
    if m < 3 { 0 } else { m * (m - 1) * (m - 2) / 6 }
}

pub fn cosine_range_probe(max_n: usize, bound: u64) -> Result<CosineProbe> {
    if max_n > DEFAULT_PROBE_MAX_N {
        return Err(Error::SizeTooLarge { max: max_n, cap: DEFAULT_PROBE_MAX_N });
    }
    let mut attained = BTreeSet::new();
    for n in 0..=max_n {
        // min cosine of S_n is cos(w0) = C(n+2, 3)
        if binomial3(n as u64 + 2) > bound {
            break;
        }
        attained.extend(Permutations::all(n).map(|w| w.cosine()).filter(|&c| c <= bound));
    }
    let gaps = (0..=bound).filter(|v| !attained.contains(v)).collect();
    Ok(CosineProbe { max_n, bound, attained, gaps, certified_below: binomial3(max_n as u64 + 3) })
}

/// `C(n+1, 3)`, the common value of `invsum + ninvsum` on `S_n`.
pub fn invsum_total(n: usize) -> u64 {
    binomial3(n as u64 + 1)
}

/// One CSV-style row of statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermStats {
    pub one_line: String,
    pub length: usize,
    pub invsum: u64,
    pub ninvsum: u64,
    pub entropy: u64,
    pub cosine: u64,
}

pub fn stats(w: &Permutation) -> PermStats {
    use alloc::string::ToString;
    PermStats {
        one_line: w.to_string(),
        length: w.length(),
        invsum: w.invsum(),
        ninvsum: w.ninvsum(),
        entropy: w.entropy(),
        cosine: w.cosine(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atomiclen::atomic_length;
    use alloc::string::ToString;
    use alloc::vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn statistics_examples() {
        let e = Permutation::identity(4);
        assert_eq!((e.entropy(), e.invsum(), e.cosine()), (0, 0, 30));
        let w0 = p("4321");
        assert_eq!((w0.invsum(), w0.ninvsum(), w0.entropy()), (10, 0, 20));
        assert_eq!(Permutation::new(vec![1, 1]), Err(Error::NotAPermutation));
        assert_eq!(p("1,3,2"), p("132"));
    }

    #[test]
    fn enumeration() {
        assert_eq!(Permutations::all(4).count(), 24);
        assert_eq!(Permutations::all(0).count(), 1);
        let shards: usize = (1..=5).map(|f| Permutations::starting_with(5, f).count()).sum();
        assert_eq!(shards, 120);
        let firsts: Vec<_> = Permutations::all(3).map(|w| w.to_string()).collect();
        assert_eq!(firsts, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn weyl_bridge() {
        let sys = type_a_system(3).unwrap();
        let w = to_weyl(&sys, &p("132")).unwrap();
        assert_eq!(w, WeylElement::simple(&sys, 2).unwrap());
        assert_eq!(atomic_length(&sys, &w), 1);
        let w = to_weyl(&sys, &p("231")).unwrap();
        assert_eq!(atomic_length(&sys, &w), 3);
        for perm in Permutations::all(3) {
            assert_eq!(to_weyl(&sys, &perm).unwrap(), to_weyl_via_word(&sys, &perm).unwrap());
        }
    }

    #[test]
    fn distance() {
        let w0 = p("4321");
        assert_eq!(permutohedron_distance_sq(&w0, &[1, 2, 3, 4]), Ok(20));
        assert_eq!(permutohedron_distance_sq(&w0, &[3, 1, 4, 2]), Ok(20));
        assert_eq!(permutohedron_distance_sq(&Permutation::identity(3), &[2, 3, 1]), Ok(0));
        assert_eq!(permutohedron_distance_sq(&w0, &[1, 1, 3, 4]), Err(Error::NotAdequate));
        assert_eq!(permutohedron_distance_sq(&w0, &[0, 1, 2, 3]), Err(Error::NotAdequate));
    }

    #[test]
    fn cosine_probe() {
        let probe = cosine_range_probe(8, 30).unwrap();
        assert!(!probe.attained.contains(&16));
        assert!(probe.certified_gaps().contains(&16));
        assert!(cosine_range_probe(1, 1).unwrap().attained.contains(&1));
    }
}

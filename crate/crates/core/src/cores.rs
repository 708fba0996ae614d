//! Partitions, `m`-cores and the residue action of the affine type-A Weyl
//! group on cores, whose orbit through the empty partition is the orbit of
//! `Λ_0`. The size of a core is the atomic length `L_{Λ_0}` of the
//! corresponding element.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::affine::{lattice_level_one_values, AffineSystem};
use crate::rootdata::{Family, TypeLabel};
use crate::{Error, Result};

/// Default cap on the size bound accepted by core enumerations.
pub const DEFAULT_SIZE_CAP: usize = 2_000;

/// A weakly decreasing list of positive parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PreconditionViolation("parts must be positive and weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        Partition { parts }
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(r, &p)| (0..p).map(|c| (p - c - 1) + (conj.parts[c] - r - 1) + 1).collect())
            .collect()
    }

    /// First-column hook lengths `λ_i + (ℓ − i)` (0-based `i`).
    pub fn beta_numbers(&self) -> Vec<usize> {
        let l = self.parts.len();
        self.parts.iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect()
    }

    fn addable(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &p) in self.parts.iter().enumerate() {
            if r == 0 || self.parts[r - 1] > p {
                out.push((r, p));
            }
        }
        out.push((self.parts.len(), 0));
        out
    }

    fn removable(&self) -> Vec<(usize, usize)> {
        let l = self.parts.len();
        (0..l)
            .filter(|&r| r + 1 == l || self.parts[r + 1] < self.parts[r])
            .map(|r| (r, self.parts[r] - 1))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Residue `(c − r) mod m` of the cell in row `r`, column `c`.
pub fn residue(row: usize, col: usize, m: usize) -> usize {
    (col + m * (row / m + 1) - row) % m
}

fn check_modulus(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::InvalidModulus(m))
    } else {
        Ok(())
    }
}

/// No hook length divisible by `m`, read off the beta-numbers: an
/// `m`-hook exists iff some `x ≥ m` has `x − m` missing from the set.
pub fn is_core(p: &Partition, m: usize) -> Result<bool> {
    check_modulus(m)?;
    let beta: BTreeSet<usize> = p.beta_numbers().into_iter().collect();
    Ok(beta.iter().all(|&x| x < m || beta.contains(&(x - m))))
}

/// No hook length divisible by `m`, checked cell by cell.
pub fn is_core_by_hooks(p: &Partition, m: usize) -> Result<bool> {
    check_modulus(m)?;
    Ok(p.hook_lengths().iter().flatten().all(|h| h % m != 0))
}

/// Whether some rim hook of size `m` can be removed, by searching all
/// sub-partitions `μ ⊂ λ` with `|λ/μ| = m` for a connected skew shape
/// without a 2×2 square.
pub fn has_removable_rim_hook(p: &Partition, m: usize) -> bool {
    if p.size() < m {
        return false;
    }
    let mut mu = p.parts.clone();
    search_rim_hooks(p, &mut mu, 0, m)
}

fn search_rim_hooks(p: &Partition, mu: &mut Vec<usize>, row: usize, left: usize) -> bool {
    if row == p.parts.len() {
        return left == 0 && is_border_strip(p, mu);
    }
    let upper = if row == 0 { p.parts[0] } else { mu[row - 1].min(p.parts[row]) };
    for v in (0..=upper).rev() {
        let removed = p.parts[row] - v;
        if removed > left {
            break;
        }
        mu[row] = v;
        if search_rim_hooks(p, mu, row + 1, left - removed) {
            return true;
        }
    }
    mu[row] = p.parts[row];
    false
}

fn is_border_strip(p: &Partition, mu: &[usize]) -> bool {
    let cells: Vec<(usize, usize)> = p
        .parts
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (mu[r]..len).map(move |c| (r, c)))
        .collect();
    let inside = |r: usize, c: usize| r < p.parts.len() && c >= mu[r] && c < p.parts[r];
    if cells.iter().any(|&(r, c)| inside(r + 1, c) && inside(r, c + 1) && inside(r + 1, c + 1)) {
        return false;
    }
    // connectivity through edge-adjacent cells
    let mut seen = vec![false; cells.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        let (r, c) = cells[k];
        for (j, &(r2, c2)) in cells.iter().enumerate() {
            if !seen[j] && r.abs_diff(r2) + c.abs_diff(c2) == 1 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Adds every addable cell of residue `i`, or else removes every removable
/// cell of residue `i`; `n + 1` is the modulus.
pub fn residue_reflect(p: &Partition, i: usize, n: usize) -> Result<Partition> {
    let m = n + 1;
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    if !is_core(p, m)? {
        return Err(Error::NotACore);
    }
    Ok(reflect_unchecked(p, i, m))
}

fn reflect_unchecked(p: &Partition, i: usize, m: usize) -> Partition {
    let add: Vec<(usize, usize)> =
        p.addable().into_iter().filter(|&(r, c)| residue(r, c, m) == i).collect();
    let mut parts = p.parts.clone();
    if !add.is_empty() {
        for (r, _) in add {
            if r == parts.len() {
                parts.push(1);
            } else {
                parts[r] += 1;
            }
        }
    } else {
        for (r, _) in p.removable().into_iter().filter(|&(r, c)| residue(r, c, m) == i) {
            parts[r] -= 1;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
    }
    Partition { parts }
}

fn check_size(max_size: usize, cap: usize) -> Result<()> {
    if max_size > cap {
        Err(Error::SizeTooLarge { max: max_size, cap })
    } else {
        Ok(())
    }
}

/// Cores reached from `∅` by residue reflections, grouped by size
/// (each list sorted). Only size-increasing moves are followed, which
/// reaches every core because sizes are orbit depths.
pub fn orbit_cores(n: usize, max_size: usize, cap: usize) -> Result<BTreeMap<usize, Vec<Partition>>> {
    let mut out = BTreeMap::new();
    traverse_cores(n, max_size, cap, |size, bucket| {
        out.insert(size, bucket.to_vec());
    })?;
    Ok(out)
}

/// Number of `(n+1)`-cores of every size up to `max_size`.
pub fn core_size_counts(n: usize, max_size: usize, cap: usize) -> Result<BTreeMap<usize, u64>> {
    let mut out = BTreeMap::new();
    traverse_cores(n, max_size, cap, |size, bucket| {
        out.insert(size, bucket.len() as u64);
    })?;
    Ok(out)
}

fn traverse_cores(
    n: usize,
    max_size: usize,
    cap: usize,
    mut visit: impl FnMut(usize, &[Partition]),
) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidModulus(1));
    }
    check_size(max_size, cap)?;
    let m = n + 1;
    let mut pending: BTreeMap<usize, BTreeSet<Partition>> = BTreeMap::new();
    pending.entry(0).or_default().insert(Partition::empty());
    while let Some((size, bucket)) = pending.pop_first() {
        let bucket: Vec<Partition> = bucket.into_iter().collect();
        for p in &bucket {
            for i in 0..m {
                let q = reflect_unchecked(p, i, m);
                let s = q.size();
                if s > size && s <= max_size {
                    pending.entry(s).or_default().insert(q);
                }
            }
        }
        visit(size, &bucket);
    }
    Ok(())
}

/// All partitions of `size` in lexicographically decreasing order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(size, size, &mut cur, &mut out);
    out
}

fn fill_partitions(left: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=left.min(max_part)).rev() {
        cur.push(p);
        fill_partitions(left - p, p, cur, out);
        cur.pop();
    }
}

/// `(#(n+1)-cores of size N, #{β ∈ Q : ((n+1)/2)|β|² − ht(β) = N})`.
pub fn core_count_vs_lattice(n: usize, size: usize) -> Result<(u64, u64)> {
    let cores = core_size_counts(n, size, DEFAULT_SIZE_CAP)?.get(&size).copied().unwrap_or(0);
    let asys = AffineSystem::new(TypeLabel::affine(Family::A, n)?)?;
    let lattice = lattice_level_one_values(&asys, size as u64).get(&(size as u64)).copied().unwrap_or(0);
    Ok((cores, lattice))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn core_examples() {
        assert!(is_core(&Partition::empty(), 5).unwrap());
        assert!(is_core(&part(&[3, 1, 1]), 3).unwrap());
        assert!(!is_core(&part(&[2, 1]), 3).unwrap());
        assert_eq!(is_core(&part(&[1]), 1), Err(Error::InvalidModulus(1)));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn residue_reflection_examples() {
        assert_eq!(residue_reflect(&Partition::empty(), 0, 2).unwrap(), part(&[1]));
        assert_eq!(residue_reflect(&part(&[1]), 1, 2).unwrap(), part(&[2]));
        assert_eq!(residue_reflect(&part(&[1]), 2, 2).unwrap(), part(&[1, 1]));
        let p = part(&[3, 1]);
        for i in 0..3 {
            let q = residue_reflect(&p, i, 2).unwrap();
            assert_eq!(residue_reflect(&q, i, 2).unwrap(), p);
        }
        assert_eq!(residue_reflect(&part(&[2, 1]), 0, 2), Err(Error::NotACore));
    }

    #[test]
    fn three_cores_up_to_five() {
        let cores = orbit_cores(2, 5, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(cores.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2, 4, 5]);
        let two_cores = orbit_cores(1, 6, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(two_cores.keys().copied().collect::<Vec<_>>(), vec![0, 1, 3, 6]);
        assert!(matches!(orbit_cores(2, 10, 5), Err(Error::SizeTooLarge { max: 10, cap: 5 })));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn count_vs_lattice_examples() {
        assert_eq!(core_count_vs_lattice(2, 3).unwrap(), (0, 0));
        assert_eq!(core_count_vs_lattice(4, 0).unwrap(), (1, 1));
        let (a, b) = core_count_vs_lattice(3, 5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn residues() {
        assert_eq!(residue(0, 0, 3), 0);
        assert_eq!(residue(1, 0, 3), 2);
        assert_eq!(residue(0, 4, 3), 1);
        assert_eq!(residue(5, 1, 3), 2);
    }
}

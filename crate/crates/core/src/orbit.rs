//! Depth-bucketed traversal of a weight orbit `W·λ` for a (generalized)
//! Cartan matrix, working in fundamental coordinates.
//!
//! From `μ` with `m_i = ⟨μ, α_i∨⟩ > 0` the edge `μ → s_i(μ) = μ − m_i α_i`
//! raises the depth `⟨λ − μ, ρ∨⟩` by `m_i`. Every orbit point is reached from
//! `λ` along such edges, and its depth depends only on the point, so buckets
//! can be processed in increasing depth and deduplicated locally.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::{Error, Result};

/// Default bound on the number of orbit states.
pub const DEFAULT_STATE_CAP: usize = 1 << 27;

/// Orbit point in fundamental coordinates.
pub type State = Box<[i64]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitConfig {
    /// Maximum number of states visited before failing with `OrbitTooLarge`.
    pub max_states: usize,
    /// Points deeper than this are not explored (needed for infinite orbits).
    pub max_depth: Option<u64>,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig { max_states: DEFAULT_STATE_CAP, max_depth: None }
    }
}

/// Number of orbit points at every attained depth.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitSummary {
    pub depths: BTreeMap<u64, u64>,
    pub states: u64,
}

impl OrbitSummary {
    pub fn values(&self) -> Vec<u64> {
        self.depths.keys().copied().collect()
    }
}

/// Pushes the lowering successors of `state` (at depth `depth`).
/// `cartan[j][i] = ⟨α_i, α_j∨⟩`.
pub fn expand_state(
    cartan: &[Vec<i64>],
    depth: u64,
    state: &[i64],
    max_depth: Option<u64>,
    mut push: impl FnMut(u64, State),
) {
    let n = state.len();
    for i in 0..n {
        let mi = state[i];
        if mi <= 0 {
            continue;
        }
        let d = depth + mi as u64;
        if max_depth.is_some_and(|cap| d > cap) {
            continue;
        }
        let next: State = (0..n).map(|j| state[j] - mi * cartan[j][i]).collect();
        push(d, next);
    }
}

/// Expands one bucket sequentially.
pub fn expand_bucket(
    cartan: &[Vec<i64>],
    depth: u64,
    bucket: &[State],
    max_depth: Option<u64>,
) -> Vec<(u64, State)> {
    let mut out = Vec::new();
    for s in bucket {
        expand_state(cartan, depth, s, max_depth, |d, t| out.push((d, t)));
    }
    out
}

/// Runs the traversal with a caller-supplied bucket expander (the default
/// is [`expand_bucket`]; a parallel companion can shard the bucket). The
/// result does not depend on the order in which successors are returned.
pub fn traverse_with<F>(start: &[i64], config: OrbitConfig, mut expand: F) -> Result<OrbitSummary>
where
    F: FnMut(u64, &[State]) -> Vec<(u64, State)>,
{
    let mut pending: BTreeMap<u64, HashSet<State>> = BTreeMap::new();
    pending.entry(0).or_default().insert(start.into());
    let mut summary = OrbitSummary::default();
    while let Some((depth, set)) = pending.pop_first() {
        summary.states += set.len() as u64;
        if summary.states > config.max_states as u64 {
            return Err(Error::OrbitTooLarge { cap: config.max_states });
        }
        summary.depths.insert(depth, set.len() as u64);
        let mut bucket: Vec<State> = set.into_iter().collect();
        bucket.sort_unstable();
        for (d, s) in expand(depth, &bucket) {
            pending.entry(d).or_default().insert(s);
        }
    }
    Ok(summary)
}

/// Sequential traversal.
pub fn traverse(cartan: &[Vec<i64>], start: &[i64], config: OrbitConfig) -> Result<OrbitSummary> {
    traverse_with(start, config, |d, bucket| expand_bucket(cartan, d, bucket, config.max_depth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn a2_rho_orbit() {
        let cartan = vec![vec![2, -1], vec![-1, 2]];
        let s = traverse(&cartan, &[1, 1], OrbitConfig::default()).unwrap();
        assert_eq!(s.values(), vec![0, 1, 3, 4]);
        assert_eq!(s.states, 6);
    }

    #[test]
    fn zero_weight_is_fixed() {
        let cartan = vec![vec![2, -1], vec![-1, 2]];
        let s = traverse(&cartan, &[0, 0], OrbitConfig::default()).unwrap();
        assert_eq!(s.values(), vec![0]);
        assert_eq!(s.states, 1);
    }

    #[test]
    fn cap_is_enforced() {
        let cartan = vec![vec![2, -1], vec![-1, 2]];
        let cfg = OrbitConfig { max_states: 3, max_depth: None };
        assert_eq!(traverse(&cartan, &[1, 1], cfg), Err(Error::OrbitTooLarge { cap: 3 }));
    }

    #[test]
    fn depth_cap_truncates_infinite_orbit() {
        // affine A1: orbit of Λ0 has depths k² + ... all finite below the cap
        let cartan = vec![vec![2, -2], vec![-2, 2]];
        let cfg = OrbitConfig { max_states: 1000, max_depth: Some(10) };
        let s = traverse(&cartan, &[1, 0], cfg).unwrap();
        assert!(s.values().iter().all(|&d| d <= 10));
        assert_eq!(s.values(), vec![0, 1, 3, 6, 10]);
    }
}

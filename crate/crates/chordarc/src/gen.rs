//! Seeded random chordal graphs.
//!
//! Chordal graphs are exactly the intersection graphs of subtrees of a
//! tree, so sampling one means sampling a host tree and one random
//! connected subtree per vertex. The generator is fully deterministic in
//! its seed: per-trial seeds are derived by hashing, never by sharing RNG
//! state, so parallel and serial runs agree.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("rejection limit {0} exceeded while sampling")]
    RejectLimitExceeded(usize),
}

/// Small deterministic PRNG (splitmix64). Pinned here rather than taken
/// from a crate so that seeds reproduce byte-identical suites forever.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough value in `0..n` (modulo bias is irrelevant here).
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

/// Independent per-trial seed.
pub fn derive_seed(seed: u64, trial: u64) -> u64 {
    let mut rng = SplitMix64::new(seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    rng.next_u64()
}

#[derive(Clone, Debug)]
pub struct GenParams {
    pub n: usize,
    pub tree_size: usize,
    pub subtree_mean: usize,
    pub seed: u64,
    pub alpha_max: Option<usize>,
    pub reject_limit: usize,
}

impl GenParams {
    /// Reasonable defaults for a target vertex count.
    pub fn new(n: usize, seed: u64) -> Self {
        let tree_size = (n / 2).max(2);
        GenParams {
            n,
            tree_size,
            subtree_mean: (tree_size / 3).max(1),
            seed,
            alpha_max: None,
            reject_limit: 400,
        }
    }
}

/// Samples the subtree intersection graph of a random host tree; rejection
/// samples when an independence-number cap is set.
pub fn random_chordal(p: &GenParams) -> Result<Graph, GenError> {
    assert!(p.n >= 1 && p.tree_size >= 1);
    for attempt in 0..=p.reject_limit {
        let g = sample_once(p, derive_seed(p.seed, attempt as u64));
        let ok = match p.alpha_max {
            None => true,
            Some(cap) => crate::oracle::alpha_at_most(&g, cap),
        };
        if ok {
            debug_assert!(crate::chordal::is_chordal(&g).is_some());
            return Ok(g);
        }
    }
    Err(GenError::RejectLimitExceeded(p.reject_limit))
}

fn sample_once(p: &GenParams, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let ts = p.tree_size;
    let mut host: Vec<Vec<usize>> = vec![Vec::new(); ts];
    for i in 1..ts {
        let parent = rng.below(i);
        host[i].push(parent);
        host[parent].push(i);
    }
    let mut subtrees: Vec<Vec<bool>> = Vec::with_capacity(p.n);
    for _ in 0..p.n {
        let target = (1 + rng.below(2 * p.subtree_mean.max(1))).min(ts);
        let mut members = vec![false; ts];
        let start = rng.below(ts);
        members[start] = true;
        let mut size = 1;
        let mut frontier: Vec<usize> = host[start].clone();
        while size < target && !frontier.is_empty() {
            let node = frontier.swap_remove(rng.below(frontier.len()));
            if members[node] {
                continue;
            }
            members[node] = true;
            size += 1;
            for &nb in &host[node] {
                if !members[nb] {
                    frontier.push(nb);
                }
            }
        }
        subtrees.push(members);
    }
    let labels: Vec<String> = (0..p.n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..p.n {
        for j in i + 1..p.n {
            if (0..ts).any(|t| subtrees[i][t] && subtrees[j][t]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(&labels, &edges).expect("generated labels are valid")
}

/// A uniformly random labeled graph on `n` vertices (each edge present with
/// probability one half). Used by the soundness suites, not chordal.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(1, 2) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(&labels, &edges).expect("generated labels are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::is_chordal;

    #[test]
    fn single_vertex() {
        let p = GenParams::new(1, 11);
        let g = random_chordal(&p).unwrap();
        assert_eq!(g.n(), 1);
    }

    #[test]
    fn always_chordal() {
        for seed in 0..60u64 {
            let p = GenParams::new(3 + (seed % 12) as usize, seed);
            let g = random_chordal(&p).unwrap();
            assert!(is_chordal(&g).is_some(), "seed {seed} gave {g:?}");
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let p = GenParams::new(9, 42);
        let a = random_chordal(&p).unwrap();
        let b = random_chordal(&p).unwrap();
        assert_eq!(a.to_edge_list(), b.to_edge_list());
    }

    #[test]
    fn alpha_cap_respected() {
        let mut p = GenParams::new(8, 7);
        p.alpha_max = Some(3);
        let g = random_chordal(&p).unwrap();
        assert!(crate::oracle::brute_force_alpha(&g) <= 3);
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }

    #[test]
    fn impossible_cap_hits_reject_limit() {
        // Single-node subtrees on a many-node host tree scatter the
        // vertices, so an independence cap of one cannot be met.
        let p = GenParams {
            n: 12,
            tree_size: 12,
            subtree_mean: 1,
            seed: 5,
            alpha_max: Some(1),
            reject_limit: 10,
        };
        assert_eq!(random_chordal(&p), Err(GenError::RejectLimitExceeded(10)));
    }
}

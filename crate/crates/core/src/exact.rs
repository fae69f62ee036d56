//! Exact maximum independent set by degree-threshold branching, plus two
//! exhaustive oracles used as ground truth.
//!
//! The branching solver picks the lowest-index vertex whose degree in the
//! current subgraph is at least `(p - epsilon) * m`, where `m` is the current
//! vertex count, and recurses on "vertex taken" (closed neighborhood removed)
//! and "vertex skipped". A subgraph with no such vertex is solved by full
//! subset enumeration, which on random inputs is rare.

use crate::error::{BudgetSite, Error, Result};
use crate::graph::{Graph, Mask, VertexSet};

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;

/// Hard ceiling for subset enumeration, which uses a 64-bit counter.
pub const MAX_ENUMERATION: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpsilonConfig {
    pub epsilon: f64,
    /// Largest subgraph the enumeration fallback may be asked to solve.
    pub brute_force_cap: usize,
}

impl EpsilonConfig {
    pub fn new(epsilon: f64, brute_force_cap: usize) -> Self {
        Self {
            epsilon,
            brute_force_cap,
        }
    }

    /// `epsilon = min(p, 1 - p) / 2`, which keeps both `epsilon < p` and `p + epsilon < 1`.
    pub fn for_probability(p: f64) -> Self {
        Self::new(default_epsilon(p), DEFAULT_BRUTE_FORCE_CAP)
    }

    pub fn validate(&self, p: f64) -> Result<()> {
        if !(self.epsilon > 0.0 && self.epsilon < p && p <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "need 0 < epsilon < p <= 1, got epsilon = {}, p = {p}",
                self.epsilon
            )));
        }
        if self.brute_force_cap == 0 || self.brute_force_cap > MAX_ENUMERATION {
            return Err(Error::InvalidParameter(format!(
                "brute-force cap must be in 1..={MAX_ENUMERATION}, got {}",
                self.brute_force_cap
            )));
        }
        Ok(())
    }
}

pub fn default_epsilon(p: f64) -> f64 {
    p.min(1.0 - p) / 2.0
}

/// Counters from one run of [`max_independent_set`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BranchStats {
    /// Recursion calls, including empty-graph leaves.
    pub nodes_expanded: u64,
    /// Subgraphs handed to subset enumeration because no good vertex existed.
    pub fallback_invocations: u64,
    /// Depth of the deepest call; the root is depth 0.
    pub max_depth: u64,
    /// Vertex degree tests performed while looking for good vertices.
    pub good_vertex_checks: u64,
}

impl BranchStats {
    pub fn merge(&mut self, other: &BranchStats) {
        self.nodes_expanded += other.nodes_expanded;
        self.fallback_invocations += other.fallback_invocations;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.good_vertex_checks += other.good_vertex_checks;
    }
}

/// Lowest-index vertex with `deg(v) >= (p - epsilon) * n`, if any.
pub fn find_good_vertex(g: &Graph, p: f64, epsilon: f64) -> Option<usize> {
    let threshold = (p - epsilon) * g.n() as f64;
    (0..g.n()).find(|&v| g.degree(v) as f64 >= threshold)
}

fn adjacency_words(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.row(v)[0]).collect()
}

fn check_cap(n: usize, cap: usize, site: BudgetSite) -> Result<()> {
    let cap = cap.min(MAX_ENUMERATION);
    if n > cap {
        return Err(Error::Budget { site, size: n, cap });
    }
    Ok(())
}

/// Maximum independent set by enumerating all `2^n` subsets as a binary
/// counter (vertex 0 is the low bit). The first subset of the largest size
/// in counter order wins.
pub fn brute_force_mis(g: &Graph, cap: usize) -> Result<VertexSet> {
    check_cap(g.n(), cap, BudgetSite::BruteForce)?;
    Ok(enumerate_mis(g))
}

fn enumerate_mis(g: &Graph) -> VertexSet {
    let n = g.n();
    if n == 0 {
        return VertexSet::empty();
    }
    let adj = adjacency_words(g);
    let mut best = 0u64;
    let mut best_size = 0u32;
    for subset in 1u64..(1u64 << n) {
        let size = subset.count_ones();
        if size <= best_size {
            continue;
        }
        let mut rest = subset;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if adj[v] & subset != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if independent {
            best = subset;
            best_size = size;
        }
    }
    VertexSet::from_sorted((0..n).filter(|&v| best >> v & 1 == 1).collect())
}

/// Independence number by plain include/exclude branching on the lowest
/// remaining vertex. Shares no code path with [`brute_force_mis`].
pub fn mis_recursive_oracle(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g.n(), cap, BudgetSite::BruteForce)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = adjacency_words(g);

    fn alpha(adj: &[u64], alive: u64) -> usize {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let without = alive & !(1u64 << v);
        let skip = alpha(adj, without);
        let take = 1 + alpha(adj, without & !adj[v]);
        skip.max(take)
    }

    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(alpha(&adj, all))
}

struct Brancher<'g> {
    g: &'g Graph,
    /// `p - epsilon`
    rate: f64,
    cap: usize,
    stats: BranchStats,
}

impl Brancher<'_> {
    fn good_vertex(&mut self, alive: &Mask, m: usize) -> Option<usize> {
        let threshold = self.rate * m as f64;
        for v in alive.iter() {
            self.stats.good_vertex_checks += 1;
            if alive.count_and(self.g.row(v)) as f64 >= threshold {
                return Some(v);
            }
        }
        None
    }

    fn solve(&mut self, alive: Mask, depth: u64) -> Result<Vec<usize>> {
        self.stats.nodes_expanded += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let m = alive.count();
        if m == 0 {
            return Ok(Vec::new());
        }

        let Some(v) = self.good_vertex(&alive, m) else {
            self.stats.fallback_invocations += 1;
            check_cap(m, self.cap, BudgetSite::Fallback)?;
            let (sub, map) = self.g.induced_mask(&alive);
            return Ok(enumerate_mis(&sub).iter().map(|i| map[i]).collect());
        };

        let mut taken = alive.clone();
        taken.subtract(self.g.row(v));
        taken.remove(v);
        let mut with_v = self.solve(taken, depth + 1)?;

        let mut skipped = alive;
        skipped.remove(v);
        let without_v = self.solve(skipped, depth + 1)?;

        if without_v.len() > with_v.len() {
            Ok(without_v)
        } else {
            with_v.push(v);
            Ok(with_v)
        }
    }
}

/// Maximum independent set of `g` by degree-threshold branching, in `g`'s own indices.
///
/// Correct on every graph; `p` only steers which vertices count as good.
pub fn max_independent_set(
    g: &Graph,
    p: f64,
    cfg: &EpsilonConfig,
) -> Result<(VertexSet, BranchStats)> {
    cfg.validate(p)?;
    let mut brancher = Brancher {
        g,
        rate: p - cfg.epsilon,
        cap: cfg.brute_force_cap,
        stats: BranchStats::default(),
    };
    let mut found = brancher.solve(Mask::full(g.n()), 0)?;
    found.sort_unstable();
    Ok((VertexSet::from_sorted(found), brancher.stats))
}

//! Decides whether a graph has an independent set of size `k`.
//!
//! Small `k` relative to `log n` is answered by greedy min-degree peeling,
//! which on random graphs almost always finds enough vertices; otherwise, and
//! whenever peeling comes up short, size-`k` subsets are enumerated.

use crate::error::{Error, Result};
use crate::graph::{Graph, Mask, VertexSet};
use crate::subsets::KSubsets;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecidePath {
    LargeKEnumeration,
    GreedySuccess,
    GreedyFailEnumeration,
}

impl DecidePath {
    pub fn as_str(self) -> &'static str {
        match self {
            DecidePath::LargeKEnumeration => "large_k_enumeration",
            DecidePath::GreedySuccess => "greedy_success",
            DecidePath::GreedyFailEnumeration => "greedy_fail_enumeration",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOutcome {
    /// Present iff the answer is yes; always independent with exactly `k` members.
    pub witness: Option<VertexSet>,
    pub path: DecidePath,
}

impl DecideOutcome {
    pub fn answer(&self) -> bool {
        self.witness.is_some()
    }
}

fn check_rates(p: f64, epsilon: f64) -> Result<()> {
    if !(p > 0.0 && epsilon > 0.0 && p + epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "need p > 0, epsilon > 0 and p + epsilon < 1, got p = {p}, epsilon = {epsilon}"
        )));
    }
    Ok(())
}

/// `(1/3) * log_{1/(1-p-epsilon)} n`, the size below which peeling is tried first.
pub fn level_threshold(n: usize, p: f64, epsilon: f64) -> Result<f64> {
    check_rates(p, epsilon)?;
    if n == 0 {
        return Err(Error::InvalidParameter(
            "level threshold needs n >= 1".into(),
        ));
    }
    let base = 1.0 / (1.0 - p - epsilon);
    Ok((n as f64).log2() / (3.0 * base.log2()))
}

/// Repeatedly takes a minimum-degree vertex (lowest index on ties) and deletes
/// its closed neighborhood, until at most `n^(2/3)` of the original `n`
/// vertices remain. A non-empty graph always gives up at least one vertex.
pub fn greedy_peel(g: &Graph) -> VertexSet {
    let n = g.n() as u128;
    let mut alive = Mask::full(g.n());
    let mut remaining = g.n();
    let mut picked = Vec::new();
    // remaining <= n^(2/3)  <=>  remaining^3 <= n^2, compared exactly.
    while remaining > 0 && (picked.is_empty() || (remaining as u128).pow(3) > n * n) {
        let v = alive
            .iter()
            .min_by_key(|&v| (alive.count_and(g.row(v)), v))
            .expect("alive set is non-empty");
        picked.push(v);
        alive.subtract(g.row(v));
        alive.remove(v);
        remaining = alive.count();
    }
    picked.sort_unstable();
    VertexSet::from_sorted(picked)
}

/// First independent size-`k` subset in binary-counter order.
pub fn first_independent_k_subset(g: &Graph, k: usize) -> Option<VertexSet> {
    let mut subsets = KSubsets::new(g.n(), k);
    while subsets.advance() {
        let s = subsets.current();
        let independent = s
            .iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        if independent {
            return Some(VertexSet::from_sorted(s.to_vec()));
        }
    }
    None
}

/// Exact answer to "does `g` contain an independent set of size `k`?", with witness.
///
/// `k = 0` is a yes with an empty witness; `k > n` is a no.
pub fn decide_k_independent(g: &Graph, k: usize, p: f64, epsilon: f64) -> Result<DecideOutcome> {
    check_rates(p, epsilon)?;
    let n = g.n();
    if k == 0 {
        return Ok(DecideOutcome {
            witness: Some(VertexSet::empty()),
            path: DecidePath::GreedySuccess,
        });
    }
    if k > n {
        return Ok(DecideOutcome {
            witness: None,
            path: DecidePath::LargeKEnumeration,
        });
    }

    if k as f64 > level_threshold(n, p, epsilon)? {
        return Ok(DecideOutcome {
            witness: first_independent_k_subset(g, k),
            path: DecidePath::LargeKEnumeration,
        });
    }

    let peeled = greedy_peel(g);
    if peeled.len() >= k {
        let witness = VertexSet::from_sorted(peeled.as_slice()[..k].to_vec());
        return Ok(DecideOutcome {
            witness: Some(witness),
            path: DecidePath::GreedySuccess,
        });
    }
    Ok(DecideOutcome {
        witness: first_independent_k_subset(g, k),
        path: DecidePath::GreedyFailEnumeration,
    })
}

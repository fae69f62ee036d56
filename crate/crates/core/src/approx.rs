//! Block-partition approximation of the maximum independent set.
//!
//! Vertices are cut into consecutive blocks of `k = floor(2^sqrt(log2 n))`,
//! each block is solved exactly with the branching solver, and the largest
//! block optimum is returned. One block must hold at least `OPT / l` vertices
//! of any optimum, where `l` is the block count.

use crate::error::{Error, Result};
use crate::exact::{max_independent_set, BranchStats, EpsilonConfig};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxResult {
    /// Independent in the full graph, in original indices.
    pub chosen: VertexSet,
    pub block_count: usize,
    pub block_size: usize,
    /// Index of the block whose optimum was returned.
    pub best_block: usize,
    /// `2n / 2^sqrt(log2 n)`, the guaranteed `OPT / APX` for large `n`.
    pub ratio_bound: f64,
    /// Branching counters summed over all blocks.
    pub stats: BranchStats,
}

/// `floor(2^sqrt(log2 n))`, never below 1.
pub fn block_size(n: usize) -> usize {
    if n <= 1 {
        return 1;
    }
    let k = (n as f64).log2().sqrt().exp2().floor() as usize;
    k.max(1)
}

pub fn ratio_bound(n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    2.0 * n as f64 / (n as f64).log2().sqrt().exp2()
}

/// Consecutive index ranges `[0, k), [k, 2k), ...`; only the last may be short.
pub fn partition_blocks(g: &Graph) -> Vec<VertexSet> {
    partition_with(g.n(), block_size(g.n()))
}

fn partition_with(n: usize, k: usize) -> Vec<VertexSet> {
    (0..n)
        .step_by(k)
        .map(|start| VertexSet::range(start..(start + k).min(n)))
        .collect()
}

pub fn approx_mis(g: &Graph, p: f64, cfg: &EpsilonConfig) -> Result<ApproxResult> {
    cfg.validate(p)?;
    let n = g.n();
    let k = block_size(n);
    let blocks = partition_with(n, k);

    let mut stats = BranchStats::default();
    let mut best: Option<(usize, VertexSet)> = None;
    for (i, block) in blocks.iter().enumerate() {
        let sub = g.induced(block)?;
        let (local, block_stats) = max_independent_set(&sub, p, cfg).map_err(|e| Error::Block {
            block: i,
            source: Box::new(e),
        })?;
        stats.merge(&block_stats);
        if best.as_ref().is_none_or(|(_, b)| local.len() > b.len()) {
            let members = block.as_slice();
            let mapped = VertexSet::from_sorted(local.iter().map(|v| members[v]).collect());
            best = Some((i, mapped));
        }
    }

    let (best_block, chosen) = best.unwrap_or_default();
    Ok(ApproxResult {
        chosen,
        block_count: blocks.len(),
        block_size: k,
        best_block,
        ratio_bound: ratio_bound(n),
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::BudgetSite;

    #[test]
    fn block_size_examples() {
        assert_eq!(block_size(16), 4);
        assert_eq!(block_size(1), 1);
        // 2^sqrt(8) = 2^2.8284... = 7.10
        assert_eq!(block_size(256), 7);
        assert_eq!(block_size(512), 8);
    }

    #[test]
    fn partition_examples() {
        let blocks = partition_with(10, 4);
        let as_vecs: Vec<_> = blocks.iter().map(|b| b.as_slice().to_vec()).collect();
        assert_eq!(
            as_vecs,
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9]]
        );
        assert_eq!(partition_with(4, 4).len(), 1);
        let blocks = partition_blocks(&Graph::new(16));
        assert_eq!(blocks.len(), 4);
        assert!(blocks.iter().all(|b| b.len() == 4));
    }

    #[test]
    fn edgeless_and_complete() {
        let cfg = EpsilonConfig::for_probability(0.5);
        let r = approx_mis(&Graph::new(16), 0.5, &cfg).unwrap();
        assert_eq!(r.chosen.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(r.best_block, 0);
        assert_eq!(r.block_count, 4);

        let r = approx_mis(&Graph::complete(16), 0.5, &cfg).unwrap();
        assert_eq!(r.chosen.len(), 1);
    }

    #[test]
    fn later_block_wins_only_when_strictly_larger() {
        // Block 0 = K4, block 1 edgeless: block 1 must win.
        let mut g = Graph::new(16);
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v).unwrap();
            }
        }
        let r = approx_mis(&g, 0.5, &EpsilonConfig::for_probability(0.5)).unwrap();
        assert_eq!(r.best_block, 1);
        assert_eq!(r.chosen.as_slice(), &[4, 5, 6, 7]);
    }

    #[test]
    fn budget_errors_name_the_block() {
        // n = 4096 gives blocks of 2^sqrt(12) = 11; cap 10 forces the edgeless fallback over budget.
        let cfg = EpsilonConfig::new(0.1, 10);
        let err = approx_mis(&Graph::new(4096), 0.5, &cfg).unwrap_err();
        assert!(err.is_budget());
        match err {
            Error::Block { block: 0, source } => {
                assert!(matches!(
                    *source,
                    Error::Budget {
                        site: BudgetSite::Fallback,
                        size: 11,
                        cap: 10
                    }
                ))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ratio_bound_values() {
        assert_eq!(ratio_bound(16), 8.0);
        assert_eq!(ratio_bound(0), 0.0);
    }
}

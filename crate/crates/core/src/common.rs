//! Largest common induced subgraph of two graphs.
//!
//! Every search here checks isomorphism only under explicit vertex mappings:
//! subsets of `G` and of `H` in binary-counter order, then bijections between
//! them in lexicographic permutation order. The first hit is the witness, so
//! results are replayable.

use crate::error::{BudgetSite, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subsets::{next_permutation, KSubsets};

pub const DEFAULT_LCS_CAP: usize = 8;

/// Bijection between a vertex set of `G` and one of `H`, stored as `(g, h)` pairs sorted by `g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mapping {
    pairs: Vec<(usize, usize)>,
}

impl Mapping {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidMapping(format!(
                "vertex {} mapped twice",
                w[0].0
            )));
        }
        let mut images: Vec<usize> = pairs.iter().map(|&(_, h)| h).collect();
        images.sort_unstable();
        if let Some(w) = images.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidMapping(format!("vertex {} hit twice", w[0])));
        }
        Ok(Self { pairs })
    }

    /// Identity on `0..k`.
    pub fn identity(k: usize) -> Self {
        Self {
            pairs: (0..k).map(|v| (v, v)).collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(g, h)| (h, g)).collect();
        pairs.sort_unstable();
        Self { pairs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcsPath {
    Bruteforce,
    ThresholdHitStep4,
    ThresholdDescentStep5,
}

impl LcsPath {
    pub fn as_str(self) -> &'static str {
        match self {
            LcsPath::Bruteforce => "bruteforce",
            LcsPath::ThresholdHitStep4 => "threshold_hit_step4",
            LcsPath::ThresholdDescentStep5 => "threshold_descent_step5",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonSubgraphResult {
    pub size: usize,
    pub s1: VertexSet,
    pub s2: VertexSet,
    pub mapping: Mapping,
    pub path: LcsPath,
}

impl CommonSubgraphResult {
    fn empty(path: LcsPath) -> Self {
        Self {
            size: 0,
            s1: VertexSet::empty(),
            s2: VertexSet::empty(),
            mapping: Mapping::default(),
            path,
        }
    }

    fn swapped(self) -> Self {
        Self {
            size: self.size,
            s1: self.s2,
            s2: self.s1,
            mapping: self.mapping.inverse(),
            path: self.path,
        }
    }
}

/// True iff `m` carries `g[s1]` onto `h[s2]` edge for edge and non-edge for non-edge.
pub fn iso_under_mapping(
    g: &Graph,
    s1: &VertexSet,
    h: &Graph,
    s2: &VertexSet,
    m: &Mapping,
) -> Result<bool> {
    s1.check_host(g.n())?;
    s2.check_host(h.n())?;
    let domain: Vec<usize> = m.pairs.iter().map(|&(u, _)| u).collect();
    if domain != s1.as_slice() {
        return Err(Error::InvalidMapping(format!(
            "domain {domain:?} differs from {:?}",
            s1.as_slice()
        )));
    }
    let mut image: Vec<usize> = m.pairs.iter().map(|&(_, v)| v).collect();
    image.sort_unstable();
    if image != s2.as_slice() {
        return Err(Error::InvalidMapping(format!(
            "image {image:?} differs from {:?}",
            s2.as_slice()
        )));
    }
    let pairs = &m.pairs;
    Ok(pairs.iter().enumerate().all(|(i, &(u, mu))| {
        pairs[i + 1..]
            .iter()
            .all(|&(v, mv)| g.has_edge(u, v) == h.has_edge(mu, mv))
    }))
}

/// First `(S1, S2, bijection)` of size `l` in enumeration order that is an isomorphism.
fn find_common_of_size(
    g: &Graph,
    h: &Graph,
    l: usize,
) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let mut left = KSubsets::new(g.n(), l);
    while left.advance() {
        let s1 = left.current();
        let mut right = KSubsets::new(h.n(), l);
        while right.advance() {
            let s2 = right.current();
            let mut perm: Vec<usize> = (0..l).collect();
            loop {
                let preserves = (0..l).all(|i| {
                    (i + 1..l)
                        .all(|j| g.has_edge(s1[i], s1[j]) == h.has_edge(s2[perm[i]], s2[perm[j]]))
                });
                if preserves {
                    return Some((s1.to_vec(), s2.to_vec(), perm));
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    None
}

fn result_from(
    s1: Vec<usize>,
    s2: Vec<usize>,
    perm: Vec<usize>,
    path: LcsPath,
) -> CommonSubgraphResult {
    let pairs = s1.iter().zip(&perm).map(|(&u, &i)| (u, s2[i])).collect();
    CommonSubgraphResult {
        size: s1.len(),
        s1: VertexSet::from_sorted(s1),
        s2: VertexSet::from_sorted(s2),
        mapping: Mapping { pairs },
        path,
    }
}

fn search_descending(g: &Graph, h: &Graph, from: usize, path: LcsPath) -> CommonSubgraphResult {
    (1..=from)
        .rev()
        .find_map(|l| find_common_of_size(g, h, l))
        .map(|(s1, s2, perm)| result_from(s1, s2, perm, path))
        .unwrap_or_else(|| CommonSubgraphResult::empty(path))
}

/// Largest common induced subgraph by trying sizes from `min(n, m)` down to 1.
pub fn lcs_bruteforce(g: &Graph, h: &Graph, cap: usize) -> Result<CommonSubgraphResult> {
    let smaller = g.n().min(h.n());
    if smaller > cap {
        return Err(Error::Budget {
            site: BudgetSite::CommonSubgraph,
            size: smaller,
            cap,
        });
    }
    Ok(search_descending(g, h, smaller, LcsPath::Bruteforce))
}

/// `ceil(sqrt(n) * log2(n)^(2/3))`, at least 1: the size probed before any full search.
pub fn probe_size(n: usize) -> usize {
    let n = n as f64;
    let k = (n.sqrt() * n.log2().powf(2.0 / 3.0)).ceil();
    (k as usize).max(1)
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie in (0, 1), got {p}"
        )));
    }
    Ok(())
}

/// Largest common induced subgraph via a size-`k` probe.
///
/// With `n >= m` and `k = probe_size(n)`: if `m <= k` the full search runs
/// directly. Otherwise all size-`k` candidates are tried; a hit means the
/// graphs are unusually similar and the full search runs (step 4), a miss
/// means the answer is below `k` and sizes `k - 1, ..., 1` are searched
/// (step 5). Inputs with `n < m` are swapped and the result swapped back.
/// `p` and `q` only describe the inputs; they do not steer the search.
pub fn lcs_main(g: &Graph, h: &Graph, p: f64, q: f64, cap: usize) -> Result<CommonSubgraphResult> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    if g.n() < h.n() {
        return lcs_main(h, g, q, p, cap).map(CommonSubgraphResult::swapped);
    }
    let (n, m) = (g.n(), h.n());
    let k = probe_size(n);
    if m <= k {
        return lcs_bruteforce(g, h, cap);
    }
    if find_common_of_size(g, h, k).is_some() {
        let mut res = lcs_bruteforce(g, h, cap).map_err(|e| match e {
            Error::Budget { size, cap, .. } => Error::Budget {
                site: BudgetSite::CommonSubgraphStep4,
                size,
                cap,
            },
            other => other,
        })?;
        res.path = LcsPath::ThresholdHitStep4;
        return Ok(res);
    }
    Ok(search_descending(
        g,
        h,
        k - 1,
        LcsPath::ThresholdDescentStep5,
    ))
}

/// Probability that two independent random graphs on `k` vertices with edge
/// probabilities `p` and `q` agree on every pair under a fixed bijection:
/// `s^(k(k-1)/2)` with `s = pq + (1-p)(1-q)`.
pub fn pair_iso_probability(p: f64, q: f64, k: usize) -> f64 {
    agreement(p, q).powf(pairs(k))
}

fn agreement(p: f64, q: f64) -> f64 {
    p * q + (1.0 - p) * (1.0 - q)
}

fn pairs(k: usize) -> f64 {
    (k * k.saturating_sub(1) / 2) as f64
}

/// Union bound `n^k m^k s^(k(k-1)/2)` on the probability of a size-`k`
/// common induced subgraph. Not capped at 1.
pub fn common_size_union_bound(n: usize, m: usize, k: usize, p: f64, q: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let s = agreement(p, q);
    let kf = k as f64;
    let direct = (n as f64).powf(kf) * (m as f64).powf(kf) * s.powf(pairs(k));
    if direct.is_finite() && direct > 0.0 {
        return direct;
    }
    // Overflow or underflow in the direct product; go through logarithms.
    (kf * (n as f64).ln() + kf * (m as f64).ln() + pairs(k) * s.ln()).exp()
}

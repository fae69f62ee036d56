use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approx::approx_mis;
use crate::common::{lcs_main, DEFAULT_LCS_CAP};
use crate::decide::{decide_k_independent, greedy_peel};
use crate::error::{Error, Result};
use crate::exact::{
    brute_force_mis, default_epsilon, max_independent_set, mis_recursive_oracle, EpsilonConfig,
    DEFAULT_BRUTE_FORCE_CAP,
};
use crate::graph::{Graph, GraphSpec};
use crate::rng::derive_seed;

pub const BUDGET_EXCEEDED: &str = "budget_exceeded";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algo {
    /// Degree-threshold branching.
    Exact,
    /// Subset enumeration.
    Brute,
    /// Include/exclude recursion.
    Oracle,
    Approx,
    Greedy,
    Decide,
    Lcs,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Brute => "brute",
            Algo::Oracle => "oracle",
            Algo::Approx => "approx",
            Algo::Greedy => "greedy",
            Algo::Decide => "decide",
            Algo::Lcs => "lcs",
        }
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" | "branch" => Algo::Exact,
            "brute" => Algo::Brute,
            "oracle" => Algo::Oracle,
            "approx" => Algo::Approx,
            "greedy" => Algo::Greedy,
            "decide" => Algo::Decide,
            "lcs" => Algo::Lcs,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown algorithm {other:?}"
                )))
            }
        })
    }
}

/// One CSV row. Columns are fixed in declaration order; `None` is written as an empty field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub algo: String,
    pub n: usize,
    pub m: Option<usize>,
    pub p: f64,
    pub q: Option<f64>,
    pub seed: u64,
    pub epsilon: Option<f64>,
    pub result_size: Option<usize>,
    pub nodes_expanded: Option<u64>,
    pub fallbacks: Option<u64>,
    pub path_taken: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub ns: Vec<usize>,
    pub ps: Vec<f64>,
    pub seeds: Vec<u64>,
    pub algos: Vec<Algo>,
    /// `None` picks `min(p, 1 - p) / 2` per instance.
    pub epsilon: Option<f64>,
    pub brute_force_cap: usize,
    pub lcs_cap: usize,
    /// Size of the second graph for `lcs`; defaults to `n`.
    pub m: Option<usize>,
    /// Edge probability of the second graph for `lcs`; defaults to `p`.
    pub q: Option<f64>,
    /// Target size for `decide`; required when `decide` is selected.
    pub k: Option<usize>,
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ns: Vec::new(),
            ps: Vec::new(),
            seeds: Vec::new(),
            algos: Vec::new(),
            epsilon: None,
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            lcs_cap: DEFAULT_LCS_CAP,
            m: None,
            q: None,
            k: None,
            threads: None,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if let Some(p) = self.ps.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(Error::InvalidProbability(*p));
        }
        if self.algos.contains(&Algo::Decide) && self.k.is_none() {
            return Err(Error::InvalidParameter("decide needs k".into()));
        }
        Ok(())
    }
}

struct Outcome {
    result_size: usize,
    nodes_expanded: Option<u64>,
    fallbacks: Option<u64>,
    path: &'static str,
}

impl Outcome {
    fn plain(result_size: usize, path: &'static str) -> Self {
        Self {
            result_size,
            nodes_expanded: None,
            fallbacks: None,
            path,
        }
    }
}

fn run_one(cfg: &SweepConfig, algo: Algo, n: usize, p: f64, seed: u64) -> Result<ExperimentRecord> {
    let g = Graph::generate(&GraphSpec::new(n, p, seed))?;
    let epsilon = cfg.epsilon.unwrap_or_else(|| default_epsilon(p));
    let eps_cfg = EpsilonConfig::new(epsilon, cfg.brute_force_cap);
    let (m, q) = match algo {
        Algo::Lcs => (Some(cfg.m.unwrap_or(n)), Some(cfg.q.unwrap_or(p))),
        _ => (None, None),
    };
    let uses_epsilon = matches!(algo, Algo::Exact | Algo::Approx | Algo::Decide);

    let start = Instant::now();
    let outcome: Result<Outcome> = match algo {
        Algo::Exact => max_independent_set(&g, p, &eps_cfg).map(|(s, st)| Outcome {
            result_size: s.len(),
            nodes_expanded: Some(st.nodes_expanded),
            fallbacks: Some(st.fallback_invocations),
            path: "branch",
        }),
        Algo::Brute => {
            brute_force_mis(&g, cfg.brute_force_cap).map(|s| Outcome::plain(s.len(), "bruteforce"))
        }
        Algo::Oracle => {
            mis_recursive_oracle(&g, cfg.brute_force_cap).map(|a| Outcome::plain(a, "oracle"))
        }
        Algo::Approx => approx_mis(&g, p, &eps_cfg).map(|r| Outcome {
            result_size: r.chosen.len(),
            nodes_expanded: Some(r.stats.nodes_expanded),
            fallbacks: Some(r.stats.fallback_invocations),
            path: "block_partition",
        }),
        Algo::Greedy => Ok(Outcome::plain(greedy_peel(&g).len(), "greedy_peel")),
        Algo::Decide => {
            let k = cfg.k.unwrap_or(0);
            decide_k_independent(&g, k, p, epsilon)
                .map(|d| Outcome::plain(d.witness.as_ref().map_or(0, |w| w.len()), d.path.as_str()))
        }
        Algo::Lcs => {
            let (m, q) = (m.unwrap_or(n), q.unwrap_or(p));
            Graph::generate(&GraphSpec::new(m, q, derive_seed(seed, 1)))
                .and_then(|h| lcs_main(&g, &h, p, q, cfg.lcs_cap))
                .map(|r| Outcome::plain(r.size, r.path.as_str()))
        }
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;

    let base = ExperimentRecord {
        algo: algo.name().to_string(),
        n,
        m,
        p,
        q,
        seed,
        epsilon: uses_epsilon.then_some(epsilon),
        result_size: None,
        nodes_expanded: None,
        fallbacks: None,
        path_taken: BUDGET_EXCEEDED.to_string(),
        elapsed_ms,
    };
    match outcome {
        Ok(o) => Ok(ExperimentRecord {
            result_size: Some(o.result_size),
            nodes_expanded: o.nodes_expanded,
            fallbacks: o.fallbacks,
            path_taken: o.path.to_string(),
            ..base
        }),
        Err(e) if e.is_budget() => Ok(base),
        Err(e) => Err(e),
    }
}

/// Runs every `(algo, n, p, seed)` combination and returns the records sorted
/// by `(algo, n, p, seed)`. Budget overruns become `budget_exceeded` rows.
pub fn run_experiment(cfg: &SweepConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let mut jobs = Vec::new();
    for &algo in &cfg.algos {
        for &n in &cfg.ns {
            for &p in &cfg.ps {
                for &seed in &cfg.seeds {
                    jobs.push((algo, n, p, seed));
                }
            }
        }
    }

    let run = || -> Result<Vec<ExperimentRecord>> {
        jobs.par_iter()
            .map(|&(algo, n, p, seed)| run_one(cfg, algo, n, p, seed))
            .collect()
    };
    let mut records = match cfg.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    records.sort_by(|a, b| {
        a.algo
            .cmp(&b.algo)
            .then(a.n.cmp(&b.n))
            .then(a.p.total_cmp(&b.p))
            .then(a.seed.cmp(&b.seed))
    });
    Ok(records)
}

pub fn write_records<W: Write>(out: W, records: &[ExperimentRecord]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    if records.is_empty() {
        // serde only emits the header alongside the first row.
        w.write_record([
            "algo",
            "n",
            "m",
            "p",
            "q",
            "seed",
            "epsilon",
            "result_size",
            "nodes_expanded",
            "fallbacks",
            "path_taken",
            "elapsed_ms",
        ])?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_records<R: Read>(input: R) -> Result<Vec<ExperimentRecord>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize()
        .map(|row| row.map_err(Error::from))
        .collect()
}

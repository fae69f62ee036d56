use rayon::prelude::*;

use crate::common::{iso_under_mapping, pair_iso_probability, Mapping};
use crate::error::{Error, Result};
use crate::exact::find_good_vertex;
use crate::graph::{Graph, GraphSpec};
use crate::rng::derive_seed;

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloReport {
    pub quantity: String,
    pub trials: usize,
    pub observed: f64,
    pub predicted: f64,
    pub std_error: f64,
}

impl MonteCarloReport {
    fn new(quantity: &str, trials: usize, hits: usize, predicted: f64) -> Self {
        let observed = hits as f64 / trials as f64;
        // Binomial standard error under the prediction when it is informative.
        let basis = if predicted > 0.0 && predicted < 1.0 {
            predicted
        } else {
            observed
        };
        Self {
            quantity: quantity.to_string(),
            trials,
            observed,
            predicted,
            std_error: (basis * (1.0 - basis) / trials as f64).sqrt(),
        }
    }

    /// Distance between observed and predicted, in standard errors.
    pub fn z_score(&self) -> f64 {
        (self.observed - self.predicted).abs() / self.std_error
    }
}

fn check_trials(trials: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    Ok(())
}

/// Trial `t` uses seed `base + t`, so results do not depend on scheduling.
fn count_hits(trials: usize, seed: u64, hit: impl Fn(u64) -> Result<bool> + Sync) -> Result<usize> {
    (0..trials as u64)
        .into_par_iter()
        .map(|t| hit(seed.wrapping_add(t)).map(usize::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

/// Fraction of `G(n, p)` samples with a vertex of degree at least `(p - epsilon) n`.
pub fn mc_good_fraction(
    n: usize,
    p: f64,
    epsilon: f64,
    trials: usize,
    seed: u64,
) -> Result<MonteCarloReport> {
    check_trials(trials)?;
    if !(epsilon > 0.0 && epsilon < p && p <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < epsilon < p <= 1, got epsilon = {epsilon}, p = {p}"
        )));
    }
    let hits = count_hits(trials, seed, |s| {
        let g = Graph::generate(&GraphSpec::new(n, p, s))?;
        Ok(find_good_vertex(&g, p, epsilon).is_some())
    })?;
    Ok(MonteCarloReport::new(
        "good_vertex_fraction",
        trials,
        hits,
        1.0,
    ))
}

/// Fraction of `G(n, p)` samples with a vertex of degree at most `(p + epsilon) n`.
pub fn mc_min_degree_fraction(
    n: usize,
    p: f64,
    epsilon: f64,
    trials: usize,
    seed: u64,
) -> Result<MonteCarloReport> {
    check_trials(trials)?;
    if !(epsilon > 0.0 && (0.0..=1.0).contains(&p) && p + epsilon < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "need epsilon > 0 and p + epsilon < 1, got p = {p}, epsilon = {epsilon}"
        )));
    }
    let limit = (p + epsilon) * n as f64;
    let hits = count_hits(trials, seed, |s| {
        let g = Graph::generate(&GraphSpec::new(n, p, s))?;
        Ok((0..n).any(|v| g.degree(v) as f64 <= limit))
    })?;
    Ok(MonteCarloReport::new(
        "min_degree_fraction",
        trials,
        hits,
        1.0,
    ))
}

/// Frequency with which independent `G(k, p)` and `G(k, q)` samples agree on
/// every pair under the identity mapping.
pub fn mc_mapping_iso_rate(
    k: usize,
    p: f64,
    q: f64,
    trials: usize,
    seed: u64,
) -> Result<MonteCarloReport> {
    check_trials(trials)?;
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "mapping rate needs k >= 2, got {k}"
        )));
    }
    let identity = Mapping::identity(k);
    let hits = count_hits(trials, seed, |s| {
        let g = Graph::generate(&GraphSpec::new(k, p, s))?;
        let h = Graph::generate(&GraphSpec::new(k, q, derive_seed(s, 1)))?;
        iso_under_mapping(&g, &g.vertices(), &h, &h.vertices(), &identity)
    })?;
    Ok(MonteCarloReport::new(
        "identity_mapping_iso_rate",
        trials,
        hits,
        pair_iso_probability(p, q, k),
    ))
}

//! Experiment sweeps, CSV records and Monte Carlo checks of the finite-size
//! behavior the algorithms rely on.

mod montecarlo;
mod sweep;

pub use montecarlo::{
    mc_good_fraction, mc_mapping_iso_rate, mc_min_degree_fraction, MonteCarloReport,
};
pub use sweep::{read_records, run_experiment, write_records, Algo, ExperimentRecord, SweepConfig};

/// Typical independence number of `G(n, p)`: `2 log2(n) / log2(1 / (1 - p))`.
pub fn theoretical_mis_size(n: usize, p: f64) -> f64 {
    2.0 * (n as f64).log2() / (1.0 / (1.0 - p)).log2()
}

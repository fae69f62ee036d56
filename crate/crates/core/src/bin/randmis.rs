use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use randmis::approx::approx_mis;
use randmis::common::{lcs_bruteforce, lcs_main, DEFAULT_LCS_CAP};
use randmis::decide::decide_k_independent;
use randmis::exact::{
    brute_force_mis, default_epsilon, max_independent_set, mis_recursive_oracle, EpsilonConfig,
    DEFAULT_BRUTE_FORCE_CAP,
};
use randmis::harness::{
    mc_good_fraction, mc_mapping_iso_rate, mc_min_degree_fraction, run_experiment, write_records,
    Algo, MonteCarloReport, SweepConfig,
};
use randmis::rng::derive_seed;
use randmis::{Error, Graph, GraphSpec, VertexSet};

#[derive(Parser)]
#[command(
    name = "randmis",
    version,
    about = "Independent-set algorithms on Erdős–Rényi random graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate G(n, p) and print it as an edge list.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum independent set.
    Mis {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value_t = MisAlgo::Branch)]
        algo: MisAlgo,
    },
    /// Decide whether an independent set of size k exists.
    Decide {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        k: usize,
    },
    /// Largest common induced subgraph of G(n, p) and H(m, q).
    Lcs {
        #[command(flatten)]
        graph: GraphArgs,
        /// Edge list for the second graph; otherwise it is generated from --m, --q.
        #[arg(long)]
        input_h: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_LCS_CAP)]
        cap: usize,
        /// Run the full enumeration directly instead of the size-k probe.
        #[arg(long)]
        brute: bool,
    },
    /// Block-partition approximation.
    Approx {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Monte Carlo checks of degree and mapping statistics.
    Mc {
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long, default_value_t = 64)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        /// Subgraph size for the mapping-rate check.
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run every (algo, n, p, seed) combination and write CSV.
    Sweep {
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Comma-separated edge probabilities.
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        p: Vec<f64>,
        /// First seed; trial t uses seed + t.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        /// Comma-separated algorithms: exact, brute, oracle, approx, greedy, decide, lcs.
        #[arg(long, value_delimiter = ',', default_value = "exact")]
        algo: Vec<String>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_LCS_CAP)]
        lcs_cap: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Read the graph from an edge-list file instead of generating it.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 32)]
    n: usize,
    /// Edge probability, used for generation and as the solvers' model parameter.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph, CliError> {
        match &self.input {
            Some(path) => read_graph(path),
            None => Ok(Graph::generate(&GraphSpec::new(self.n, self.p, self.seed))?),
        }
    }
}

#[derive(Args)]
struct SolverArgs {
    /// Defaults to min(p, 1 - p) / 2.
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    cap: usize,
}

impl SolverArgs {
    fn epsilon(&self, p: f64) -> f64 {
        self.epsilon.unwrap_or_else(|| default_epsilon(p))
    }

    fn config(&self, p: f64) -> EpsilonConfig {
        EpsilonConfig::new(self.epsilon(p), self.cap)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MisAlgo {
    Branch,
    Brute,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Quantity {
    /// Fraction of graphs with a vertex of degree >= (p - epsilon) n.
    Good,
    /// Fraction of graphs with a vertex of degree <= (p + epsilon) n.
    MinDegree,
    /// Identity-mapping isomorphism rate of G(k, p) vs G(k, q).
    Iso,
}

enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Lib(Error::Io(e))
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Graph::from_edge_list(&text)?)
}

fn fmt_set(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_report(out: &mut impl Write, r: &MonteCarloReport) -> io::Result<()> {
    writeln!(out, "quantity {}", r.quantity)?;
    writeln!(out, "trials {}", r.trials)?;
    writeln!(out, "observed {}", r.observed)?;
    writeln!(out, "predicted {}", r.predicted)?;
    writeln!(out, "std_error {}", r.std_error)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Gen { graph, out: path } => {
            let text = graph.load()?.to_edge_list();
            match path {
                Some(path) => fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Mis {
            graph,
            solver,
            algo,
        } => {
            let g = graph.load()?;
            match algo {
                MisAlgo::Branch => {
                    let (s, st) = max_independent_set(&g, graph.p, &solver.config(graph.p))?;
                    writeln!(out, "size {}", s.len())?;
                    writeln!(out, "set {}", fmt_set(&s))?;
                    writeln!(out, "nodes_expanded {}", st.nodes_expanded)?;
                    writeln!(out, "fallbacks {}", st.fallback_invocations)?;
                    writeln!(out, "max_depth {}", st.max_depth)?;
                    writeln!(out, "good_vertex_checks {}", st.good_vertex_checks)?;
                }
                MisAlgo::Brute => {
                    let s = brute_force_mis(&g, solver.cap)?;
                    writeln!(out, "size {}", s.len())?;
                    writeln!(out, "set {}", fmt_set(&s))?;
                }
                MisAlgo::Oracle => {
                    writeln!(out, "size {}", mis_recursive_oracle(&g, solver.cap)?)?;
                }
            }
        }
        Command::Decide { graph, solver, k } => {
            let g = graph.load()?;
            let d = decide_k_independent(&g, k, graph.p, solver.epsilon(graph.p))?;
            writeln!(out, "answer {}", if d.answer() { "yes" } else { "no" })?;
            if let Some(w) = &d.witness {
                writeln!(out, "witness {}", fmt_set(w))?;
            }
            writeln!(out, "path {}", d.path.as_str())?;
        }
        Command::Lcs {
            graph,
            input_h,
            m,
            q,
            cap,
            brute,
        } => {
            let g = graph.load()?;
            let q = q.unwrap_or(graph.p);
            let h = match input_h {
                Some(path) => read_graph(&path)?,
                None => Graph::generate(&GraphSpec::new(
                    m.unwrap_or(g.n()),
                    q,
                    derive_seed(graph.seed, 1),
                ))?,
            };
            let r = if brute {
                lcs_bruteforce(&g, &h, cap)?
            } else {
                lcs_main(&g, &h, graph.p, q, cap)?
            };
            writeln!(out, "size {}", r.size)?;
            writeln!(out, "s1 {}", fmt_set(&r.s1))?;
            writeln!(out, "s2 {}", fmt_set(&r.s2))?;
            let pairs: Vec<String> = r
                .mapping
                .pairs()
                .iter()
                .map(|(a, b)| format!("{a}->{b}"))
                .collect();
            writeln!(out, "mapping {}", pairs.join(" "))?;
            writeln!(out, "path {}", r.path.as_str())?;
        }
        Command::Approx { graph, solver } => {
            let g = graph.load()?;
            let r = approx_mis(&g, graph.p, &solver.config(graph.p))?;
            writeln!(out, "size {}", r.chosen.len())?;
            writeln!(out, "set {}", fmt_set(&r.chosen))?;
            writeln!(out, "block_size {}", r.block_size)?;
            writeln!(out, "block_count {}", r.block_count)?;
            writeln!(out, "best_block {}", r.best_block)?;
            writeln!(out, "ratio_bound {}", r.ratio_bound)?;
        }
        Command::Mc {
            quantity,
            n,
            p,
            q,
            epsilon,
            k,
            trials,
            seed,
            threads,
        } => {
            let eps = epsilon.unwrap_or_else(|| default_epsilon(p));
            let compute = || match quantity {
                Quantity::Good => mc_good_fraction(n, p, eps, trials, seed),
                Quantity::MinDegree => mc_min_degree_fraction(n, p, eps, trials, seed),
                Quantity::Iso => mc_mapping_iso_rate(k, p, q.unwrap_or(p), trials, seed),
            };
            let report = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| CliError::Usage(e.to_string()))?
                    .install(compute)?,
                None => compute()?,
            };
            print_report(&mut out, &report)?;
        }
        Command::Sweep {
            n,
            p,
            seed,
            trials,
            algo,
            epsilon,
            cap,
            lcs_cap,
            k,
            m,
            q,
            out: path,
            threads,
        } => {
            let algos = algo
                .iter()
                .map(|a| a.parse::<Algo>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let cfg = SweepConfig {
                ns: n,
                ps: p,
                seeds: (0..trials).map(|t| seed.wrapping_add(t)).collect(),
                algos,
                epsilon,
                brute_force_cap: cap,
                lcs_cap,
                m,
                q,
                k,
                threads,
            };
            let records = run_experiment(&cfg)?;
            match path {
                Some(path) => write_records(fs::File::create(path)?, &records)?,
                None => write_records(&mut out, &records)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Lib(e)) if e.is_budget() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

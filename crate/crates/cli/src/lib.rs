//! Command implementations behind the `alphasun` binary.

// `!(x > 0.0)` guards also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::path::PathBuf;

use alphasun_core::{Params, Precision};
use clap::{Args, Parser, Subcommand};

mod commands;
mod table;

pub use commands::{cmd_bounds, cmd_coeffs, cmd_density, cmd_figures, cmd_verify};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("numerical failure: {0}")]
    Numerical(#[from] alphasun_core::Error),
    #[error("{0} verification check(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Config(_) | CliError::Io { .. } => 2,
            CliError::Numerical(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Coeffs,
    Bounds,
    Figures,
    Density,
    Verify,
}

/// Inclusive `start:stop:step` grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn parse(s: &str) -> CliResult<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || CliError::Config(format!("grid must look like start:stop:step, got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let v: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let g = Grid {
            start: v[0],
            stop: v[1],
            step: v[2],
        };
        if !(g.step > 0.0) || !(g.stop >= g.start) || !g.start.is_finite() || !g.stop.is_finite() {
            return Err(CliError::Config(format!("grid {s:?} needs step > 0 and stop >= start")));
        }
        Ok(g)
    }

    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| {
                let v = self.start + i as f64 * self.step;
                (v * 1e12).round() / 1e12
            })
            .collect()
    }
}

/// Everything a subcommand needs, validated.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub alpha: f64,
    pub gamma: f64,
    pub alpha_grid: Grid,
    pub gamma_list: Vec<f64>,
    pub n_max: usize,
    pub m_max: usize,
    pub k: usize,
    pub j: usize,
    pub x_grid: Vec<f64>,
    pub out: Option<PathBuf>,
    pub rel_tol: Option<f64>,
    pub threads: Option<usize>,
    pub suite: Option<String>,
}

pub const FIGURE_GAMMAS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            alpha: 0.3,
            gamma: 1.0,
            alpha_grid: Grid {
                start: 0.0,
                stop: 0.95,
                step: 0.01,
            },
            gamma_list: vec![0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0],
            n_max: 20,
            m_max: 20,
            k: 10_000,
            j: 1000,
            x_grid: Grid {
                start: 0.1,
                stop: 6.0,
                step: 0.1,
            }
            .points(),
            out: None,
            rel_tol: None,
            threads: None,
            suite: None,
        }
    }

    pub fn validate(&self) -> CliResult<()> {
        let cfg = |m: String| Err(CliError::Config(m));
        self.params()?;
        let g = self.alpha_grid;
        if g.start < 0.0 || g.stop > 0.99 {
            return cfg(format!("alpha grid must lie in [0, 0.99], got {}:{}", g.start, g.stop));
        }
        if self.gamma_list.is_empty() || self.gamma_list.iter().any(|g| !(*g > 0.0 && g.is_finite())) {
            return cfg("gamma list needs positive values".into());
        }
        if self.n_max == 0 || self.n_max > 200 {
            return cfg(format!("n-max must be in 1..=200, got {}", self.n_max));
        }
        if self.m_max == 0 || self.m_max > 64 {
            return cfg(format!("m-max must be in 1..=64, got {}", self.m_max));
        }
        if self.k < 1000 || self.j < 1000 {
            return cfg(format!("K and J must be at least 1000, got {} and {}", self.k, self.j));
        }
        if self.x_grid.is_empty() || self.x_grid.iter().any(|x| !(*x > 0.0 && x.is_finite())) {
            return cfg("x grid needs positive values".into());
        }
        if self.x_grid.windows(2).any(|w| !(w[1] > w[0])) {
            return cfg("x grid must be strictly increasing".into());
        }
        if let Some(t) = self.rel_tol {
            if !(t > 0.0) {
                return cfg(format!("rel-tol must be positive, got {t}"));
            }
        }
        if self.threads == Some(0) {
            return cfg("threads must be at least 1".into());
        }
        if let Some(out) = &self.out {
            let dir = if self.command == Command::Figures {
                Some(out.as_path())
            } else {
                out.parent().filter(|p| !p.as_os_str().is_empty())
            };
            if let Some(d) = dir {
                if self.command != Command::Figures && !d.is_dir() {
                    return cfg(format!("output directory {} does not exist", d.display()));
                }
            }
        }
        Ok(())
    }

    pub fn params(&self) -> CliResult<Params> {
        Params::new(self.alpha, self.gamma).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn precision(&self) -> Precision {
        Precision::machine()
    }
}

#[derive(Debug, Parser)]
#[command(name = "alphasun", version, about = "Coefficient, bound, constant and density tables")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// t, a, d and f coefficients by every route, one row per n
    Coeffs,
    /// exact t_n against its bounds, estimates and ratio limits
    Bounds,
    /// fig1.csv..fig5.csv: the small-x constant across alpha
    Figures,
    /// first-order, second-order, small-x and contour densities on an x grid
    Density,
    /// run the self-check suites
    Verify,
}

#[derive(Debug, Args)]
struct Opts {
    /// alpha in [0, 1) [default: 0.3]
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// gamma > 0 [default: 1]
    #[arg(long, global = true)]
    gamma: Option<f64>,
    /// start:stop:step [default: 0:0.95:0.01]
    #[arg(long = "alpha-grid", global = true)]
    alpha_grid: Option<String>,
    /// comma-separated gammas for fig5 [default: 0.5,0.75,...,2]
    #[arg(long = "gamma-list", global = true, value_delimiter = ',')]
    gamma_list: Option<Vec<f64>>,
    /// largest n [default: 20]
    #[arg(long = "n-max", global = true)]
    n_max: Option<usize>,
    /// largest product-expansion order [default: 20]
    #[arg(long = "m-max", global = true)]
    m_max: Option<usize>,
    /// factors in the constant's product [default: 10000]
    #[arg(long = "K", global = true)]
    k: Option<usize>,
    /// factors in the interpolated product [default: 1000]
    #[arg(long = "J", global = true)]
    j: Option<usize>,
    /// start:stop:step or a comma-separated list [default: 0.1:6:0.1]
    #[arg(long = "x-grid", global = true)]
    x_grid: Option<String>,
    /// output file (a directory for figures); stdout when omitted
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// override every verify tolerance
    #[arg(long = "rel-tol", global = true)]
    rel_tol: Option<f64>,
    /// worker threads [default: all cores]
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// run only this verify suite
    #[arg(long, global = true)]
    suite: Option<String>,
}

fn parse_x_grid(s: &str) -> CliResult<Vec<f64>> {
    if s.contains(':') {
        return Ok(Grid::parse(s)?.points());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad x value {p:?}")))
        })
        .collect()
}

fn build_config(cli: Cli) -> CliResult<RunConfig> {
    let command = match cli.command {
        Sub::Coeffs => Command::Coeffs,
        Sub::Bounds => Command::Bounds,
        Sub::Figures => Command::Figures,
        Sub::Density => Command::Density,
        Sub::Verify => Command::Verify,
    };
    let o = cli.opts;
    let mut c = RunConfig::new(command);
    if let Some(v) = o.alpha {
        c.alpha = v;
    }
    if let Some(v) = o.gamma {
        c.gamma = v;
    }
    if let Some(s) = o.alpha_grid {
        c.alpha_grid = Grid::parse(&s)?;
    }
    if let Some(v) = o.gamma_list {
        c.gamma_list = v;
    }
    if let Some(v) = o.n_max {
        c.n_max = v;
    }
    if let Some(v) = o.m_max {
        c.m_max = v;
    }
    if let Some(v) = o.k {
        c.k = v;
    }
    if let Some(v) = o.j {
        c.j = v;
    }
    if let Some(s) = o.x_grid {
        c.x_grid = parse_x_grid(&s)?;
    }
    c.out = o.out;
    c.rel_tol = o.rel_tol;
    c.threads = o.threads;
    c.suite = o.suite;
    c.validate()?;
    Ok(c)
}

/// Dispatch a validated configuration.
pub fn run(config: &RunConfig) -> CliResult<()> {
    let work = || match config.command {
        Command::Coeffs => cmd_coeffs(config),
        Command::Bounds => cmd_bounds(config),
        Command::Figures => cmd_figures(config),
        Command::Density => cmd_density(config),
        Command::Verify => cmd_verify(config),
    };
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Config(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = build_config(cli).and_then(|c| run(&c));
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("alphasun: {e}");
            e.exit_code()
        }
    }
}

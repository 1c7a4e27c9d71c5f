//! `etrans`: sweeps and table reproduction for elastic transmission eigenvalues.

mod commands;
mod config;
mod error;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use config::{Format, MeasureArg, ModeKind, Norm, RunConfig};
use error::CliError;
use table::{Meta, Table};

#[derive(Debug, Parser)]
#[command(name = "etrans", version, about = "Elastic transmission eigenvalue sweeps")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// JSON run configuration; flags override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Measure used for the energy fits.
    #[arg(long, global = true, value_enum)]
    measure: Option<MeasureArg>,
    /// Unit-norm side: v or u.
    #[arg(long, global = true, value_enum)]
    norm: Option<Norm>,
    /// Omit timestamps so identical inputs give identical bytes.
    #[arg(long, global = true)]
    reproducible: bool,
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true)]
    dimension: Option<u32>,
    #[arg(long, global = true, value_enum)]
    kind: Option<ModeKind>,
    /// Comma-separated, strictly increasing.
    #[arg(long, global = true, value_delimiter = ',')]
    m_list: Option<Vec<u32>>,
    #[arg(long, global = true)]
    s0: Option<u32>,
    /// gamma1,gamma2
    #[arg(long, global = true, value_delimiter = ',')]
    gamma: Option<Vec<f64>>,
    #[arg(long, global = true)]
    lambda: Option<f64>,
    #[arg(long, global = true)]
    mu: Option<f64>,
    #[arg(long, global = true)]
    rho: Option<f64>,
    #[arg(long, global = true)]
    rho_tilde: Option<f64>,
    /// tau,theta1,theta2
    #[arg(long, global = true, value_delimiter = ',')]
    sector: Option<Vec<f64>>,
    #[arg(long, global = true, value_delimiter = ',')]
    tau_list: Option<Vec<f64>>,
    #[arg(long, global = true, value_delimiter = ',')]
    mu_list: Option<Vec<f64>>,
    #[arg(long, global = true)]
    mu_sweep_m: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bessel zeros j_{m,s}, j'_{m,s} and their Airy-type window.
    Zeros {
        /// Inclusive, e.g. 0..5
        #[arg(long, value_parser = parse_range)]
        m_range: Option<[u32; 2]>,
        #[arg(long, value_parser = parse_range)]
        s_range: Option<[u32; 2]>,
    },
    /// Brackets, eigenvalues and certificates per m.
    Eig,
    /// Localization ratios per m, tau and field part.
    Localize,
    /// Sector energies and gradient suprema, with growth fits in m and mu.
    Resonance,
    /// Field magnitudes on a polar grid for the first m of the list.
    ModeEval {
        /// NRxNT, e.g. 100x256
        #[arg(long, value_parser = parse_grid)]
        grid: Option<[usize; 2]>,
    },
}

fn parse_range(s: &str) -> Result<[u32; 2], String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x:?}: {e}"));
    Ok([p(a)?, p(b)?])
}

fn parse_grid(s: &str) -> Result<[usize; 2], String> {
    let (a, b) = s.split_once('x').ok_or_else(|| format!("expected NRxNT, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok([p(a)?, p(b)?])
}

fn resolve(cli: &Cli) -> Result<RunConfig, CliError> {
    let g = &cli.global;
    let mut c = match &g.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    if let Some(v) = &g.out {
        c.output_path = Some(v.clone());
    }
    if let Some(v) = g.format {
        c.output_format = Some(v);
    }
    if let Some(v) = g.measure {
        c.measure = v;
    }
    if let Some(v) = g.norm {
        c.normalization = v;
    }
    if let Some(v) = g.dimension {
        c.dimension = v;
    }
    if let Some(v) = g.kind {
        c.mode_kind = v;
    }
    if let Some(v) = &g.m_list {
        c.m_list = v.clone();
    }
    if let Some(v) = g.s0 {
        c.s0 = v;
    }
    if let Some(v) = &g.gamma {
        if v.len() != 2 {
            return Err(CliError::usage("--gamma takes gamma1,gamma2"));
        }
        c.gamma = [v[0], v[1]];
    }
    if let Some(v) = g.lambda {
        c.material.lambda = v;
    }
    if let Some(v) = g.mu {
        c.material.mu = v;
    }
    if let Some(v) = g.rho {
        c.material.rho = v;
    }
    if let Some(v) = g.rho_tilde {
        c.material.rho_tilde = v;
    }
    if let Some(v) = &g.sector {
        if v.len() != 3 {
            return Err(CliError::usage("--sector takes tau,theta1,theta2"));
        }
        c.sector = config::Sector {
            tau: v[0],
            theta1: v[1],
            theta2: v[2],
        };
    }
    if let Some(v) = &g.tau_list {
        c.tau_list = v.clone();
    }
    if let Some(v) = &g.mu_list {
        c.mu_list = v.clone();
    }
    if let Some(v) = g.mu_sweep_m {
        c.mu_sweep_m = v;
    }
    match &cli.command {
        Command::Zeros { m_range, s_range } => {
            if let Some(v) = m_range {
                c.m_range = *v;
            }
            if let Some(v) = s_range {
                c.s_range = *v;
            }
        }
        Command::ModeEval { grid: Some(v) } => c.grid = *v,
        _ => {}
    }
    c.validate()?;
    Ok(c)
}

type Compute = fn(&RunConfig) -> Result<Table, CliError>;

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = resolve(&cli)?;
    let (name, compute): (&str, Compute) = match cli.command {
        Command::Zeros { .. } => ("zeros", |c| Ok(commands::zeros(c))),
        Command::Eig => ("eig", commands::eig),
        Command::Localize => ("localize", commands::localize),
        Command::Resonance => ("resonance", commands::resonance),
        Command::ModeEval { .. } => ("mode-eval", commands::mode_eval),
    };
    let table = match cli.global.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::usage(e.to_string()))?
            .install(|| compute(&cfg))?,
        None => compute(&cfg)?,
    };
    let meta = Meta {
        command: name,
        config: &cfg,
        reproducible: cli.global.reproducible,
    };
    let bytes = table::render(&table, &meta, cfg.output_format.unwrap_or(Format::Csv))?;
    match &cfg.output_path {
        Some(path) => std::fs::write(path, bytes).map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(&bytes).map_err(|e| CliError::io(e.to_string()))?;
        }
    }
    if table.all_failed() {
        return Err(CliError::numerical(format!("{name}: every row failed")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("etrans: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}

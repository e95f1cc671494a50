use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use niba_cli::commands::{rates_report, write_dynamics, write_sweep, SweepSpec};
use niba_cli::{load_config, presets, CliError, RunConfig, Status};

/// Coherence timescales and population dynamics of an excitonic dimer.
#[derive(Parser)]
#[command(name = "niba", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// TOML run configuration
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in parameter set: fmo77, fmo277 or pc645
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct Common {
    #[command(flatten)]
    source: Source,
    /// Output file (defaults to the config's output.path, else stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Coherent-envelope threshold for the persistence time
    #[arg(long)]
    threshold: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Renormalized tunneling, crossover temperature, Rabi frequency and rates
    Rates {
        #[command(flatten)]
        common: Common,
    },
    /// Site populations over time, as CSV
    Dynamics {
        #[command(flatten)]
        common: Common,
        /// End of the time grid in fs (default 1000)
        #[arg(long)]
        t_max_fs: Option<f64>,
        /// Number of time samples including t = 0 (default 2048)
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Relaxation and decoherence times against eps/2Delta, as CSV
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.05)]
        ratio_min: f64,
        #[arg(long, default_value_t = 0.95)]
        ratio_max: f64,
        #[arg(long, default_value_t = 19)]
        ratio_points: usize,
    },
    /// Inspect the built-in presets
    Preset {
        #[command(subcommand)]
        action: PresetAction,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    /// Print a preset as a config file
    Dump {
        name: String,
    },
    List,
}

fn load(common: &Common) -> Result<RunConfig, CliError> {
    let mut cfg = match (&common.source.config, &common.source.preset) {
        (Some(path), _) => load_config(path)?,
        (None, Some(name)) => presets::preset(name)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    if let Some(threshold) = common.threshold {
        cfg.numeric.threshold = threshold;
    }
    Ok(cfg)
}

fn sink(common: &Common, cfg: &RunConfig) -> Result<Option<Box<dyn Write>>, CliError> {
    match common.out.as_ref().or(cfg.output.path.as_ref()) {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Some(Box::new(BufWriter::new(file))))
        }
        None => Ok(None),
    }
}

fn stdout() -> Box<dyn Write> {
    Box::new(BufWriter::new(io::stdout().lock()))
}

fn run(cli: Cli) -> Result<Status, CliError> {
    match cli.command {
        Command::Rates { common } => {
            let cfg = load(&common)?;
            let report = rates_report(&cfg.validate()?)?;
            let mut out = stdout();
            report.write_table(&mut out)?;
            out.flush()?;
            if let Some(mut file) = sink(&common, &cfg)? {
                report.write_csv(&mut file)?;
                file.flush()?;
            }
            Ok(report.status())
        }
        Command::Dynamics {
            common,
            t_max_fs,
            samples,
        } => {
            let mut cfg = load(&common)?;
            if let Some(t) = t_max_fs {
                cfg.numeric.t_max_fs = t;
            }
            if let Some(n) = samples {
                cfg.numeric.samples = n;
            }
            let setup = cfg.validate()?;
            let mut out = sink(&common, &cfg)?.unwrap_or_else(stdout);
            let status = write_dynamics(&setup, &mut out)?;
            out.flush()?;
            Ok(status)
        }
        Command::Sweep {
            common,
            ratio_min,
            ratio_max,
            ratio_points,
        } => {
            let cfg = load(&common)?;
            let spec = SweepSpec {
                ratio_min,
                ratio_max,
                points: ratio_points,
            };
            let mut out = sink(&common, &cfg)?.unwrap_or_else(stdout);
            let status = write_sweep(&cfg.validate()?, &spec, &mut out)?;
            out.flush()?;
            Ok(status)
        }
        Command::Preset { action } => {
            match action {
                PresetAction::Dump { name } => print!("{}", presets::preset_text(&name)?),
                PresetAction::List => presets::NAMES.iter().for_each(|n| println!("{n}")),
            }
            Ok(Status::Ok)
        }
    }
}

fn main() -> ExitCode {
    let status = match run(Cli::parse()) {
        Ok(status) => {
            if status == Status::RegimeWarning {
                eprintln!(
                    "warning: parameters fall outside the validity regime; see the *_ok flags"
                );
            }
            status
        }
        Err(err) => {
            eprintln!("error: {err}");
            Status::Error
        }
    };
    ExitCode::from(status as u8)
}

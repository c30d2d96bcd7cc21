//! `cyclic-covers`: exact Lyapunov spectra of square-tiled cyclic covers
//! and square-tiled-surface tooling.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cyclic_covers::orbit::DEFAULT_ORBIT_CAP;
use cyclic_covers::origami::Origami;
use cyclic_covers_cli as cli;
use cyclic_covers_cli::CliError;

#[derive(Parser)]
#[command(name = "cyclic-covers", version, about = "Exact Lyapunov spectra of square-tiled cyclic covers M_N(a1,a2,a3,a4) and origami tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Text,
}

#[derive(Args)]
struct ParamArgs {
    /// Degree N of the cover.
    #[arg(long = "N")]
    n: i64,
    /// The four exponents, comma separated: `--a 3,5,9,13`.
    #[arg(long)]
    a: String,
}

impl ParamArgs {
    fn params(&self) -> Result<cyclic_covers::CoverParams, CliError> {
        cli::validated_params(self.n, cli::parse_a(&self.a)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Genus and the nonnegative Lyapunov spectrum of M_N(a1..a4).
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: SpectrumFormat,
    },
    /// Per-k table of t_i(k), dims of V(N-k) and the lambda column.
    Table {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Enumerate all valid tuples with N <= max-N into a CSV file.
    Scan {
        #[arg(long = "max-N")]
        max_n: u64,
        /// Keep only tuples with N even and all a_i odd.
        #[arg(long)]
        abelian_only: bool,
        /// Worker threads (0 = one per core). Output bytes do not depend on this.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Output path.
        #[arg(long)]
        out: String,
    },
    /// Double-cover parameters, anti-invariant spectrum and effective genus (odd N).
    Minus {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Square-tiled surface tooling.
    Origami {
        #[command(subcommand)]
        command: OrigamiCommand,
    },
}

#[derive(Args)]
struct InFile {
    /// Path to an origami JSON file `{"squares":M,"h":[..],"v":[..]}`.
    #[arg(long = "in")]
    input: String,
}

impl InFile {
    fn origami(&self) -> Result<Origami, CliError> {
        let text = fs::read_to_string(&self.input)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", self.input)))?;
        cli::parse_origami(&text)
    }
}

#[derive(Subcommand)]
enum OrigamiCommand {
    /// The stairs surface S(N).
    Stairs {
        #[arg(long = "N")]
        n: usize,
    },
    /// The 2N-square cyclic-cover origami of an abelian-case tuple.
    Cover {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// SL(2,Z)-orbit of an origami (JSON graph; optionally DOT to a file).
    Orbit {
        #[command(flatten)]
        input: InFile,
        /// Also write the DOT rendering to this path.
        #[arg(long)]
        dot: Option<String>,
        /// Node cap for the enumeration.
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Translation automorphism group (1-indexed image arrays).
    Automorphisms {
        #[command(flatten)]
        input: InFile,
    },
    /// Quotient by a translation automorphism.
    Quotient {
        #[command(flatten)]
        input: InFile,
        /// The automorphism, as comma-separated 1-indexed images.
        #[arg(long)]
        sigma: String,
    },
    /// Maximal horizontal cylinder decomposition.
    Cylinders {
        #[command(flatten)]
        input: InFile,
    },
    /// Homological dimension d(S), or its maximum over the orbit.
    Homdim {
        #[command(flatten)]
        input: InFile,
        /// Maximize over the SL(2,Z)-orbit.
        #[arg(long)]
        orbit: bool,
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP)]
        cap: usize,
    },
    /// Stratum (multiset of zero degrees).
    Stratum {
        #[command(flatten)]
        input: InFile,
    },
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Spectrum { params, format } => {
            let p = params.params()?;
            let out = match format {
                SpectrumFormat::Text => cli::spectrum_text(&p),
                SpectrumFormat::Json => cli::spectrum_json(&p),
            };
            print!("{out}");
        }
        Command::Table { params, format } => {
            let p = params.params()?;
            let out = match format {
                TableFormat::Csv => cli::table_csv(&p),
                TableFormat::Text => cli::table_text(&p),
            };
            print!("{out}");
        }
        Command::Scan {
            max_n,
            abelian_only,
            jobs,
            out,
        } => {
            let csv = cli::scan_csv(max_n, abelian_only, jobs);
            fs::write(&out, csv).map_err(|e| CliError::Io(format!("cannot write {out}: {e}")))?;
        }
        Command::Minus { params } => {
            let p = params.params()?;
            print!("{}", cli::minus_text(&p)?);
        }
        Command::Origami { command } => run_origami(command)?,
    }
    Ok(())
}

fn run_origami(command: OrigamiCommand) -> Result<(), CliError> {
    match command {
        OrigamiCommand::Stairs { n } => print!("{}", cli::origami_stairs(n)?),
        OrigamiCommand::Cover { params } => {
            let p = params.params()?;
            print!("{}", cli::origami_cover(&p)?);
        }
        OrigamiCommand::Orbit { input, dot, cap } => {
            let o = input.origami()?;
            let (json, dot_text) = cli::origami_orbit(&o, cap)?;
            if let Some(path) = dot {
                fs::write(&path, dot_text)
                    .map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
            }
            print!("{json}");
        }
        OrigamiCommand::Automorphisms { input } => {
            print!("{}", cli::origami_automorphisms(&input.origami()?));
        }
        OrigamiCommand::Quotient { input, sigma } => {
            let o = input.origami()?;
            let images = cli::parse_sigma(&sigma)?;
            print!("{}", cli::origami_quotient(&o, &images)?);
        }
        OrigamiCommand::Cylinders { input } => {
            print!("{}", cli::origami_cylinders(&input.origami()?));
        }
        OrigamiCommand::Homdim { input, orbit, cap } => {
            print!("{}", cli::origami_homdim(&input.origami()?, orbit, cap)?);
        }
        OrigamiCommand::Stratum { input } => {
            print!("{}", cli::origami_stratum(&input.origami()?));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

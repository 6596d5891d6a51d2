use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use stratakit_cli::commands::{self, HhMethod, HhSettings};
use stratakit_cli::document::{Format, Output};
use stratakit_cli::error::{exit_code, CliError};
use stratakit_cli::input::{
    build_family, serialize_presentation, FamilyArgs, FamilyKind, InputArgs,
};
use stratakit_cli::sweep::{sweep, Grid, Span, SweepKind};

/// Homological invariants of quiver algebras with quadratic monomial relations.
#[derive(Parser)]
#[command(name = "stratakit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the presentation file of a family member
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        #[command(flatten)]
        params: FamilyArgs,
    },
    /// Cartan matrix (entry (i, j) counts paths from j to i)
    Cartan {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Hochschild cohomology dimensions
    Hh {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "koszul")]
        method: HhMethod,
        /// Also run a second method and fail (exit 4) unless both agree
        #[arg(long)]
        verify: bool,
        /// Highest degree computed by the bar complex (default: the global dimension)
        #[arg(long)]
        p_max: Option<usize>,
        /// Largest bar cochain space allowed (overrides STRATAKIT_MAX_DIM)
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Global dimension from the quadratic dual and from resolutions of the simples
    Gldim {
        #[command(flatten)]
        input: InputArgs,
        /// Resolution length bound when the quadratic dual is infinite
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Ext^p(M, N) for p = 0..p_max
    Ext {
        #[command(flatten)]
        input: InputArgs,
        /// regular, simple:V, projective:V, ideal:V+W or quotient:V+W
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 2)]
        p_max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Socle, top and radical dimension vectors of a module
    Socle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "regular")]
        module: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Derived-simplicity certificate for an algebra with two simple modules
    Certify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generalized Fibonacci numbers F_0..F_n
    Fib {
        #[arg(long, value_delimiter = ',', required = true)]
        xs: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        ys: Vec<u64>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate a computation over a parameter grid, one CSV row per point
    Sweep {
        #[arg(value_enum)]
        computation: SweepKind,
        /// Range of n for A_n grids, e.g. 0..5
        #[arg(long, default_value = "0..5")]
        n: Span,
        /// Values of the sequence entries for A_n grids
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        entries: Vec<u64>,
        /// Range of x for B grids
        #[arg(long, default_value = "0..4")]
        x: Span,
        /// Range of y for B grids
        #[arg(long, default_value = "0..4")]
        y: Span,
        /// Write the CSV here instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn emit(output: Output, format: Format, started: Instant) -> Result<String> {
    output.render(format, started.elapsed())
}

fn run(cli: Cli) -> Result<String> {
    let started = Instant::now();
    match cli.command {
        Command::Family { kind, params } => {
            let p = build_family(&params.params(kind)?)?;
            Ok(serialize_presentation(&p))
        }
        Command::Cartan { input, format } => {
            emit(commands::cartan(&input.resolve()?)?, format, started)
        }
        Command::Hh {
            input,
            method,
            verify,
            p_max,
            max_dim,
            format,
        } => {
            let settings = HhSettings {
                p_max,
                cap: commands::resolve_cap(max_dim)?,
            };
            emit(
                commands::hh(&input.resolve()?, method, verify, &settings)?,
                format,
                started,
            )
        }
        Command::Gldim {
            input,
            max_len,
            format,
        } => emit(
            commands::gldim(&input.resolve()?, max_len)?,
            format,
            started,
        ),
        Command::Ext {
            input,
            from,
            to,
            p_max,
            format,
        } => emit(
            commands::ext(&input.resolve()?, &from, &to, p_max)?,
            format,
            started,
        ),
        Command::Socle {
            input,
            module,
            format,
        } => emit(
            commands::socle_cmd(&input.resolve()?, &module)?,
            format,
            started,
        ),
        Command::Certify { input, format } => {
            emit(commands::certify_cmd(&input.resolve()?)?, format, started)
        }
        Command::Fib { xs, ys, n, format } => emit(commands::fib(&xs, &ys, n)?, format, started),
        Command::Sweep {
            computation,
            n,
            entries,
            x,
            y,
            output,
        } => {
            let table = sweep(computation, &Grid { n, entries, x, y })?;
            let csv = table.to_csv()?;
            match output {
                Some(path) => {
                    std::fs::write(&path, csv)
                        .with_context(|| format!("writing {}", path.display()))
                        .map_err(|e| CliError::Input(format!("{e:#}")))?;
                    Ok(String::new())
                }
                None => Ok(csv),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth reporting
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("stratakit: {err:#}");
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}

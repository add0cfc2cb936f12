//! `morse`: spectra, wavefunctions, Pekeris diagnostics and oracle validation
//! for Morse oscillators in N dimensions.

mod commands;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{Format, OutputSpec};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<morse_pekeris::Error> for CliError {
    fn from(e: morse_pekeris::Error) -> Self {
        Self::usage(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "morse", version, about = "Morse-potential bound states in the Pekeris approximation")]
struct Cli {
    /// Extra molecule registry (JSON); `MORSE_MOLECULES` is read as well.
    #[arg(long, global = true)]
    molecules: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to a file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Significant digits, 6 to 17.
    #[arg(long, default_value_t = 12)]
    pub precision: usize,
}

impl OutputArgs {
    fn spec(&self) -> Result<OutputSpec, CliError> {
        OutputSpec::new(self.format, self.output.clone(), self.precision)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energies for n <= n_max, ell <= ell_max.
    Spectrum {
        molecule: String,
        #[arg(long, default_value_t = 0)]
        n_max: u32,
        #[arg(long, default_value_t = 0)]
        ell_max: u32,
        #[arg(long = "N", default_value_t = 3)]
        dimension: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Sample a normalized radial eigenfunction on r in [r_min, r_max].
    Wavefunction {
        molecule: String,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        ell: u32,
        #[arg(long = "N", default_value_t = 3)]
        dimension: u32,
        #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
        r_min: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        r_max: f64,
        #[arg(long, default_value_t = 351)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact vs Pekeris centrifugal factor, one block per alpha.
    Pekeris {
        #[arg(long = "alpha", required = true, value_delimiter = ',', allow_hyphen_values = true)]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        r_min: f64,
        #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
        r_max: f64,
        #[arg(long, default_value_t = 31)]
        samples: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare closed-form energies with the Numerov oracle (JSON report).
    Validate {
        molecule: String,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        ell_max: u32,
        #[arg(long = "N", default_value_t = 3)]
        dimension: u32,
        /// Relative tolerance on |closed - oracle| / |oracle|.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Absolute eigenvalue tolerance of the oracle, eV.
        #[arg(long, default_value_t = 1e-9)]
        oracle_tol: f64,
        #[arg(long, short)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        precision: usize,
    },
    /// List or extend the molecule registry.
    Molecules {
        #[command(subcommand)]
        action: MoleculesAction,
    },
}

#[derive(Subcommand)]
enum MoleculesAction {
    List {
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Merge a registry file and list the result; `--save` writes the
    /// merged non-builtin entries.
    Add {
        file: PathBuf,
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let registry = commands::load_registry(cli.molecules.as_deref())?;
    match cli.command {
        Command::Spectrum {
            molecule,
            n_max,
            ell_max,
            dimension,
            out,
        } => commands::spectrum(&registry, &molecule, n_max, ell_max, dimension, &out.spec()?),
        Command::Wavefunction {
            molecule,
            n,
            ell,
            dimension,
            r_min,
            r_max,
            samples,
            out,
        } => commands::wavefunction(
            &registry,
            &molecule,
            (n, ell, dimension),
            (r_min, r_max, samples),
            &out.spec()?,
        ),
        Command::Pekeris {
            alphas,
            r_min,
            r_max,
            samples,
            out,
        } => commands::pekeris(&alphas, r_min, r_max, samples, &out.spec()?),
        Command::Validate {
            molecule,
            n_max,
            ell_max,
            dimension,
            tol,
            oracle_tol,
            output,
            precision,
        } => {
            let spec = OutputSpec::new(Format::Json, output, precision)?;
            commands::validate(&registry, &molecule, (n_max, ell_max, dimension), tol, oracle_tol, &spec)
        }
        Command::Molecules { action } => match action {
            MoleculesAction::List { format } => commands::list_molecules(&registry, format),
            MoleculesAction::Add { file, save } => commands::add_molecules(registry, &file, save.as_deref()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

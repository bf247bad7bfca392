use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cliffweyl::commands::{self, VahlenFlags};
use cliffweyl::{CliError, Outcome};

/// Exact computations with Clifford algebras, Vahlen matrices and the Weyl
/// groups of over-extended Kac–Moody types.
#[derive(Parser)]
#[command(name = "cliffweyl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArgs {
    /// Family letter: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
    /// Allow extension ranks above 10.
    #[arg(long)]
    unsafe_limits: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the double extension T_n++ and write its data.
    Extend {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spinor norms of the outer automorphisms ±a and of −id.
    SpinorOuter {
        #[arg(long = "type", required_unless_present = "all", requires = "rank")]
        family: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// Every simply-laced entry from A2 to E8.
        #[arg(long, conflicts_with_all = ["family", "rank"])]
        all: bool,
        /// Aligned text instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Test a 2×2 Clifford matrix for membership in the Vahlen group.
    CheckVahlen {
        /// CliffMat2 JSON file.
        #[arg(long)]
        matrix: PathBuf,
        /// Optional QuadSpace JSON file the matrix must live over.
        #[arg(long)]
        space: Option<PathBuf>,
        /// Use the integral conditions over the order.
        #[arg(long)]
        order: bool,
        /// Require λ = 1.
        #[arg(long)]
        plus: bool,
        /// Require a, d even and b, c odd.
        #[arg(long)]
        even: bool,
    },
    /// Enumerate the Weyl group ball with its Vahlen representatives.
    Enumerate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write an isometry as a product of reflections.
    Decompose {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        isometry: PathBuf,
    },
    /// Run the worked A1++ and A2++ paravector checks.
    Examples {
        #[arg(long = "type", requires = "rank")]
        family: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Extend { ty, out } => {
            let t = commands::parse_type(&ty.family, ty.rank, ty.unsafe_limits)?;
            commands::extend(t, out.as_deref())
        }
        Command::SpinorOuter { family, rank, all, text } => {
            let types = match (family, rank) {
                (Some(f), Some(n)) => vec![commands::parse_type(&f, n, false)?],
                _ => commands::spinor_table_types(),
            };
            commands::spinor_outer(&types, all, text)
        }
        Command::CheckVahlen { matrix, space, order, plus, even } => {
            commands::check_vahlen(&matrix, space.as_deref(), VahlenFlags { order, plus, even })
        }
        Command::Enumerate { ty, max_len, out } => {
            let t = commands::parse_type(&ty.family, ty.rank, ty.unsafe_limits)?;
            commands::enumerate(t, max_len, ty.unsafe_limits, out.as_deref())
        }
        Command::Decompose { space, isometry } => commands::decompose(&space, &isometry),
        Command::Examples { family, rank } => {
            let only = match (family, rank) {
                (Some(f), Some(n)) => Some(commands::parse_type(&f, n, false)?),
                _ => None,
            };
            commands::examples(only)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(o.stdout.as_bytes());
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("cliffweyl: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

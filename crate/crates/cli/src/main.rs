use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cli::commands::{self, CliError};
use cli::{PresentFormat, Suite, TreeFormat, TreeKind};

#[derive(Parser)]
#[command(name = "starmarkov", version, about = "Star-Markov triples, their presentations, trees and Poisson structures")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced presentation of a Markov triple.
    Present {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Export a decorated tree.
    Tree {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// The odd *-Fibonacci polynomial F_N.
    Fib {
        n: i64,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        negative: bool,
    },
    /// The odd *-Pell polynomial P_N.
    Pell {
        n: i64,
        #[arg(long)]
        closed: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Poisson structures.
    Poisson {
        #[command(subcommand)]
        cmd: PoissonCmd,
    },
    /// Endomorphisms preserving H.
    Horowitz {
        #[command(subcommand)]
        cmd: HorowitzCmd,
    },
}

#[derive(Subcommand)]
enum PoissonCmd {
    /// Solve for quadratic brackets with the given Casimirs.
    SolveQuadratic {
        #[arg(long, value_enum)]
        space: SolveSpace,
    },
    /// Run the structure checks of one space.
    Check {
        #[arg(long, value_enum)]
        space: CheckSpace,
    },
}

#[derive(Subcommand)]
enum HorowitzCmd {
    /// Test H-preservation and maximal rank.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Write the endomorphism as a generator word.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Markov,
    Euclid,
    Deviation,
    Bivector,
    Matrix,
    Polynomial,
    Newton,
    Convex,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Group,
    Presentations,
    Trees,
    Fibonacci,
    Pell,
    Poisson,
    Horowitz,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveSpace {
    C6,
    C12,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckSpace {
    C6,
    C5,
    C12,
}

fn run(args: Args) -> Result<String, CliError> {
    match args.cmd {
        Cmd::Present { a, b, c, json, pretty } => {
            let format = if json {
                PresentFormat::Json
            } else if pretty {
                PresentFormat::Pretty
            } else {
                PresentFormat::Plain
            };
            commands::present(&a, &b, &c, format)
        }
        Cmd::Tree { kind, depth, format } => {
            let kind = match kind {
                KindArg::Markov => TreeKind::Markov,
                KindArg::Euclid => TreeKind::Euclid,
                KindArg::Deviation => TreeKind::Deviation,
                KindArg::Bivector => TreeKind::Bivector,
                KindArg::Matrix => TreeKind::Matrix,
                KindArg::Polynomial => TreeKind::Polynomial,
                KindArg::Newton => TreeKind::Newton,
                KindArg::Convex => TreeKind::Convex,
            };
            let format = match format {
                FormatArg::Dot => TreeFormat::Dot,
                FormatArg::Json => TreeFormat::Json,
                FormatArg::Csv => TreeFormat::Csv,
            };
            let env = std::env::var("STARMARKOV_DEPTH_LIMIT").ok();
            let limit = commands::depth_limit(kind, env.as_deref())?;
            commands::tree(kind, depth, format, limit)
        }
        Cmd::Fib { n, closed, negative } => commands::fib(n, closed, negative),
        Cmd::Pell { n, closed } => commands::pell(n, closed),
        Cmd::Verify { suite, depth, seed } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Core => Suite::Core,
                SuiteArg::Group => Suite::Group,
                SuiteArg::Presentations => Suite::Presentations,
                SuiteArg::Trees => Suite::Trees,
                SuiteArg::Fibonacci => Suite::Fibonacci,
                SuiteArg::Pell => Suite::Pell,
                SuiteArg::Poisson => Suite::Poisson,
                SuiteArg::Horowitz => Suite::Horowitz,
            };
            commands::verify(suite, depth, seed)
        }
        Cmd::Poisson { cmd } => match cmd {
            PoissonCmd::SolveQuadratic { space } => commands::poisson_solve(match space {
                SolveSpace::C6 => poisson::Space::C6,
                SolveSpace::C12 => poisson::Space::C12,
            }),
            PoissonCmd::Check { space } => commands::poisson_check(match space {
                CheckSpace::C6 => poisson::Space::C6,
                CheckSpace::C5 => poisson::Space::C5,
                CheckSpace::C12 => poisson::Space::C12,
            }),
        },
        Cmd::Horowitz { cmd } => match cmd {
            HorowitzCmd::Check { input, seed } => commands::horowitz_check(&input, seed),
            HorowitzCmd::Decompose { input, seed } => commands::horowitz_decompose(&input, seed),
        },
    }
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{}", text.trim_end_matches('\n'));
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(CliError::Failed(v)) => {
            emit(&serde_json::to_string_pretty(&v).expect("serializable"));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

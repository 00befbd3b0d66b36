use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cfroots::families::{Family, FamilySpec};
use cfroots_cli::commands::{self, parse_node_ceiling, Format, Options};
use cfroots_cli::input::{read_inputs, Source};
use cfroots_cli::{CliError, CliResult, EXIT_OK, EXIT_VERIFY_FAILED};

/// Exact real-root isolation for integer polynomials by continued fractions.
///
/// Polynomials are given densely from the constant term up ("-2 0 1" is
/// X^2 - 2) or as sparse exponent:coefficient terms ("0:-2 2:1"). Without
/// a polynomial, --file or --family, one polynomial per line is read from
/// stdin. CF_NODE_CEILING overrides the search-tree node limit.
#[derive(Parser)]
#[command(name = "cfroots", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print isolating intervals with multiplicities.
    Isolate(RunArgs),
    /// Isolate, then check the result with an independent Sturm oracle.
    Verify(RunArgs),
    /// Run benchmark families and print one row per instance.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    /// Line-delimited JSON records.
    Structured,
}

#[derive(Args)]
struct SolverArgs {
    /// Disable Budan pruning of the (0, 1) branch.
    #[arg(long)]
    no_budan: bool,
    /// Lower bounds at or above this power of two trigger a homothety.
    #[arg(long, default_value_t = 16, value_name = "N")]
    homothety_threshold: u64,
    /// Include search statistics in the output.
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Args)]
struct RunArgs {
    /// Polynomial text; quote it so the coefficients form one argument.
    #[arg(allow_hyphen_values = true, conflicts_with_all = ["file", "family"])]
    poly: Option<String>,
    /// Read polynomials from a file, one per line.
    #[arg(long, short, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Generate the input from a benchmark family.
    #[arg(long, requires = "degree")]
    family: Option<Family>,
    #[arg(long)]
    degree: Option<usize>,
    /// Seed for the random families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coefficient bound for the random families.
    #[arg(long, default_value_t = 1000)]
    coeff_bound: u64,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated family names.
    #[arg(long, value_delimiter = ',', required = true)]
    family: Vec<Family>,
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    coeff_bound: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    solver: SolverArgs,
}

fn options(args: &SolverArgs) -> CliResult<Options> {
    let node_ceiling = match std::env::var("CF_NODE_CEILING") {
        Ok(v) => Some(parse_node_ceiling(&v)?),
        Err(std::env::VarError::NotPresent) => None,
        Err(e) => return Err(CliError::Usage(format!("CF_NODE_CEILING: {e}"))),
    };
    Ok(Options {
        budan_pruning: !args.no_budan,
        homothety_threshold: args.homothety_threshold,
        stats: args.stats,
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        },
        node_ceiling,
    })
}

fn source(args: &RunArgs) -> Source {
    if let Some(text) = &args.poly {
        Source::Text(text.clone())
    } else if let Some(path) = &args.file {
        Source::File(path.clone())
    } else if let (Some(family), Some(degree)) = (args.family, args.degree) {
        Source::Family(
            FamilySpec::new(family, degree)
                .with_seed(args.seed)
                .with_coeff_bound(args.coeff_bound),
        )
    } else {
        Source::Stdin
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Isolate(args) => {
            let opts = options(&args.solver)?;
            let inputs = read_inputs(source(&args))?;
            commands::isolate(&inputs, &opts, &mut out)?;
            EXIT_OK
        }
        Command::Verify(args) => {
            let opts = options(&args.solver)?;
            let inputs = read_inputs(source(&args))?;
            if commands::verify(&inputs, &opts, &mut out)? {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Command::Bench(args) => {
            let opts = options(&args.solver)?;
            let specs: Vec<FamilySpec> = args
                .family
                .iter()
                .flat_map(|&f| {
                    args.degrees.iter().map(move |&d| {
                        FamilySpec::new(f, d)
                            .with_seed(args.seed)
                            .with_coeff_bound(args.coeff_bound)
                    })
                })
                .collect();
            commands::bench(&specs, &opts, args.jobs, &mut out)?;
            EXIT_OK
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("cfroots: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

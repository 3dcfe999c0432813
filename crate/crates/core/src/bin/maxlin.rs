use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxlin::cli::{oracle_limit_from_env, run, Command, CommandConfig, Format, Suite};

#[derive(Parser)]
#[command(
    name = "maxlin",
    version,
    about = "Discrete max-linear Bayesian networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the state lattice G(D, k)
    Lattice(Opts),
    /// Emit the order ideals of the transitive closure, or of --poset
    Ideals(Opts),
    /// Emit the transitive closure poset, optionally times a chain
    Poset(Opts),
    /// Emit the factored joint distribution
    Distribution(Opts),
    /// Emit the zeta-transformed coordinates q
    Zeta(Opts),
    /// Emit the theta, alpha and x parameter tables
    Params(Opts),
    /// Emit the Hibi binomials
    Generators(Opts),
    /// Evaluate polynomials from --poly at the distribution
    Eval(Opts),
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Vanishing,
    Theorem31,
    Oracle,
    Moebius,
    Eq5,
    Groebner,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Args)]
struct Opts {
    #[arg(long)]
    dag: Option<PathBuf>,
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long)]
    theta: Option<PathBuf>,
    #[arg(long)]
    poly: Option<PathBuf>,
    /// Override the number of states per innovation
    #[arg(long)]
    k: Option<usize>,
    /// Multiply the poset by the chain 0 < ... < m-1
    #[arg(long)]
    chain: Option<usize>,
    /// Use symbolic theta variables instead of --theta
    #[arg(long)]
    symbolic: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, opts) = match cli.command {
        Cmd::Lattice(o) => (Command::Lattice, o),
        Cmd::Ideals(o) => (Command::Ideals, o),
        Cmd::Poset(o) => (Command::Poset, o),
        Cmd::Distribution(o) => (Command::Distribution, o),
        Cmd::Zeta(o) => (Command::Zeta, o),
        Cmd::Params(o) => (Command::Params, o),
        Cmd::Generators(o) => (Command::Generators, o),
        Cmd::Eval(o) => (Command::Eval, o),
        Cmd::Verify { suite, opts } => {
            let suite = match suite {
                SuiteArg::Vanishing => Suite::Vanishing,
                SuiteArg::Theorem31 => Suite::Theorem31,
                SuiteArg::Oracle => Suite::Oracle,
                SuiteArg::Moebius => Suite::Moebius,
                SuiteArg::Eq5 => Suite::Eq5,
                SuiteArg::Groebner => Suite::Groebner,
            };
            (Command::Verify(suite), opts)
        }
    };
    let oracle_limit = match oracle_limit_from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let config = CommandConfig {
        command,
        dag: opts.dag,
        poset: opts.poset,
        theta: opts.theta,
        poly: opts.poly,
        k: opts.k,
        chain: opts.chain,
        symbolic: opts.symbolic,
        seed: opts.seed,
        trials: opts.trials,
        format: match opts.format {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        },
        oracle_limit,
    };
    let outcome = run(&config);
    // reports go to stdout, input errors to stderr
    if outcome.status == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.status as u8)
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mulattice::group::{group_from_spec, DEFAULT_MAX_ORDER, DEFAULT_SUBGROUP_BUDGET};
use mulattice::runner::{
    parse_suites, run_arith, run_corpus, run_single, ArithCheck, Format, RunConfig, RunError,
    RunOutcome, Suite, DEFAULT_ARITH_SAMPLES, DEFAULT_BURNSIDE_BOUND, DEFAULT_SEED,
};
use mulattice::theorems::{build_lattice_algebra, DEFAULT_COSET_BUDGET};

#[derive(Parser)]
#[command(name = "mulattice", version, about = "Subgroup lattices, incidence algebras and their congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the selected suites on one group.
    Verify {
        #[arg(long)]
        spec: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Verify the selected suites on every corpus group up to an order.
    Corpus {
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Describe a group's subgroup lattice.
    Group {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        list_subgroups: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_SUBGROUP_BUDGET)]
        subgroup_budget: usize,
    },
    /// Check arithmetic functions mod n.
    Arith {
        #[arg(long)]
        modulus: u64,
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["coset", "ring", "special"]))]
        check: String,
        /// epsilon, E, moebius, phi, I, sigma<k>, power<u> or binomial<m>.
        #[arg(long)]
        function: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Args)]
struct RunOpts {
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value = "text")]
    format: String,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, default_value_t = DEFAULT_BURNSIDE_BOUND)]
    burnside_bound: usize,
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_BUDGET)]
    subgroup_budget: usize,
    #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
    coset_budget: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_ARITH_SAMPLES)]
    arith_samples: usize,
    #[arg(long)]
    jobs: Option<usize>,
}

impl RunOpts {
    fn config(&self) -> Result<(RunConfig, Format), RunError> {
        let suites: Vec<Suite> = parse_suites(&self.suite)?;
        let cfg = RunConfig {
            suites,
            max_order: self.max_order,
            burnside_bound: self.burnside_bound,
            subgroup_budget: self.subgroup_budget,
            coset_budget: self.coset_budget,
            seed: self.seed,
            arith_samples: self.arith_samples,
            jobs: self.jobs,
        };
        Ok((cfg, self.format.parse()?))
    }
}

fn emit(outcome: &RunOutcome, format: Format) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.render(format).as_bytes());
    if format == Format::Text {
        let _ = writeln!(stdout, "{}", outcome.summary());
    } else {
        eprintln!("{}", outcome.summary());
    }
    ExitCode::from(outcome.exit_code() as u8)
}

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { spec, opts } => {
            let (cfg, format) = match opts.config() {
                Ok(x) => x,
                Err(e) => return fail(e),
            };
            match run_single(&spec, &cfg) {
                Ok(outcome) => emit(&outcome, format),
                Err(e) => fail(e),
            }
        }
        Command::Corpus { opts } => {
            let (cfg, format) = match opts.config() {
                Ok(x) => x,
                Err(e) => return fail(e),
            };
            match run_corpus(&cfg) {
                Ok(outcome) => emit(&outcome, format),
                Err(e) => fail(e),
            }
        }
        Command::Group {
            spec,
            list_subgroups,
            max_order,
            subgroup_budget,
        } => {
            let g = match group_from_spec(&spec, max_order) {
                Ok(g) => g,
                Err(e) if matches!(e, mulattice::group::GroupError::OrderExceeded { .. }) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(3);
                }
                Err(e) => return fail(e),
            };
            if !list_subgroups {
                println!("group {} order {}", g.label(), g.order());
                return ExitCode::SUCCESS;
            }
            match build_lattice_algebra(g, subgroup_budget) {
                Ok(l) => {
                    print!("{}", mulattice::runner::lattice_listing(&l));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(3)
                }
            }
        }
        Command::Arith {
            modulus,
            check,
            function,
            samples,
            seed,
            format,
        } => {
            let format: Format = match format.parse() {
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            let check: ArithCheck = check.parse().expect("clap restricts values");
            match run_arith(modulus, check, function.as_deref(), samples, seed) {
                Ok(outcome) => emit(&outcome, format),
                Err(e) => fail(e),
            }
        }
    }
}

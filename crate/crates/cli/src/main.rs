use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use catalan_tasep::tasep::SimulationConfig;
use catalan_tasep::Limits;
use clap::{Parser, Subcommand};

use catalan_tasep_cli::commands::{
    cmd_enumerate, cmd_map, cmd_simulate, cmd_tasep, parse_method, Format,
};
use catalan_tasep_cli::verify::{parse_grid, run_suite, Suite, VerifyOptions, DEFAULT_GRID};
use catalan_tasep_cli::wire::parse_rates;
use catalan_tasep_cli::CliError;

/// Catalan tableaux, binary trees, lattice paths and the exact TASEP
/// stationary law.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
/// 3 resource cap exceeded, 4 invalid object, 5 unsupported map.
#[derive(Debug, Parser)]
#[command(name = "catalan-tasep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every object of a kind and size, ordered by serialization.
    Enumerate {
        /// tableau, tree, pair, dyck, polyomino or path (plurals accepted).
        #[arg(long)]
        object: String,
        /// Index of tableaux, vertex count of trees, length of paths.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "json")]
        format: String,
        /// Largest size the enumerators accept.
        #[arg(long, default_value_t = Limits::DEFAULT_ENUMERATION)]
        cap: usize,
    },
    /// Apply a bijection to one serialized object.
    Map {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// File holding the JSON object; standard input when absent.
        input: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Exact stationary distribution of the TASEP on n cells.
    Tasep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
        /// chain, trees, pairs, paths, tableaux or weighted-tableaux.
        #[arg(long, default_value = "chain")]
        method: String,
        #[arg(long, default_value = "text")]
        format: String,
        /// Most cells for the exact chain solve.
        #[arg(long, default_value_t = Limits::DEFAULT_CHAIN_CELLS)]
        cap: usize,
    },
    /// Monte Carlo run of the chain compared with the exact law.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        #[arg(long, default_value_t = 1_000)]
        burn_in: u64,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long, default_value_t = Limits::DEFAULT_CHAIN_CELLS)]
        cap: usize,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        /// counts, bijections, pipelines, tasep or partition.
        #[arg(long)]
        suite: String,
        /// Largest size checked; each suite has its own default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Comma-separated rates in (0, 1]; alpha and beta range over it.
        #[arg(long, default_value = DEFAULT_GRID)]
        grid: String,
        #[arg(long, default_value = "json")]
        format: String,
        /// Corrupt one computed value to check that the suite fails.
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

fn read_input(path: Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(&p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Enumerate {
            object,
            n,
            count_only,
            format,
            cap,
        } => {
            let limits = Limits::default()
                .with_enumeration(cap)
                .with_path_len(cap.max(Limits::DEFAULT_PATH_LEN));
            cmd_enumerate(object.parse()?, n, count_only, format.parse()?, &limits)
        }
        Command::Map {
            from,
            to,
            input,
            format,
        } => {
            let (from, to, format) = (from.parse()?, to.parse()?, format.parse::<Format>()?);
            cmd_map(from, to, &read_input(input)?, format)
        }
        Command::Tasep {
            n,
            alpha,
            beta,
            method,
            format,
            cap,
        } => {
            let limits = Limits::default().with_chain_cells(cap);
            cmd_tasep(
                n,
                &parse_rates(&alpha, &beta)?,
                parse_method(&method)?,
                format.parse()?,
                &limits,
            )
        }
        Command::Simulate {
            n,
            alpha,
            beta,
            seed,
            steps,
            burn_in,
            format,
            cap,
        } => {
            let cfg = SimulationConfig {
                steps,
                burn_in,
                seed,
                start: 0,
            };
            let limits = Limits::default().with_chain_cells(cap);
            cmd_simulate(
                n,
                &parse_rates(&alpha, &beta)?,
                &cfg,
                format.parse()?,
                &limits,
            )
        }
        Command::Verify {
            suite,
            max_n,
            grid,
            format,
            mutate,
        } => {
            let suite: Suite = suite.parse()?;
            let format: Format = format.parse()?;
            let opts = VerifyOptions {
                max_n: max_n.unwrap_or(suite.default_max_n()),
                grid: parse_grid(&grid)?,
                limits: Limits::default(),
                mutate,
            };
            let report = run_suite(suite, &opts)?;
            eprintln!("{}: {:.3}s", report.suite, report.duration.as_secs_f64());
            let out = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Verification(format!(
                    "{} of {} checks failed",
                    report.summary.failed, report.summary.total
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                CliError::EXIT_USAGE
            } else {
                0
            });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! Command-line interface.
//!
//! Subcommands: `generate` (write a random game), `solve` (run one solver
//! and print strategy and values), `verify` (exit 0 iff a strategy is
//! optimal), and `bench` (run a campaign from a config file). Exit codes:
//! 0 success, 1 verification failure, 2 input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bench::{self, BenchConfig};
use crate::eval::{best_response, switch_report};
use crate::format::{parse_game, parse_max_strategy, serialize_game, serialize_max_strategy};
use crate::game::{rational_to_string, MaxStrategy, Ssg, ValueVector};
use crate::generator::{generate, GeneratorParams};
use crate::solvers::{bound_decreasing_fixed_set, bound_recursive_pair, solve, Solution};
use crate::stats::Algorithm;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(
    name = "ssg",
    version,
    about = "Exact solvers for simple stochastic games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random game, deterministically in the seed.
    Generate {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 1)]
        min_vertices: usize,
        #[arg(long, default_value_t = 3)]
        random_vertices: usize,
        #[arg(long, default_value_t = 2)]
        sinks: usize,
        /// Outdegree of MAX and MIN vertices.
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Largest denominator of probabilities and sink values.
        #[arg(long, default_value_t = 10)]
        denominator: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Force every MAX vertex to outdegree exactly 2.
        #[arg(long)]
        binary: bool,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Solve a game file and print an optimal strategy and value vector.
    Solve {
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        game: PathBuf,
        /// Append a one-row CSV with the run's counters.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Write the optimal strategy as a strategy file.
        #[arg(long)]
        strategy_out: Option<PathBuf>,
    },
    /// Check whether a strategy file is optimal for a game file.
    Verify { game: PathBuf, strategy: PathBuf },
    /// Run a benchmark campaign described by a key-value config file.
    Bench { config: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Brute,
    Hk,
    Rp,
    Dfs,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(arg: AlgorithmArg) -> Algorithm {
        match arg {
            AlgorithmArg::Brute => Algorithm::BruteForce,
            AlgorithmArg::Hk => Algorithm::HoffmanKarp,
            AlgorithmArg::Rp => Algorithm::RecursivePair,
            AlgorithmArg::Dfs => Algorithm::DecreasingFixedSet,
        }
    }
}

/// Runs the CLI against the given argument list, writing normal output to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT_ERROR
            } else {
                // Help and version requests.
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_INPUT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    match command {
        Command::Generate {
            max_vertices,
            min_vertices,
            random_vertices,
            sinks,
            degree,
            denominator,
            seed,
            binary,
            output,
        } => {
            let params = GeneratorParams {
                max_vertices,
                min_vertices,
                random_vertices,
                sinks,
                degree,
                max_denominator: denominator,
                seed,
                require_binary: binary,
            };
            let game = generate(&params).map_err(|e| e.to_string())?;
            let text = serialize_game(&game).map_err(|e| e.to_string())?;
            match output {
                Some(path) => write_text(&path, &text)?,
                None => {
                    write!(out, "{text}").map_err(|e| e.to_string())?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Solve {
            algorithm,
            game,
            stats,
            strategy_out,
        } => {
            let game = load_game(&game)?;
            let algorithm = Algorithm::from(algorithm);
            let solution = solve(algorithm, &game).map_err(|e| e.to_string())?;
            print_solution(out, &game, &solution).map_err(|e| e.to_string())?;
            if let Some(path) = strategy_out {
                let text =
                    serialize_max_strategy(&solution.strategy, &game).map_err(|e| e.to_string())?;
                write_text(&path, &text)?;
            }
            if let Some(path) = stats {
                write_text(&path, &stats_csv(&game, algorithm, &solution))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { game, strategy } => {
            let game = load_game(&game)?;
            let bytes = read_bytes(&strategy)?;
            let strategy = parse_max_strategy(&bytes, &game).map_err(|e| e.to_string())?;
            let (_, values) = best_response(&game, &strategy);
            let report = switch_report(&game, &strategy, &values);
            if report.switch_set.is_empty() {
                writeln!(out, "optimal").map_err(|e| e.to_string())?;
                Ok(EXIT_OK)
            } else {
                let names: Vec<String> = report
                    .switch_set
                    .iter()
                    .map(|&v| game.display_id(v))
                    .collect();
                writeln!(out, "not optimal; switch set: {{{}}}", names.join(", "))
                    .map_err(|e| e.to_string())?;
                Ok(EXIT_VERIFICATION_FAILED)
            }
        }
        Command::Bench { config } => {
            let text = String::from_utf8(read_bytes(&config)?)
                .map_err(|_| "config file is not UTF-8".to_owned())?;
            let config = BenchConfig::parse(&text).map_err(|e| e.to_string())?;
            match bench::run(&config) {
                Ok(outcome) => {
                    writeln!(
                        out,
                        "wrote {} rows to {} ({} skipped)",
                        outcome.rows,
                        config.output.display(),
                        outcome.skipped
                    )
                    .map_err(|e| e.to_string())?;
                    Ok(EXIT_OK)
                }
                Err(bench::BenchError::Disagreement { failures }) => {
                    writeln!(
                        out,
                        "wrote {}; {} cells disagree with the reference values",
                        config.output.display(),
                        failures
                    )
                    .map_err(|e| e.to_string())?;
                    Ok(EXIT_VERIFICATION_FAILED)
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

fn load_game(path: &Path) -> Result<Ssg, String> {
    let bytes = read_bytes(path)?;
    let game = parse_game(&bytes).map_err(|e| e.to_string())?;
    let violations = game.validate();
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(|v| v.message(&game)).collect();
        return Err(format!("invalid game: {}", lines.join("; ")));
    }
    Ok(game)
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_text(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_solution(
    out: &mut dyn Write,
    game: &Ssg,
    solution: &Solution,
) -> std::io::Result<()> {
    writeln!(out, "optimal strategy:")?;
    for line in strategy_lines(game, &solution.strategy) {
        writeln!(out, "  {line}")?;
    }
    writeln!(out, "optimal values:")?;
    for line in value_lines(game, &solution.values) {
        writeln!(out, "  {line}")?;
    }
    writeln!(
        out,
        "evaluations: {}, wall: {} ms",
        solution.stats.evaluations,
        solution.stats.wall.as_millis()
    )?;
    Ok(())
}

fn sorted_ids(game: &Ssg) -> Vec<crate::game::VertexId> {
    let mut ids: Vec<_> = game.ids().collect();
    ids.sort_by_key(|&v| game.display_id(v));
    ids
}

fn strategy_lines(game: &Ssg, strategy: &MaxStrategy) -> Vec<String> {
    sorted_ids(game)
        .into_iter()
        .filter_map(|v| {
            strategy
                .get(v)
                .map(|s| format!("{} -> {}", game.display_id(v), game.display_id(s)))
        })
        .collect()
}

fn value_lines(game: &Ssg, values: &ValueVector) -> Vec<String> {
    sorted_ids(game)
        .into_iter()
        .map(|v| format!("{} = {}", game.display_id(v), rational_to_string(&values[v])))
        .collect()
}

fn stats_csv(game: &Ssg, algorithm: Algorithm, solution: &Solution) -> String {
    let d = game.max_degree();
    let bound_rp = if d >= 2 {
        bound_recursive_pair(d).to_string()
    } else {
        String::new()
    };
    format!(
        "{header}\n{id},{algo},{n},{d},{r},{total},{evals},{rounds},{depth},{bound_rp},{bound_dfs},,{wall}\n",
        header = bench::CSV_HEADER,
        id = "game",
        algo = algorithm.key(),
        n = game.max_count(),
        r = game.random_count(),
        total = game.vertex_count(),
        evals = solution.stats.evaluations,
        rounds = solution.stats.max_invocation_rounds(),
        depth = solution.stats.max_depth(),
        bound_dfs = bound_decreasing_fixed_set(game.max_count()),
        wall = solution.stats.wall.as_millis(),
    )
}

//! Benchmark campaigns: generate games over a size sweep, run the
//! configured solvers, check cross-solver agreement, and emit one CSV row
//! per (game, algorithm) cell.
//!
//! The CSV header is
//! `game_id,algo,n,d,r,N_total,evaluations,loop_iterations,max_depth,bound_rp,bound_dfs,agree,wall_ms`.
//! `loop_iterations` is the largest per-invocation round count of the run
//! (subgame solves for the pair solver). `bound_rp` and `bound_dfs` repeat
//! the closed-form bounds for the game's degree and MAX count. `agree`
//! compares the cell's value vector against the game's reference solver:
//! brute force when enabled, otherwise the first configured algorithm.
//! Cells whose solver refuses the instance (cap exceeded, non-binary) are
//! marked `skipped`. `wall_ms` is informational only.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::game::{Ssg, ValueVector};
use crate::generator::{generate, GeneratorParams};
use crate::solvers::{
    bound_decreasing_fixed_set, bound_recursive_pair, solve, Solution, SolverError,
};
use crate::stats::Algorithm;

pub const CSV_HEADER: &str =
    "game_id,algo,n,d,r,N_total,evaluations,loop_iterations,max_depth,bound_rp,bound_dfs,agree,wall_ms";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("config line {line}: expected `key = value`, got {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("config line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("config line {line}: bad value for {key:?}: {text:?}")]
    BadValue {
        line: usize,
        key: String,
        text: String,
    },
    #[error("config is missing an output path")]
    MissingOutput,
    #[error("generator rejected size {size}: {source}")]
    Generator {
        size: usize,
        #[source]
        source: crate::generator::GeneratorError,
    },
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{failures} cells disagree with the reference value vector")]
    Disagreement { failures: usize },
}

/// A benchmark campaign: a size sweep with fixed generator knobs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    /// MAX-vertex counts to sweep.
    pub sizes: Vec<usize>,
    pub instances: usize,
    pub algorithms: Vec<Algorithm>,
    pub seed: u64,
    pub output: PathBuf,
    pub binary: bool,
    pub degree: usize,
    pub min_vertices: usize,
    pub random_vertices: usize,
    pub sinks: usize,
    pub denominator: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![2, 4, 6, 8],
            instances: 25,
            algorithms: Algorithm::ALL.to_vec(),
            seed: 1,
            output: PathBuf::from("bench.csv"),
            binary: true,
            degree: 2,
            min_vertices: 1,
            random_vertices: 4,
            sinks: 2,
            denominator: 10,
        }
    }
}

impl BenchConfig {
    /// Parses the flat `key = value` format. `#` starts a comment. The
    /// `output` key is required; everything else has a default.
    pub fn parse(text: &str) -> Result<BenchConfig, BenchError> {
        let mut config = BenchConfig::default();
        let mut saw_output = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| BenchError::MalformedLine {
                    line,
                    text: raw.to_owned(),
                })?;
            let key = key.trim();
            let value = value.trim();
            let bad = |()| BenchError::BadValue {
                line,
                key: key.to_owned(),
                text: value.to_owned(),
            };
            match key {
                "sizes" => {
                    config.sizes = value
                        .split(',')
                        .map(|s| s.trim().parse::<usize>().map_err(|_| bad(())))
                        .collect::<Result<_, _>>()?;
                }
                "instances" => config.instances = value.parse().map_err(|_| bad(()))?,
                "algorithms" => {
                    config.algorithms = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| Algorithm::from_key(s).ok_or_else(|| bad(())))
                        .collect::<Result<_, _>>()?;
                }
                "seed" => config.seed = value.parse().map_err(|_| bad(()))?,
                "output" => {
                    config.output = PathBuf::from(value);
                    saw_output = true;
                }
                "binary" => config.binary = value.parse().map_err(|_| bad(()))?,
                "degree" => config.degree = value.parse().map_err(|_| bad(()))?,
                "min_vertices" => config.min_vertices = value.parse().map_err(|_| bad(()))?,
                "random_vertices" => config.random_vertices = value.parse().map_err(|_| bad(()))?,
                "sinks" => config.sinks = value.parse().map_err(|_| bad(()))?,
                "denominator" => config.denominator = value.parse().map_err(|_| bad(()))?,
                _ => {
                    return Err(BenchError::UnknownKey {
                        line,
                        key: key.to_owned(),
                    })
                }
            }
        }
        if !saw_output {
            return Err(BenchError::MissingOutput);
        }
        Ok(config)
    }
}

/// Totals of one campaign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BenchOutcome {
    pub rows: usize,
    pub skipped: usize,
    pub disagreements: usize,
}

fn instance_seed(base: u64, size: u64, index: u64) -> u64 {
    let mut z = base
        ^ size.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ index.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn push_row(
    out: &mut String,
    game_id: &str,
    algorithm: Algorithm,
    game: &Ssg,
    cell: &Result<Solution, SolverError>,
    agree: Option<bool>,
) {
    let n = game.max_count();
    let d = game.max_degree();
    let bound_rp = if d >= 2 {
        bound_recursive_pair(d).to_string()
    } else {
        String::new()
    };
    let bound_dfs = bound_decreasing_fixed_set(n).to_string();
    match cell {
        Ok(solution) => {
            let agree = match agree {
                Some(true) => "true",
                Some(false) => "false",
                None => "",
            };
            writeln!(
                out,
                "{game_id},{algo},{n},{d},{r},{total},{evals},{rounds},{depth},{bound_rp},{bound_dfs},{agree},{wall}",
                algo = algorithm.key(),
                r = game.random_count(),
                total = game.vertex_count(),
                evals = solution.stats.evaluations,
                rounds = solution.stats.max_invocation_rounds(),
                depth = solution.stats.max_depth(),
                wall = solution.stats.wall.as_millis(),
            )
            .expect("writing to a string cannot fail");
        }
        Err(_) => {
            writeln!(
                out,
                "{game_id},{algo},{n},{d},{r},{total},,,,{bound_rp},{bound_dfs},skipped,",
                algo = algorithm.key(),
                r = game.random_count(),
                total = game.vertex_count(),
            )
            .expect("writing to a string cannot fail");
        }
    }
}

/// Runs a campaign and returns the CSV text plus totals.
pub fn run_to_string(config: &BenchConfig) -> Result<(String, BenchOutcome), BenchError> {
    let mut out = String::new();
    let mut outcome = BenchOutcome::default();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for &size in &config.sizes {
        for index in 0..config.instances {
            let params = GeneratorParams {
                max_vertices: size,
                min_vertices: config.min_vertices,
                random_vertices: config.random_vertices,
                sinks: config.sinks,
                degree: config.degree,
                max_denominator: config.denominator,
                seed: instance_seed(config.seed, size as u64, index as u64),
                require_binary: config.binary,
            };
            let game = generate(&params).map_err(|source| BenchError::Generator {
                size,
                source,
            })?;
            let game_id = format!("n{size:02}i{index:03}");
            let cells: Vec<(Algorithm, Result<Solution, SolverError>)> = config
                .algorithms
                .iter()
                .map(|&algorithm| (algorithm, solve(algorithm, &game)))
                .collect();
            let reference: Option<&ValueVector> = cells
                .iter()
                .find(|(a, r)| *a == Algorithm::BruteForce && r.is_ok())
                .or_else(|| cells.iter().find(|(_, r)| r.is_ok()))
                .map(|(_, r)| &r.as_ref().unwrap().values);
            for (algorithm, cell) in &cells {
                let agree = match (cell, reference) {
                    (Ok(solution), Some(reference)) => Some(&solution.values == reference),
                    _ => None,
                };
                push_row(&mut out, &game_id, *algorithm, &game, cell, agree);
                outcome.rows += 1;
                match (cell, agree) {
                    (Err(_), _) => outcome.skipped += 1,
                    (Ok(_), Some(false)) => outcome.disagreements += 1,
                    _ => {}
                }
            }
        }
    }
    Ok((out, outcome))
}

/// Runs a campaign, writes the CSV to the configured path, and fails when
/// any cell disagrees with its reference value vector.
pub fn run(config: &BenchConfig) -> Result<BenchOutcome, BenchError> {
    let (csv, outcome) = run_to_string(config)?;
    if let Some(parent) = config.output.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|source| BenchError::Io {
                path: parent.to_owned(),
                source,
            })?;
        }
    }
    write_file(&config.output, &csv)?;
    if outcome.disagreements > 0 {
        return Err(BenchError::Disagreement {
            failures: outcome.disagreements,
        });
    }
    Ok(outcome)
}

fn write_file(path: &Path, text: &str) -> Result<(), BenchError> {
    fs::write(path, text).map_err(|source| BenchError::Io {
        path: path.to_owned(),
        source,
    })
}

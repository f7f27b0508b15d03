//! Instrumentation collected while a solver runs: per-invocation loop
//! counts, recursive call sizes, visited value vectors and switch sets.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Duration;

use crate::game::{PointwiseOrder, ValueVector, VertexId};

/// Solver identifiers, matching the CLI keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    BruteForce,
    HoffmanKarp,
    RecursivePair,
    DecreasingFixedSet,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::BruteForce,
        Algorithm::HoffmanKarp,
        Algorithm::RecursivePair,
        Algorithm::DecreasingFixedSet,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "brute",
            Algorithm::HoffmanKarp => "hk",
            Algorithm::RecursivePair => "rp",
            Algorithm::DecreasingFixedSet => "dfs",
        }
    }

    pub fn from_key(key: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.key() == key)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Counters and traces for one solver invocation (one recursion node).
///
/// `visited_values` and `switch_sets` run in parallel and cover the
/// strategies the invocation's improvement loop moved through, including
/// the pre-loop ones; exhaustive base cases record only their result.
#[derive(Clone, Debug)]
pub struct InvocationStats {
    pub depth: usize,
    /// MAX vertices of the invocation's game.
    pub max_vertices: usize,
    /// Maximum MAX outdegree of the invocation's game.
    pub degree: usize,
    pub loop_iterations: usize,
    /// Effective MAX count of each recursive call, in call order.
    pub recursive_call_sizes: Vec<usize>,
    /// Vertex set frozen by each recursive call, aligned with
    /// `recursive_call_sizes`.
    pub fixed_sets: Vec<BTreeSet<VertexId>>,
    pub visited_values: Vec<ValueVector>,
    pub switch_sets: Vec<BTreeSet<VertexId>>,
}

impl InvocationStats {
    pub(crate) fn new(depth: usize, max_vertices: usize, degree: usize) -> Self {
        InvocationStats {
            depth,
            max_vertices,
            degree,
            loop_iterations: 0,
            recursive_call_sizes: Vec::new(),
            fixed_sets: Vec::new(),
            visited_values: Vec::new(),
            switch_sets: Vec::new(),
        }
    }

    pub(crate) fn record_visit(&mut self, values: ValueVector, switch_set: BTreeSet<VertexId>) {
        if let Some(last) = self.visited_values.last() {
            assert_eq!(
                values.compare(last),
                PointwiseOrder::Greater,
                "visited value vectors must strictly increase"
            );
        }
        self.visited_values.push(values);
        self.switch_sets.push(switch_set);
    }

    /// Count of visited strategies with switch sets of size 0, 1 and 2.
    pub fn switch_size_counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for s in &self.switch_sets {
            match s.len() {
                0 => counts.0 += 1,
                1 => counts.1 += 1,
                2 => counts.2 += 1,
                _ => {}
            }
        }
        counts
    }

    /// Number of recursive calls issued by this invocation.
    pub fn subgame_solves(&self) -> usize {
        self.recursive_call_sizes.len()
    }
}

/// Everything recorded during one `solve_*` call.
#[derive(Clone, Debug)]
pub struct RunStats {
    pub algorithm: Algorithm,
    /// Total best-response evaluations across the whole run.
    pub evaluations: usize,
    /// One record per invocation, in call order; index 0 is the top call.
    pub invocations: Vec<InvocationStats>,
    /// Informational only; never asserted on.
    pub wall: Duration,
}

impl RunStats {
    pub fn max_depth(&self) -> usize {
        self.invocations.iter().map(|i| i.depth).max().unwrap_or(0)
    }

    pub fn total_loop_iterations(&self) -> usize {
        self.invocations.iter().map(|i| i.loop_iterations).sum()
    }

    /// Largest per-invocation round count: switch steps for Hoffman-Karp,
    /// subgame solves for the pair solver, loop iterations for the
    /// fixed-set solver, 0 for brute force.
    pub fn max_invocation_rounds(&self) -> usize {
        self.invocations
            .iter()
            .map(|inv| match self.algorithm {
                Algorithm::BruteForce => 0,
                Algorithm::HoffmanKarp | Algorithm::DecreasingFixedSet => inv.loop_iterations,
                Algorithm::RecursivePair => inv.subgame_solves(),
            })
            .max()
            .unwrap_or(0)
    }
}

//! Exact-arithmetic solvers for simple stochastic games.
//!
//! A simple stochastic game is played on a directed graph whose vertices
//! are controlled by MAX, by MIN, by chance, or are sinks paying a value
//! in `[0,1]`. This crate models such games over exact rationals and
//! solves them with four interoperable algorithms: exhaustive search,
//! Hoffman-Karp strategy improvement, a recursive solver that freezes a
//! pair of MAX vertices, and a recursive solver for binary games whose
//! frozen set shrinks every iteration. A seeded generator and a CSV
//! benchmark harness round the crate off.
//!
//! No floating point is used anywhere on a solver path: switch sets and
//! pointwise comparisons rely on exact strict inequalities. All values
//! are immutable once built and safe to share across threads.

pub mod bench;
pub mod cli;
mod enumerate;
pub mod eval;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod generator;
mod linalg;
pub mod solvers;
pub mod stats;
pub mod subgame;

pub use eval::{
    best_response, brute_force_best_response, evaluate_pair, is_locally_optimal, is_optimal,
    switch_report, total_switch, AbsorptionResult, SwitchReport, DEFAULT_ENUMERATION_CAP,
};
pub use game::{
    ratio, MaxStrategy, MinStrategy, PointwiseOrder, Rational, Ssg, ValueVector, Vertex, VertexId,
    VertexKind, Violation,
};
pub use solvers::{
    bound_decreasing_fixed_set, bound_recursive_pair, enumerate_super_switches, initial_strategy,
    solve, solve_brute_force, solve_decreasing_fixed_set, solve_hoffman_karp,
    solve_hoffman_karp_from, solve_recursive_pair, Solution, SolverError, SuperSwitch,
};
pub use stats::{Algorithm, InvocationStats, RunStats};
pub use subgame::{fix_vertices, lift_strategy, FixedSet};

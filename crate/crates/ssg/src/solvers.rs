//! The four solving algorithms plus super-switch enumeration and the
//! closed-form iteration bounds they are measured against.
//!
//! All solvers return the unique optimal value vector together with an
//! optimal MAX strategy and a full instrumentation record. They are pure
//! functions of the input game; distinct games may be solved concurrently.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::enumerate::MixedRadix;
use crate::eval::{
    best_response, switch_report, total_switch, EnumerationCapExceeded, DEFAULT_ENUMERATION_CAP,
};
use crate::game::{MaxStrategy, MinStrategy, Ssg, ValueVector, VertexId};
use crate::stats::{Algorithm, InvocationStats, RunStats};
use crate::subgame::{fix_vertices, lift_strategy, FixedSet, SubgameError};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error(transparent)]
    Cap(#[from] EnumerationCapExceeded),
    #[error(transparent)]
    Subgame(#[from] SubgameError),
    #[error("vertex {vertex}: the fixed-set solver requires outdegree 2, found {found}")]
    NotBinary { vertex: String, found: usize },
    #[error("the fixed set does not intersect the switch set")]
    EmptySwitchIntersection,
}

/// An optimal strategy, its value vector, and the run's instrumentation.
#[derive(Clone, Debug)]
pub struct Solution {
    pub strategy: MaxStrategy,
    pub values: ValueVector,
    pub stats: RunStats,
}

/// A strategy obtained by switching `switched`, freezing `fixed`, and
/// solving the rest of the game optimally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSwitch {
    pub strategy: MaxStrategy,
    pub switched: BTreeSet<VertexId>,
    pub fixed: FixedSet,
}

/// Deterministic starting strategy: every MAX vertex takes its
/// lowest-index successor.
pub fn initial_strategy(game: &Ssg) -> MaxStrategy {
    MaxStrategy::from_pairs(game.max_vertices().into_iter().map(|x| {
        let first = game
            .successors(x)
            .iter()
            .copied()
            .min()
            .expect("MAX vertex has successors");
        (x, first)
    }))
}

#[derive(Default)]
struct Recorder {
    evaluations: usize,
    invocations: Vec<InvocationStats>,
}

impl Recorder {
    fn begin(&mut self, depth: usize, game: &Ssg) -> usize {
        self.invocations
            .push(InvocationStats::new(depth, game.max_count(), game.max_degree()));
        self.invocations.len() - 1
    }

    fn eval(&mut self, game: &Ssg, strategy: &MaxStrategy) -> (MinStrategy, ValueVector) {
        self.evaluations += 1;
        best_response(game, strategy)
    }

    fn finish(self, algorithm: Algorithm, wall: Duration) -> RunStats {
        RunStats {
            algorithm,
            evaluations: self.evaluations,
            invocations: self.invocations,
            wall,
        }
    }
}

/// Ground-truth solver: evaluates every MAX strategy and returns one with
/// an empty switch set, asserting that all of them share a single value
/// vector. Fails once the strategy space exceeds `cap`.
pub fn solve_brute_force_with_cap(game: &Ssg, cap: u128) -> Result<Solution, SolverError> {
    let start = Instant::now();
    let max_vertices = game.max_vertices();
    let options: Vec<Vec<VertexId>> = max_vertices
        .iter()
        .map(|&x| game.successors(x).to_vec())
        .collect();
    let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
    let count = MixedRadix::count(&sizes);
    if count > cap {
        return Err(EnumerationCapExceeded { count, cap }.into());
    }
    let mut rec = Recorder::default();
    let idx = rec.begin(0, game);
    let mut optimal: Option<(MaxStrategy, ValueVector)> = None;
    for assignment in MixedRadix::new(sizes) {
        let strategy = MaxStrategy::from_pairs(
            max_vertices
                .iter()
                .enumerate()
                .map(|(i, &x)| (x, options[i][assignment[i]])),
        );
        let (_, values) = rec.eval(game, &strategy);
        let report = switch_report(game, &strategy, &values);
        if report.switch_set.is_empty() {
            match &optimal {
                None => optimal = Some((strategy, values)),
                Some((_, known)) => assert_eq!(
                    &values, known,
                    "strategies with empty switch sets share one value vector"
                ),
            }
        }
    }
    let (strategy, values) = optimal.expect("an optimal strategy exists");
    rec.invocations[idx].record_visit(values.clone(), BTreeSet::new());
    Ok(Solution {
        strategy,
        values,
        stats: rec.finish(Algorithm::BruteForce, start.elapsed()),
    })
}

pub fn solve_brute_force(game: &Ssg) -> Result<Solution, SolverError> {
    solve_brute_force_with_cap(game, DEFAULT_ENUMERATION_CAP)
}

/// Strategy improvement with the total switch, from the default start.
pub fn solve_hoffman_karp(game: &Ssg) -> Solution {
    solve_hoffman_karp_from(game, initial_strategy(game))
}

/// Strategy improvement with the total switch, from a given start.
pub fn solve_hoffman_karp_from(game: &Ssg, start: MaxStrategy) -> Solution {
    let t0 = Instant::now();
    let mut rec = Recorder::default();
    let idx = rec.begin(0, game);
    let mut strategy = start;
    let (_, mut values) = rec.eval(game, &strategy);
    let mut report = switch_report(game, &strategy, &values);
    rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
    while !report.switch_set.is_empty() {
        rec.invocations[idx].loop_iterations += 1;
        strategy = total_switch(game, &strategy, &report);
        let (_, improved) = rec.eval(game, &strategy);
        values = improved;
        report = switch_report(game, &strategy, &values);
        rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
    }
    Solution {
        strategy,
        values,
        stats: rec.finish(Algorithm::HoffmanKarp, t0.elapsed()),
    }
}

/// Recursive solver that freezes two MAX vertices, solves the rest, and
/// switches the pair until the lifted strategy is optimal. Games with at
/// most one MAX vertex are solved by testing every choice.
pub fn solve_recursive_pair(game: &Ssg) -> Solution {
    let t0 = Instant::now();
    let mut rec = Recorder::default();
    let (strategy, values) = recursive_pair(game, 0, &mut rec);
    Solution {
        strategy,
        values,
        stats: rec.finish(Algorithm::RecursivePair, t0.elapsed()),
    }
}

fn recursive_pair(game: &Ssg, depth: usize, rec: &mut Recorder) -> (MaxStrategy, ValueVector) {
    let idx = rec.begin(depth, game);
    let max_vertices = game.max_vertices();
    if max_vertices.len() <= 1 {
        return solve_by_enumeration(game, &max_vertices, idx, rec);
    }
    let pair: FixedSet = max_vertices[..2].iter().copied().collect();
    let mut strategy = initial_strategy(game);
    loop {
        let frozen = fix_vertices(game, &pair, &strategy).expect("pair holds MAX vertices");
        rec.invocations[idx]
            .recursive_call_sizes
            .push(frozen.max_count());
        rec.invocations[idx].fixed_sets.push(pair.as_set().clone());
        let (sub, values) = recursive_pair(&frozen, depth + 1, rec);
        strategy = lift_strategy(&sub, &pair, &strategy);
        // The lifted strategy is optimal once the pair is frozen, so any
        // remaining switch lives on the pair itself.
        let report = switch_report(game, &strategy, &values);
        assert!(
            report.switch_set.iter().all(|v| pair.contains(*v)),
            "switch set escapes the fixed pair"
        );
        rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
        if report.switch_set.is_empty() {
            return (strategy, values);
        }
        rec.invocations[idx].loop_iterations += 1;
        strategy = total_switch(game, &strategy, &report);
    }
}

/// Base case for at most one MAX vertex: test all choices and return the
/// one whose switch set is empty.
fn solve_by_enumeration(
    game: &Ssg,
    max_vertices: &[VertexId],
    idx: usize,
    rec: &mut Recorder,
) -> (MaxStrategy, ValueVector) {
    let candidates: Vec<MaxStrategy> = match max_vertices {
        [] => vec![MaxStrategy::empty()],
        [x] => game
            .successors(*x)
            .iter()
            .map(|&s| MaxStrategy::from_pairs([(*x, s)]))
            .collect(),
        _ => unreachable!("enumeration base handles at most one MAX vertex"),
    };
    for strategy in candidates {
        let (_, values) = rec.eval(game, &strategy);
        let report = switch_report(game, &strategy, &values);
        if report.switch_set.is_empty() {
            rec.invocations[idx].record_visit(values.clone(), BTreeSet::new());
            return (strategy, values);
        }
    }
    unreachable!("some candidate has an empty switch set")
}

/// Recursive solver for binary games that freezes the union of the last
/// two switch sets; the frozen set strictly shrinks between iterations.
pub fn solve_decreasing_fixed_set(game: &Ssg) -> Result<Solution, SolverError> {
    for x in game.max_vertices() {
        let found = game.successors(x).len();
        if found != 2 {
            return Err(SolverError::NotBinary {
                vertex: game.display_id(x),
                found,
            });
        }
    }
    let t0 = Instant::now();
    let mut rec = Recorder::default();
    let (strategy, values) = decreasing_fixed_set(game, 0, &mut rec);
    Ok(Solution {
        strategy,
        values,
        stats: rec.finish(Algorithm::DecreasingFixedSet, t0.elapsed()),
    })
}

fn decreasing_fixed_set(
    game: &Ssg,
    depth: usize,
    rec: &mut Recorder,
) -> (MaxStrategy, ValueVector) {
    let idx = rec.begin(depth, game);
    if game.max_count() == 0 {
        let strategy = MaxStrategy::empty();
        let (_, values) = rec.eval(game, &strategy);
        rec.invocations[idx].record_visit(values.clone(), BTreeSet::new());
        return (strategy, values);
    }
    let mut strategy = initial_strategy(game);
    let (_, mut values) = rec.eval(game, &strategy);
    let mut report = switch_report(game, &strategy, &values);
    rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
    let first_switch_set = report.switch_set.clone();
    if !first_switch_set.is_empty() {
        strategy = total_switch(game, &strategy, &report);
        let (_, improved) = rec.eval(game, &strategy);
        values = improved;
        report = switch_report(game, &strategy, &values);
        rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
    }
    let mut current_switch_set = report.switch_set.clone();
    let mut frozen_set: BTreeSet<VertexId> = first_switch_set
        .union(&current_switch_set)
        .copied()
        .collect();
    while !current_switch_set.is_empty() {
        rec.invocations[idx].loop_iterations += 1;
        strategy = total_switch(game, &strategy, &report);
        let fixed = FixedSet::new(frozen_set.clone());
        let frozen = fix_vertices(game, &fixed, &strategy).expect("switch sets hold MAX vertices");
        debug_assert!(
            frozen.max_count() + 2 <= game.max_count(),
            "the frozen set keeps at least two vertices"
        );
        rec.invocations[idx]
            .recursive_call_sizes
            .push(frozen.max_count());
        rec.invocations[idx].fixed_sets.push(frozen_set.clone());
        let (sub, sub_values) = decreasing_fixed_set(&frozen, depth + 1, rec);
        strategy = lift_strategy(&sub, &fixed, &strategy);
        values = sub_values;
        report = switch_report(game, &strategy, &values);
        rec.invocations[idx].record_visit(values.clone(), report.switch_set.clone());
        debug_assert!(
            report.switch_set.is_subset(&frozen_set),
            "new switches stay inside the frozen set"
        );
        frozen_set = current_switch_set
            .union(&report.switch_set)
            .copied()
            .collect();
        current_switch_set = report.switch_set.clone();
    }
    (strategy, values)
}

/// Runs the given algorithm with default caps.
pub fn solve(algorithm: Algorithm, game: &Ssg) -> Result<Solution, SolverError> {
    match algorithm {
        Algorithm::BruteForce => solve_brute_force(game),
        Algorithm::HoffmanKarp => Ok(solve_hoffman_karp(game)),
        Algorithm::RecursivePair => Ok(solve_recursive_pair(game)),
        Algorithm::DecreasingFixedSet => solve_decreasing_fixed_set(game),
    }
}

/// Enumerates every super-switch of `strategy` over the fixed set: for
/// each nonempty subset of `fixed ∩ switch set` and each assignment of
/// improving successors, the subset is switched, `fixed` is frozen, and
/// the remainder is solved optimally.
pub fn enumerate_super_switches(
    game: &Ssg,
    strategy: &MaxStrategy,
    fixed: &FixedSet,
) -> Result<Vec<SuperSwitch>, SolverError> {
    for v in fixed.iter() {
        if !game.vertex(v).is_max() {
            return Err(SubgameError::NotAMaxVertex(v).into());
        }
    }
    let (_, values) = best_response(game, strategy);
    let report = switch_report(game, strategy, &values);
    let eligible: Vec<VertexId> = report
        .switch_set
        .iter()
        .copied()
        .filter(|v| fixed.contains(*v))
        .collect();
    if eligible.is_empty() {
        return Err(SolverError::EmptySwitchIntersection);
    }
    let option_lists: Vec<Vec<VertexId>> = eligible
        .iter()
        .map(|x| report.improvement_sets[x].iter().copied().collect())
        .collect();
    let total = option_lists
        .iter()
        .fold(1u128, |acc, l| acc.saturating_mul(1 + l.len() as u128))
        .saturating_sub(1);
    if total > DEFAULT_ENUMERATION_CAP {
        return Err(EnumerationCapExceeded {
            count: total,
            cap: DEFAULT_ENUMERATION_CAP,
        }
        .into());
    }
    let mut out = Vec::new();
    for mask in 1usize..(1 << eligible.len()) {
        let members: Vec<usize> = (0..eligible.len())
            .filter(|i| mask & (1 << i) != 0)
            .collect();
        let sizes: Vec<usize> = members.iter().map(|&i| option_lists[i].len()).collect();
        for assignment in MixedRadix::new(sizes) {
            let mut intermediate = strategy.clone();
            let mut switched = BTreeSet::new();
            for (j, &i) in members.iter().enumerate() {
                intermediate.set(eligible[i], option_lists[i][assignment[j]]);
                switched.insert(eligible[i]);
            }
            let frozen = fix_vertices(game, fixed, &intermediate)?;
            let optimal = solve_hoffman_karp(&frozen);
            let lifted = lift_strategy(&optimal.strategy, fixed, &intermediate);
            out.push(SuperSwitch {
                strategy: lifted,
                switched,
                fixed: fixed.clone(),
            });
        }
    }
    Ok(out)
}

/// Worst-case subgame solves per invocation of the pair solver on a game
/// of degree `d`: `⌊(d+1)²/2⌋ − 1`.
pub fn bound_recursive_pair(d: usize) -> usize {
    assert!(d >= 2, "degree must be at least 2");
    (d + 1) * (d + 1) / 2 - 1
}

/// Worst-case total best-response evaluations of the fixed-set solver on a
/// binary game with `n` MAX vertices. Satisfies
/// `C(n) = C(n-2) + C(n-3) + ... + C(1) + 3·C(0)` with `C(0) = 1` and
/// `C(1) = 2`, and grows like the golden ratio to the n-th power.
pub fn bound_decreasing_fixed_set(n: usize) -> u128 {
    let mut c: Vec<u128> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let value = match k {
            0 => 1,
            1 => 2,
            _ => c[1..k - 1]
                .iter()
                .fold(3u128, |acc, x| acc.saturating_add(*x)),
        };
        c.push(value);
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        self, looping_game, looping_game_start_strategy, looping_game_super_switch,
        strategy_from_labels,
    };
    use crate::game::{ratio, GameBuilder, PointwiseOrder};

    #[test]
    fn brute_force_solves_the_looping_game() {
        let solution = solve_brute_force(&looping_game()).unwrap();
        assert_eq!(solution.strategy, fixtures::looping_game_optimal_strategy());
        assert_eq!(solution.values, fixtures::looping_game_optimal_values());
        assert_eq!(solution.stats.evaluations, 32);
    }

    #[test]
    fn brute_force_handles_no_max_vertices() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .min("m", ["0", "1"])
            .build()
            .unwrap();
        let solution = solve_brute_force(&g).unwrap();
        assert!(solution.strategy.is_empty());
        let m = g.vertex_by_label("m").unwrap();
        assert_eq!(solution.values[m], ratio(0, 1));
        assert_eq!(solution.stats.evaluations, 1);
    }

    #[test]
    fn brute_force_solves_a_single_max_vertex() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .max("x", ["0", "1"])
            .build()
            .unwrap();
        let solution = solve_brute_force(&g).unwrap();
        let x = g.vertex_by_label("x").unwrap();
        assert_eq!(solution.strategy.choice(x), g.vertex_by_label("1").unwrap());
        assert_eq!(solution.values[x], ratio(1, 1));
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let err = solve_brute_force_with_cap(&looping_game(), 16).unwrap_err();
        assert!(matches!(err, SolverError::Cap(EnumerationCapExceeded { count: 32, cap: 16 })));
    }

    #[test]
    fn hoffman_karp_reaches_the_optimum_from_the_looping_strategy() {
        let g = looping_game();
        let solution = solve_hoffman_karp_from(&g, looping_game_start_strategy());
        assert_eq!(solution.strategy, fixtures::looping_game_optimal_strategy());
        assert_eq!(solution.values, fixtures::looping_game_optimal_values());
        let inv = &solution.stats.invocations[0];
        assert_eq!(inv.loop_iterations, 2);
        assert_eq!(inv.visited_values.len(), 3);
        for pair in inv.visited_values.windows(2) {
            assert_eq!(pair[1].compare(&pair[0]), PointwiseOrder::Greater);
        }
    }

    #[test]
    fn hoffman_karp_stops_immediately_at_an_optimum() {
        let g = looping_game();
        let solution = solve_hoffman_karp_from(&g, fixtures::looping_game_optimal_strategy());
        assert_eq!(solution.stats.invocations[0].loop_iterations, 0);
        assert_eq!(solution.stats.evaluations, 1);
    }

    #[test]
    fn recursive_pair_matches_brute_force_on_the_looping_game() {
        let g = looping_game();
        let expected = solve_brute_force(&g).unwrap();
        let solution = solve_recursive_pair(&g);
        assert_eq!(solution.values, expected.values);
        assert_eq!(solution.strategy, expected.strategy);
        for inv in &solution.stats.invocations {
            if inv.max_vertices >= 2 {
                assert!(inv.subgame_solves() <= bound_recursive_pair(inv.degree.max(2)));
            }
        }
    }

    #[test]
    fn recursive_pair_base_case_sizes() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .uniform("r", ["0", "1"])
            .max("x", ["0", "r"])
            .max("y", ["r", "1"])
            .build()
            .unwrap();
        let solution = solve_recursive_pair(&g);
        // Two MAX vertices: every recursive call freezes both, so each
        // inner invocation sees a game without MAX vertices.
        for inv in &solution.stats.invocations[1..] {
            assert_eq!(inv.max_vertices, 0);
        }
        assert_eq!(solve_brute_force(&g).unwrap().values, solution.values);
    }

    #[test]
    fn decreasing_fixed_set_matches_brute_force_on_the_looping_game() {
        let g = looping_game();
        let expected = solve_brute_force(&g).unwrap();
        let solution = solve_decreasing_fixed_set(&g).unwrap();
        assert_eq!(solution.values, expected.values);
        assert_eq!(solution.strategy, expected.strategy);
        let n = g.max_count();
        assert!(solution.stats.evaluations as u128 <= bound_decreasing_fixed_set(n));
        for inv in &solution.stats.invocations {
            for size in &inv.recursive_call_sizes {
                assert!(*size + 2 <= inv.max_vertices);
            }
            for pair in inv.recursive_call_sizes.windows(2) {
                assert!(pair[0] < pair[1]);
            }
            for pair in inv.fixed_sets.windows(2) {
                assert!(pair[1].is_subset(&pair[0]) && pair[1] != pair[0]);
            }
        }
    }

    #[test]
    fn decreasing_fixed_set_rejects_non_binary_games() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .uniform("r", ["0", "1"])
            .max("x", ["0", "1", "r"])
            .build()
            .unwrap();
        assert!(matches!(
            solve_decreasing_fixed_set(&g),
            Err(SolverError::NotBinary { found: 3, .. })
        ));
    }

    #[test]
    fn super_switch_enumeration_covers_the_reference_example() {
        let g = looping_game();
        let strategy = looping_game_start_strategy();
        let (_, values) = best_response(&g, &strategy);
        let report = switch_report(&g, &strategy, &values);
        let fixed = FixedSet::new(report.switch_set.clone());
        let switches = enumerate_super_switches(&g, &strategy, &fixed).unwrap();
        // Binary game, three eligible vertices: one record per nonempty subset.
        assert_eq!(switches.len(), 7);
        let x3 = g.vertex_by_label("x3").unwrap();
        let x4 = g.vertex_by_label("x4").unwrap();
        let expected_switched = BTreeSet::from([x3, x4]);
        let found = switches
            .iter()
            .find(|s| s.switched == expected_switched)
            .expect("the x3/x4 subset is enumerated");
        assert_eq!(found.strategy, looping_game_super_switch());
        for s in &switches {
            let (_, improved) = best_response(&g, &s.strategy);
            assert_eq!(improved.compare(&values), PointwiseOrder::Greater);
            assert!(s.switched.is_subset(fixed.as_set()));
        }
    }

    #[test]
    fn super_switch_enumeration_rejects_empty_intersections() {
        let g = looping_game();
        let strategy = looping_game_start_strategy();
        let x1 = g.vertex_by_label("x1").unwrap();
        let fixed: FixedSet = [x1].into_iter().collect();
        assert!(matches!(
            enumerate_super_switches(&g, &strategy, &fixed),
            Err(SolverError::EmptySwitchIntersection)
        ));
    }

    #[test]
    fn pair_solver_bound_values() {
        assert_eq!(bound_recursive_pair(2), 3);
        assert_eq!(bound_recursive_pair(3), 7);
        assert_eq!(bound_recursive_pair(4), 11);
    }

    #[test]
    #[should_panic(expected = "degree must be at least 2")]
    fn pair_solver_bound_rejects_degree_one() {
        bound_recursive_pair(1);
    }

    #[test]
    fn fixed_set_bound_recurrence() {
        assert_eq!(bound_decreasing_fixed_set(0), 1);
        assert_eq!(bound_decreasing_fixed_set(1), 2);
        assert_eq!(bound_decreasing_fixed_set(2), 3);
        assert_eq!(bound_decreasing_fixed_set(3), 5);
        assert_eq!(bound_decreasing_fixed_set(4), 8);
        for n in 4..=30 {
            assert_eq!(
                bound_decreasing_fixed_set(n) - bound_decreasing_fixed_set(n - 1),
                bound_decreasing_fixed_set(n - 2)
            );
        }
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        for n in 0..=30 {
            let bound = bound_decreasing_fixed_set(n) as f64;
            assert!(bound <= 6.0 * phi.powi(n as i32));
        }
    }

    #[test]
    fn initial_strategy_is_lowest_index() {
        let g = looping_game();
        let strategy = initial_strategy(&g);
        let expected = strategy_from_labels(
            &g,
            &[
                ("x1", "0"),
                ("x2", "r1"),
                ("x3", "r3"),
                ("x4", "1"),
                ("x5", "1"),
            ],
        );
        assert_eq!(strategy, expected);
    }

    #[test]
    fn all_solvers_agree_on_the_mixed_game() {
        let g = fixtures::mixed_game();
        let brute = solve_brute_force(&g).unwrap();
        let hk = solve_hoffman_karp(&g);
        let rp = solve_recursive_pair(&g);
        let dfs = solve_decreasing_fixed_set(&g).unwrap();
        assert_eq!(hk.values, brute.values);
        assert_eq!(rp.values, brute.values);
        assert_eq!(dfs.values, brute.values);
    }
}

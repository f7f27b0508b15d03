//! Evaluation of strategy pairs and everything derived from it: MIN best
//! responses, switch sets, improvement options, and optimality checks.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::enumerate::MixedRadix;
use crate::game::{
    MaxStrategy, MinStrategy, PointwiseOrder, Rational, Ssg, ValueVector, VertexId, VertexKind,
};
use crate::linalg;

/// Default bound on exhaustive strategy enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("enumerating {count} strategies exceeds the cap of {cap}")]
pub struct EnumerationCapExceeded {
    pub count: u128,
    pub cap: u128,
}

/// Value vector of a fixed strategy pair together with the vertices from
/// which the induced chain never reaches a sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbsorptionResult {
    pub values: ValueVector,
    pub dead_region: BTreeSet<VertexId>,
}

/// Per-strategy switch data: the vertices with a strictly better successor,
/// their improving successors, and the best improvement option of each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchReport {
    pub switch_set: BTreeSet<VertexId>,
    pub improvement_sets: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pub best_options: BTreeMap<VertexId, VertexId>,
}

/// One outgoing distribution per vertex once both strategies are fixed.
fn chain_transitions(
    game: &Ssg,
    max_strategy: &MaxStrategy,
    min_strategy: &MinStrategy,
) -> Vec<Vec<(usize, Rational)>> {
    game.ids()
        .map(|id| match &game.vertex(id).kind {
            VertexKind::Max { .. } => vec![(max_strategy.choice(id).0, Rational::one())],
            VertexKind::Min { .. } => vec![(min_strategy.choice(id).0, Rational::one())],
            VertexKind::Random {
                successors,
                probabilities,
            } => successors
                .iter()
                .zip(probabilities)
                .map(|(s, p)| (s.0, p.clone()))
                .collect(),
            VertexKind::Sink { .. } => Vec::new(),
        })
        .collect()
}

/// Solves the absorbing Markov chain induced by fixing both strategies.
///
/// Vertices with no path to a sink form the dead region and take value 0;
/// every other vertex gets the unique solution of the absorption system.
pub fn evaluate_pair(
    game: &Ssg,
    max_strategy: &MaxStrategy,
    min_strategy: &MinStrategy,
) -> AbsorptionResult {
    debug_assert!(max_strategy.is_valid_for(game), "invalid MAX strategy");
    debug_assert!(min_strategy.is_valid_for(game), "invalid MIN strategy");
    let n = game.vertex_count();
    let transitions = chain_transitions(game, max_strategy, min_strategy);

    // Backward reachability from the sinks over the chain support.
    let mut predecessors: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (from, row) in transitions.iter().enumerate() {
        for (to, _) in row {
            predecessors[*to].push(from);
        }
    }
    let mut reaches_sink = vec![false; n];
    let mut stack: Vec<usize> = game.sink_vertices().iter().map(|v| v.0).collect();
    for &s in &stack {
        reaches_sink[s] = true;
    }
    while let Some(v) = stack.pop() {
        for &p in &predecessors[v] {
            if !reaches_sink[p] {
                reaches_sink[p] = true;
                stack.push(p);
            }
        }
    }

    let dead_region: BTreeSet<VertexId> = (0..n)
        .filter(|&v| !reaches_sink[v])
        .map(VertexId)
        .collect();
    let unknowns: Vec<usize> = (0..n)
        .filter(|&v| reaches_sink[v] && !game.vertex(VertexId(v)).is_sink())
        .collect();
    let column: BTreeMap<usize, usize> = unknowns
        .iter()
        .enumerate()
        .map(|(col, &v)| (v, col))
        .collect();

    // v(u) - sum over unknown successors p(u,w) v(w)
    //   = sum over sink successors p(u,s) Val(s); dead successors add 0.
    let k = unknowns.len();
    let mut matrix = vec![vec![Rational::zero(); k]; k];
    let mut rhs = vec![Rational::zero(); k];
    for (row, &u) in unknowns.iter().enumerate() {
        matrix[row][row] = Rational::one();
        for (to, p) in &transitions[u] {
            if let Some(&col) = column.get(to) {
                matrix[row][col] -= p;
            } else if let Some(value) = game.vertex(VertexId(*to)).sink_value() {
                rhs[row] += p * value;
            }
        }
    }
    let solution =
        linalg::solve(&matrix, &rhs).expect("absorption system is nonsingular by construction");

    let mut values = vec![Rational::zero(); n];
    for id in game.ids() {
        if let Some(value) = game.vertex(id).sink_value() {
            values[id.0] = value.clone();
        }
    }
    for (&u, x) in unknowns.iter().zip(solution) {
        values[u] = x;
    }
    AbsorptionResult {
        values: ValueVector::new(values),
        dead_region,
    }
}

/// Vertices from which MIN can keep the token away from every sink of
/// positive value forever, given the fixed MAX strategy. All of them have
/// value 0 under a best response.
struct ZeroRegion {
    vertices: BTreeSet<VertexId>,
    /// A choice per MIN member that stays inside the region.
    min_witness: BTreeMap<VertexId, VertexId>,
}

fn min_zero_region(game: &Ssg, max_strategy: &MaxStrategy) -> ZeroRegion {
    let n = game.vertex_count();
    // "Safe" holds the candidate region plus the zero-valued sinks.
    let mut safe = vec![false; n];
    for id in game.ids() {
        safe[id.0] = match game.vertex(id).sink_value() {
            Some(value) => value.is_zero(),
            None => true,
        };
    }
    loop {
        let mut changed = false;
        for id in game.ids() {
            if !safe[id.0] {
                continue;
            }
            let keeps = match &game.vertex(id).kind {
                VertexKind::Max { .. } => safe[max_strategy.choice(id).0],
                VertexKind::Min { successors } => successors.iter().any(|s| safe[s.0]),
                VertexKind::Random { successors, .. } => successors.iter().all(|s| safe[s.0]),
                VertexKind::Sink { .. } => true,
            };
            if !keeps {
                safe[id.0] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let vertices: BTreeSet<VertexId> = game
        .ids()
        .filter(|&id| safe[id.0] && !game.vertex(id).is_sink())
        .collect();
    let min_witness = vertices
        .iter()
        .filter(|&&id| game.vertex(id).is_min())
        .map(|&id| {
            let stay = game
                .successors(id)
                .iter()
                .copied()
                .find(|s| safe[s.0])
                .expect("region member has a successor inside the region");
            (id, stay)
        })
        .collect();
    ZeroRegion {
        vertices,
        min_witness,
    }
}

/// Copy of the game with the given vertices turned into sinks of value 0.
fn pin_to_zero(game: &Ssg, region: &BTreeSet<VertexId>) -> Ssg {
    let vertices = game
        .ids()
        .map(|id| {
            let v = game.vertex(id);
            if region.contains(&id) {
                crate::game::Vertex {
                    label: v.label.clone(),
                    kind: VertexKind::Sink {
                        value: Rational::zero(),
                    },
                }
            } else {
                v.clone()
            }
        })
        .collect();
    Ssg::new(vertices)
}

/// Computes a MIN best response to `max_strategy` and its value vector.
///
/// First every vertex where MIN can force the game away from all positive
/// sinks is pinned to 0; on the rest, MIN policy iteration switches only to
/// strictly smaller-valued successors until no improvement remains.
pub fn best_response(game: &Ssg, max_strategy: &MaxStrategy) -> (MinStrategy, ValueVector) {
    let region = min_zero_region(game, max_strategy);
    let pinned = pin_to_zero(game, &region.vertices);
    let pinned_max = MaxStrategy::from_pairs(
        max_strategy
            .choices()
            .iter()
            .filter(|(v, _)| !region.vertices.contains(v))
            .map(|(&v, &s)| (v, s)),
    );
    let free_min: Vec<VertexId> = pinned.min_vertices();
    let mut response = MinStrategy::from_pairs(free_min.iter().map(|&m| {
        let first = game
            .successors(m)
            .iter()
            .copied()
            .min()
            .expect("MIN vertex has successors");
        (m, first)
    }));
    let values = loop {
        let result = evaluate_pair(&pinned, &pinned_max, &response);
        debug_assert!(
            result.dead_region.is_empty(),
            "pinning removed every sink-free cycle"
        );
        let v = result.values;
        let mut improved = false;
        for &m in &free_min {
            let current = v[response.choice(m)].clone();
            let mut best: Option<(Rational, VertexId)> = None;
            for &succ in game.successors(m) {
                let candidate = v[succ].clone();
                let better = match &best {
                    None => true,
                    Some((value, id)) => candidate < *value || (candidate == *value && succ < *id),
                };
                if better {
                    best = Some((candidate, succ));
                }
            }
            let (best_value, best_succ) = best.expect("MIN vertex has successors");
            if best_value < current {
                response.set(m, best_succ);
                improved = true;
            }
        }
        if !improved {
            break v;
        }
    };
    for (&m, &stay) in &region.min_witness {
        response.set(m, stay);
    }
    (response, values)
}

/// Exhaustive best-response oracle: evaluates every MIN strategy and
/// returns one whose value vector is pointwise minimal.
///
/// Panics if no pointwise minimum exists; positional games always have one.
pub fn brute_force_best_response(
    game: &Ssg,
    max_strategy: &MaxStrategy,
    cap: u128,
) -> Result<(MinStrategy, ValueVector), EnumerationCapExceeded> {
    let min_vertices = game.min_vertices();
    let options: Vec<Vec<VertexId>> = min_vertices
        .iter()
        .map(|&m| game.successors(m).to_vec())
        .collect();
    let sizes: Vec<usize> = options.iter().map(Vec::len).collect();
    let count = MixedRadix::count(&sizes);
    if count > cap {
        return Err(EnumerationCapExceeded { count, cap });
    }
    let strategy_for = |assignment: &[usize]| {
        MinStrategy::from_pairs(
            min_vertices
                .iter()
                .enumerate()
                .map(|(i, &m)| (m, options[i][assignment[i]])),
        )
    };
    // Pass 1: the pointwise floor over all responses.
    let mut floor: Option<Vec<Rational>> = None;
    for assignment in MixedRadix::new(sizes.clone()) {
        let response = strategy_for(&assignment);
        let result = evaluate_pair(game, max_strategy, &response);
        match &mut floor {
            None => {
                floor = Some(result.values.iter().map(|(_, r)| r.clone()).collect());
            }
            Some(floor) => {
                for (slot, (_, value)) in floor.iter_mut().zip(result.values.iter()) {
                    if value < slot {
                        *slot = value.clone();
                    }
                }
            }
        }
    }
    let floor = ValueVector::new(floor.expect("at least one MIN strategy exists"));
    // Pass 2: some strategy must attain the floor everywhere at once.
    for assignment in MixedRadix::new(sizes) {
        let response = strategy_for(&assignment);
        let result = evaluate_pair(game, max_strategy, &response);
        if result.values == floor {
            return Ok((response, floor));
        }
    }
    panic!("no pointwise-minimal MIN response; best responses must exist");
}

/// Builds the switch report of `max_strategy` from its best-response
/// values `values`. Ties for the best improvement option break toward the
/// lowest vertex index.
pub fn switch_report(game: &Ssg, max_strategy: &MaxStrategy, values: &ValueVector) -> SwitchReport {
    debug_assert!(max_strategy.is_valid_for(game), "invalid MAX strategy");
    let mut switch_set = BTreeSet::new();
    let mut improvement_sets = BTreeMap::new();
    let mut best_options = BTreeMap::new();
    for x in game.max_vertices() {
        let here = &values[x];
        let improving: BTreeSet<VertexId> = game
            .successors(x)
            .iter()
            .copied()
            .filter(|&y| values[y] > *here)
            .collect();
        if improving.is_empty() {
            continue;
        }
        let mut best: Option<(&Rational, VertexId)> = None;
        for &y in &improving {
            let candidate = &values[y];
            let better = match best {
                None => true,
                // BTreeSet iterates in index order, so on value ties the
                // lowest index is kept automatically.
                Some((value, _)) => candidate > value,
            };
            if better {
                best = Some((candidate, y));
            }
        }
        switch_set.insert(x);
        best_options.insert(x, best.expect("nonempty improvement set").1);
        improvement_sets.insert(x, improving);
    }
    SwitchReport {
        switch_set,
        improvement_sets,
        best_options,
    }
}

/// The switch that takes the best improvement option at every switch-set
/// vertex and keeps the strategy elsewhere.
///
/// Panics on an empty switch set; optimal strategies must not be switched.
pub fn total_switch(game: &Ssg, max_strategy: &MaxStrategy, report: &SwitchReport) -> MaxStrategy {
    assert!(
        !report.switch_set.is_empty(),
        "total switch of an optimal strategy"
    );
    debug_assert!(max_strategy.is_valid_for(game), "invalid MAX strategy");
    let mut switched = max_strategy.clone();
    for (&x, &target) in &report.best_options {
        switched.set(x, target);
    }
    switched
}

/// True when `values` is a fixed point of the one-step optimality
/// operator: the max over successors at MAX vertices and the min at MIN
/// vertices.
pub fn is_locally_optimal(game: &Ssg, values: &ValueVector) -> bool {
    game.ids().all(|x| match &game.vertex(x).kind {
        VertexKind::Max { successors } => {
            let best = successors.iter().map(|&s| &values[s]).max();
            best == Some(&values[x])
        }
        VertexKind::Min { successors } => {
            let best = successors.iter().map(|&s| &values[s]).min();
            best == Some(&values[x])
        }
        _ => true,
    })
}

/// True when `max_strategy` is optimal, i.e. its switch set is empty.
pub fn is_optimal(game: &Ssg, max_strategy: &MaxStrategy) -> bool {
    let (_, values) = best_response(game, max_strategy);
    switch_report(game, max_strategy, &values)
        .switch_set
        .is_empty()
}

/// Convenience for tests: strict pointwise improvement.
pub fn strictly_improves(new: &ValueVector, old: &ValueVector) -> bool {
    new.compare(old) == PointwiseOrder::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{
        self, looping_game, looping_game_single_switch, looping_game_start_strategy,
        looping_game_super_switch, min_strategy_from_labels, strategy_from_labels,
        values_from_labels,
    };
    use crate::game::{ratio, GameBuilder};

    fn looping_start_values() -> ValueVector {
        values_from_labels(
            &looping_game(),
            &[
                ("0", ratio(0, 1)),
                ("1", ratio(1, 1)),
                ("r1", ratio(2, 7)),
                ("r2", ratio(1, 7)),
                ("r3", ratio(4, 7)),
                ("x1", ratio(4, 7)),
                ("x2", ratio(2, 7)),
                ("x3", ratio(0, 1)),
                ("x4", ratio(0, 1)),
                ("x5", ratio(1, 7)),
            ],
        )
    }

    #[test]
    fn evaluates_the_looping_strategy() {
        let g = looping_game();
        let result = evaluate_pair(&g, &looping_game_start_strategy(), &MinStrategy::empty());
        assert_eq!(result.values, looping_start_values());
        let dead: Vec<String> = result
            .dead_region
            .iter()
            .map(|&v| g.display_id(v))
            .collect();
        assert_eq!(dead, ["x3", "x4"]);
    }

    #[test]
    fn evaluates_a_single_sink() {
        let g = GameBuilder::new().sink("s", ratio(1, 1)).build().unwrap();
        let result = evaluate_pair(&g, &MaxStrategy::empty(), &MinStrategy::empty());
        assert_eq!(result.values, ValueVector::new(vec![ratio(1, 1)]));
        assert!(result.dead_region.is_empty());
    }

    #[test]
    fn evaluates_the_super_switch_strategy() {
        let g = looping_game();
        let result = evaluate_pair(&g, &looping_game_super_switch(), &MinStrategy::empty());
        let expected = values_from_labels(
            &g,
            &[
                ("0", ratio(0, 1)),
                ("1", ratio(1, 1)),
                ("r1", ratio(2, 7)),
                ("r2", ratio(1, 7)),
                ("r3", ratio(4, 7)),
                // The arcs force x1 to follow r3 here.
                ("x1", ratio(4, 7)),
                ("x2", ratio(4, 7)),
                ("x3", ratio(4, 7)),
                ("x4", ratio(1, 1)),
                ("x5", ratio(1, 7)),
            ],
        );
        assert_eq!(result.values, expected);
        assert!(result.dead_region.is_empty());
    }

    #[test]
    fn super_switch_beats_the_start_strategy() {
        let g = looping_game();
        let with_super = evaluate_pair(&g, &looping_game_super_switch(), &MinStrategy::empty());
        let with_start = evaluate_pair(&g, &looping_game_start_strategy(), &MinStrategy::empty());
        assert_eq!(
            with_super.values.compare(&with_start.values),
            PointwiseOrder::Greater
        );
    }

    #[test]
    fn satisfies_the_fixed_point_equations() {
        let g = looping_game();
        let result = evaluate_pair(&g, &looping_game_start_strategy(), &MinStrategy::empty());
        let strategy = looping_game_start_strategy();
        for id in g.ids() {
            let expected = match &g.vertex(id).kind {
                VertexKind::Max { .. } => result.values[strategy.choice(id)].clone(),
                VertexKind::Random {
                    successors,
                    probabilities,
                } => successors
                    .iter()
                    .zip(probabilities)
                    .map(|(&s, p)| p * &result.values[s])
                    .sum(),
                _ => continue,
            };
            assert_eq!(result.values[id], expected);
        }
    }

    #[test]
    fn best_response_picks_the_zero_sink() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .min("m", ["0", "1"])
            .build()
            .unwrap();
        let (response, values) = best_response(&g, &MaxStrategy::empty());
        let m = g.vertex_by_label("m").unwrap();
        assert_eq!(response.choice(m), g.vertex_by_label("0").unwrap());
        assert_eq!(values[m], ratio(0, 1));
    }

    #[test]
    fn best_response_prefers_the_random_vertex() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .min("m", ["1", "r"])
            .uniform("r", ["0", "1"])
            .build()
            .unwrap();
        let (response, values) = best_response(&g, &MaxStrategy::empty());
        let m = g.vertex_by_label("m").unwrap();
        assert_eq!(response.choice(m), g.vertex_by_label("r").unwrap());
        assert_eq!(values[m], ratio(1, 2));
        let (oracle_response, oracle_values) =
            brute_force_best_response(&g, &MaxStrategy::empty(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(oracle_values, values);
        assert_eq!(oracle_response.choice(m), response.choice(m));
    }

    #[test]
    fn best_response_with_no_min_vertices_is_plain_evaluation() {
        let g = looping_game();
        let strategy = looping_game_start_strategy();
        let (response, values) = best_response(&g, &strategy);
        assert!(response.is_empty());
        assert_eq!(
            values,
            evaluate_pair(&g, &strategy, &MinStrategy::empty()).values
        );
    }

    #[test]
    fn best_response_escapes_local_traps() {
        // MIN can force value 0 by cycling through the random vertex, but a
        // strictly-improving policy switch alone never finds that: both of
        // m's successors look equal at the start.
        let g = GameBuilder::new()
            .sink("1", ratio(1, 1))
            .min("m", ["1", "r"])
            .random("r", [("m", ratio(1, 1))])
            .build()
            .unwrap();
        let (response, values) = best_response(&g, &MaxStrategy::empty());
        let m = g.vertex_by_label("m").unwrap();
        let r = g.vertex_by_label("r").unwrap();
        assert_eq!(values[m], ratio(0, 1));
        assert_eq!(values[r], ratio(0, 1));
        assert_eq!(response.choice(m), r);
        let (_, oracle) =
            brute_force_best_response(&g, &MaxStrategy::empty(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(oracle, values);
    }

    #[test]
    fn best_response_matches_oracle_on_the_mixed_game() {
        let g = fixtures::mixed_game();
        let strategy = strategy_from_labels(
            &g,
            &[("x1", "1"), ("x2", "r2"), ("x3", "x2"), ("x4", "r2")],
        );
        let (_, fast) = best_response(&g, &strategy);
        let (_, oracle) =
            brute_force_best_response(&g, &strategy, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(fast, oracle);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let g = fixtures::mixed_game();
        let strategy = strategy_from_labels(
            &g,
            &[("x1", "1"), ("x2", "r2"), ("x3", "x2"), ("x4", "r2")],
        );
        let err = brute_force_best_response(&g, &strategy, 4).unwrap_err();
        assert_eq!(err.count, 8);
        assert_eq!(err.cap, 4);
    }

    #[test]
    fn reports_the_start_strategy_switch_set() {
        let g = looping_game();
        let report = switch_report(&g, &looping_game_start_strategy(), &looping_start_values());
        let names: Vec<String> = report
            .switch_set
            .iter()
            .map(|&v| g.display_id(v))
            .collect();
        assert_eq!(names, ["x3", "x4", "x5"]);
        let x3 = g.vertex_by_label("x3").unwrap();
        let r3 = g.vertex_by_label("r3").unwrap();
        let one = g.vertex_by_label("1").unwrap();
        let x4 = g.vertex_by_label("x4").unwrap();
        let x5 = g.vertex_by_label("x5").unwrap();
        assert_eq!(report.best_options[&x3], r3);
        assert_eq!(report.best_options[&x4], one);
        assert_eq!(report.best_options[&x5], one);
        assert_eq!(
            report.improvement_sets[&x3],
            BTreeSet::from([r3])
        );
    }

    #[test]
    fn reports_the_single_switch_switch_set() {
        let g = looping_game();
        let strategy = looping_game_single_switch();
        let (_, values) = best_response(&g, &strategy);
        let report = switch_report(&g, &strategy, &values);
        let names: Vec<String> = report
            .switch_set
            .iter()
            .map(|&v| g.display_id(v))
            .collect();
        assert_eq!(names, ["x2", "x3", "x5"]);
    }

    #[test]
    fn optimal_strategy_has_an_empty_switch_set() {
        let g = looping_game();
        let strategy = fixtures::looping_game_optimal_strategy();
        let (_, values) = best_response(&g, &strategy);
        let report = switch_report(&g, &strategy, &values);
        assert!(report.switch_set.is_empty());
        assert!(is_optimal(&g, &strategy));
        assert!(!is_optimal(&g, &looping_game_start_strategy()));
    }

    #[test]
    fn total_switch_takes_every_best_option() {
        let g = looping_game();
        let strategy = looping_game_start_strategy();
        let values = looping_start_values();
        let report = switch_report(&g, &strategy, &values);
        let switched = total_switch(&g, &strategy, &report);
        let expected = strategy_from_labels(
            &g,
            &[
                ("x1", "r3"),
                ("x2", "r1"),
                ("x3", "r3"),
                ("x4", "1"),
                ("x5", "1"),
            ],
        );
        assert_eq!(switched, expected);
        let (_, new_values) = best_response(&g, &switched);
        assert!(strictly_improves(&new_values, &values));
    }

    #[test]
    #[should_panic(expected = "total switch of an optimal strategy")]
    fn total_switch_rejects_empty_switch_sets() {
        let g = looping_game();
        let strategy = fixtures::looping_game_optimal_strategy();
        let (_, values) = best_response(&g, &strategy);
        let report = switch_report(&g, &strategy, &values);
        total_switch(&g, &strategy, &report);
    }

    #[test]
    fn local_optimality_checks() {
        let g = looping_game();
        assert!(is_locally_optimal(
            &g,
            &fixtures::looping_game_optimal_values()
        ));
        assert!(!is_locally_optimal(&g, &looping_start_values()));
        let sinks = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .build()
            .unwrap();
        assert!(is_locally_optimal(
            &sinks,
            &ValueVector::new(vec![ratio(0, 1), ratio(1, 1)])
        ));
    }

    #[test]
    fn min_strategy_label_helper_round_trips() {
        let g = fixtures::mixed_game();
        let response = min_strategy_from_labels(&g, &[("n1", "1"), ("n2", "x1"), ("n3", "0")]);
        assert!(response.is_valid_for(&g));
    }
}

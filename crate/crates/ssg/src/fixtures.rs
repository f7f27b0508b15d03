//! Small hand-built games used by tests, docs, and examples.

use crate::game::{ratio, GameBuilder, MaxStrategy, MinStrategy, Rational, Ssg, ValueVector};

/// Five MAX vertices over a cycle of three uniform random vertices and two
/// sinks. Under the start strategy the x3/x4 pair chase each other forever,
/// which exercises the dead-region semantics.
pub fn looping_game() -> Ssg {
    GameBuilder::new()
        .sink("0", ratio(0, 1))
        .sink("1", ratio(1, 1))
        .uniform("r1", ["0", "r3"])
        .uniform("r2", ["0", "r1"])
        .uniform("r3", ["r2", "1"])
        .max("x1", ["0", "r3"])
        .max("x2", ["r1", "x3"])
        .max("x3", ["r3", "x4"])
        .max("x4", ["x3", "1"])
        .max("x5", ["r2", "1"])
        .build()
        .expect("fixture is well formed")
}

/// Strategy whose x3/x4 choices form a sink-free cycle.
pub fn looping_game_start_strategy() -> MaxStrategy {
    strategy_from_labels(
        &looping_game(),
        &[
            ("x1", "r3"),
            ("x2", "r1"),
            ("x3", "x4"),
            ("x4", "x3"),
            ("x5", "r2"),
        ],
    )
}

/// The start strategy with x3 and x4 moved to their best improvements.
pub fn looping_game_single_switch() -> MaxStrategy {
    strategy_from_labels(
        &looping_game(),
        &[
            ("x1", "r3"),
            ("x2", "r1"),
            ("x3", "r3"),
            ("x4", "1"),
            ("x5", "r2"),
        ],
    )
}

/// The single switch followed by an optimal re-solve of the unfixed part.
pub fn looping_game_super_switch() -> MaxStrategy {
    strategy_from_labels(
        &looping_game(),
        &[
            ("x1", "r3"),
            ("x2", "x3"),
            ("x3", "r3"),
            ("x4", "1"),
            ("x5", "r2"),
        ],
    )
}

/// The unique optimal strategy of [`looping_game`].
pub fn looping_game_optimal_strategy() -> MaxStrategy {
    strategy_from_labels(
        &looping_game(),
        &[
            ("x1", "r3"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "1"),
            ("x5", "1"),
        ],
    )
}

/// Optimal values of [`looping_game`].
pub fn looping_game_optimal_values() -> ValueVector {
    values_from_labels(
        &looping_game(),
        &[
            ("0", ratio(0, 1)),
            ("1", ratio(1, 1)),
            ("r1", ratio(2, 7)),
            ("r2", ratio(1, 7)),
            ("r3", ratio(4, 7)),
            ("x1", ratio(4, 7)),
            ("x2", ratio(1, 1)),
            ("x3", ratio(1, 1)),
            ("x4", ratio(1, 1)),
            ("x5", ratio(1, 1)),
        ],
    )
}

/// Twelve vertices mixing MAX, MIN and random control, with random
/// outdegrees up to four. All distributions are uniform.
pub fn mixed_game() -> Ssg {
    GameBuilder::new()
        .sink("0", ratio(0, 1))
        .sink("1", ratio(1, 1))
        .min("n1", ["1", "r1"])
        .min("n2", ["x1", "n3"])
        .min("n3", ["0", "x3"])
        .uniform("r1", ["1", "r2", "x2"])
        .uniform("r2", ["n1", "x3", "x4", "r3"])
        .uniform("r3", ["1", "r2", "x4"])
        .max("x1", ["1", "n2"])
        .max("x2", ["n2", "r2"])
        .max("x3", ["0", "x2"])
        .max("x4", ["x3", "r2"])
        .build()
        .expect("fixture is well formed")
}

/// Resolves label pairs into a MAX strategy for `game`.
pub fn strategy_from_labels(game: &Ssg, pairs: &[(&str, &str)]) -> MaxStrategy {
    MaxStrategy::from_pairs(pairs.iter().map(|(from, to)| {
        (
            game.vertex_by_label(from)
                .unwrap_or_else(|| panic!("no vertex labelled {from:?}")),
            game.vertex_by_label(to)
                .unwrap_or_else(|| panic!("no vertex labelled {to:?}")),
        )
    }))
}

/// Resolves label pairs into a MIN strategy for `game`.
pub fn min_strategy_from_labels(game: &Ssg, pairs: &[(&str, &str)]) -> MinStrategy {
    MinStrategy::from_pairs(pairs.iter().map(|(from, to)| {
        (
            game.vertex_by_label(from)
                .unwrap_or_else(|| panic!("no vertex labelled {from:?}")),
            game.vertex_by_label(to)
                .unwrap_or_else(|| panic!("no vertex labelled {to:?}")),
        )
    }))
}

/// Builds a total value vector for `game` from labelled entries.
/// Panics when a vertex is missing or unknown.
pub fn values_from_labels(game: &Ssg, entries: &[(&str, Rational)]) -> ValueVector {
    let mut values: Vec<Option<Rational>> = vec![None; game.vertex_count()];
    for (label, value) in entries {
        let id = game
            .vertex_by_label(label)
            .unwrap_or_else(|| panic!("no vertex labelled {label:?}"));
        values[id.0] = Some(value.clone());
    }
    ValueVector::new(
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.unwrap_or_else(|| panic!("no value for vertex index {i}")))
            .collect(),
    )
}

//! Freezing MAX vertices to a strategy's choices, and moving strategies
//! between a game and its frozen copy.

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::game::{MaxStrategy, Rational, Ssg, Vertex, VertexId, VertexKind};

/// A set of MAX vertices whose choices get frozen.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FixedSet(BTreeSet<VertexId>);

impl FixedSet {
    pub fn new(vertices: BTreeSet<VertexId>) -> Self {
        FixedSet(vertices)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_set(&self) -> &BTreeSet<VertexId> {
        &self.0
    }
}

impl FromIterator<VertexId> for FixedSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        FixedSet(iter.into_iter().collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgameError {
    #[error("vertex {0} in the fixed set is not a MAX vertex")]
    NotAMaxVertex(VertexId),
}

/// Returns a copy of `game` where every vertex of `fixed` has become a
/// random vertex moving to its `strategy` choice with probability 1.
/// All other arcs out of the fixed vertices disappear; ids are preserved.
pub fn fix_vertices(
    game: &Ssg,
    fixed: &FixedSet,
    strategy: &MaxStrategy,
) -> Result<Ssg, SubgameError> {
    for v in fixed.iter() {
        if !game.vertex(v).is_max() {
            return Err(SubgameError::NotAMaxVertex(v));
        }
    }
    let vertices = game
        .ids()
        .map(|id| {
            let v = game.vertex(id);
            if fixed.contains(id) {
                Vertex {
                    label: v.label.clone(),
                    kind: VertexKind::Random {
                        successors: vec![strategy.choice(id)],
                        probabilities: vec![Rational::one()],
                    },
                }
            } else {
                v.clone()
            }
        })
        .collect();
    Ok(Ssg::new(vertices))
}

/// Extends a strategy of the frozen game back to the full game: frozen
/// vertices keep their `base` choices, everything else follows `sub`.
pub fn lift_strategy(sub: &MaxStrategy, fixed: &FixedSet, base: &MaxStrategy) -> MaxStrategy {
    let mut lifted = sub.clone();
    for v in fixed.iter() {
        lifted.set(v, base.choice(v));
    }
    lifted
}

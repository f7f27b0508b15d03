//! Core data model for simple stochastic games: vertices, strategies,
//! value vectors, validation, and exact rational helpers.
//!
//! Everything here is an immutable value after construction, so games,
//! strategies and value vectors can be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number used for every probability and value in a game.
/// Stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `p/q` in lowest terms. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Formats a rational as `p/q`, or plain `p` when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("not a rational literal: {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or `"k"` into a rational in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let s = text.trim();
    let (numer_s, denom_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = numer_s
        .parse()
        .map_err(|_| RationalParseError::Malformed(text.to_owned()))?;
    let denom: BigInt = match denom_s {
        Some(d) => d
            .parse()
            .map_err(|_| RationalParseError::Malformed(text.to_owned()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(Rational::new(numer, denom))
}

/// Dense vertex index, contiguous in `0..game.vertex_count()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexKind {
    Max {
        successors: Vec<VertexId>,
    },
    Min {
        successors: Vec<VertexId>,
    },
    Random {
        successors: Vec<VertexId>,
        /// Probability of moving to the successor at the same position.
        probabilities: Vec<Rational>,
    },
    Sink {
        value: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    /// Human-readable name used by the file format; falls back to the index.
    pub label: Option<String>,
    pub kind: VertexKind,
}

impl Vertex {
    pub fn successors(&self) -> &[VertexId] {
        match &self.kind {
            VertexKind::Max { successors }
            | VertexKind::Min { successors }
            | VertexKind::Random { successors, .. } => successors,
            VertexKind::Sink { .. } => &[],
        }
    }

    pub fn is_max(&self) -> bool {
        matches!(self.kind, VertexKind::Max { .. })
    }

    pub fn is_min(&self) -> bool {
        matches!(self.kind, VertexKind::Min { .. })
    }

    pub fn is_random(&self) -> bool {
        matches!(self.kind, VertexKind::Random { .. })
    }

    pub fn is_sink(&self) -> bool {
        matches!(self.kind, VertexKind::Sink { .. })
    }

    /// Sink payoff, if this vertex is a sink.
    pub fn sink_value(&self) -> Option<&Rational> {
        match &self.kind {
            VertexKind::Sink { value } => Some(value),
            _ => None,
        }
    }
}

/// A simple stochastic game: a directed graph over MAX, MIN, random and
/// sink vertices. Construction does not validate; see [`Ssg::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ssg {
    vertices: Vec<Vertex>,
}

impl Ssg {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Ssg { vertices }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, id: VertexId) -> &Vertex {
        &self.vertices[id.0]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn successors(&self, id: VertexId) -> &[VertexId] {
        self.vertex(id).successors()
    }

    pub fn max_vertices(&self) -> Vec<VertexId> {
        self.ids().filter(|&v| self.vertex(v).is_max()).collect()
    }

    pub fn min_vertices(&self) -> Vec<VertexId> {
        self.ids().filter(|&v| self.vertex(v).is_min()).collect()
    }

    pub fn random_vertices(&self) -> Vec<VertexId> {
        self.ids().filter(|&v| self.vertex(v).is_random()).collect()
    }

    pub fn sink_vertices(&self) -> Vec<VertexId> {
        self.ids().filter(|&v| self.vertex(v).is_sink()).collect()
    }

    pub fn max_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_max()).count()
    }

    pub fn min_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_min()).count()
    }

    pub fn random_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_random()).count()
    }

    pub fn sink_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.is_sink()).count()
    }

    /// Maximum outdegree over MAX vertices; 0 when there are none.
    pub fn max_degree(&self) -> usize {
        self.vertices
            .iter()
            .filter(|v| v.is_max())
            .map(|v| v.successors().len())
            .max()
            .unwrap_or(0)
    }

    /// True when every MAX vertex has outdegree exactly 2.
    pub fn is_binary(&self) -> bool {
        self.vertices
            .iter()
            .filter(|v| v.is_max())
            .all(|v| v.successors().len() == 2)
    }

    pub fn has_arc(&self, from: VertexId, to: VertexId) -> bool {
        self.successors(from).contains(&to)
    }

    /// Name used in files and human output: the label, or the index.
    pub fn display_id(&self, id: VertexId) -> String {
        match &self.vertex(id).label {
            Some(l) => l.clone(),
            None => id.0.to_string(),
        }
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.ids().find(|&v| self.display_id(v) == label)
    }

    /// Checks every structural invariant and returns one record per failed
    /// rule. An empty result means the game is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.vertices.len();
        for (i, vertex) in self.vertices.iter().enumerate() {
            let id = VertexId(i);
            match &vertex.kind {
                VertexKind::Max { successors } => {
                    if successors.len() < 2 {
                        out.push(Violation {
                            vertex: id,
                            kind: ViolationKind::MaxOutdegree {
                                found: successors.len(),
                            },
                        });
                    }
                }
                VertexKind::Min { successors } => {
                    if successors.len() < 2 {
                        out.push(Violation {
                            vertex: id,
                            kind: ViolationKind::MinOutdegree {
                                found: successors.len(),
                            },
                        });
                    }
                }
                VertexKind::Random {
                    successors,
                    probabilities,
                } => {
                    if successors.is_empty() {
                        out.push(Violation {
                            vertex: id,
                            kind: ViolationKind::RandomOutdegree,
                        });
                    }
                    if successors.len() != probabilities.len() {
                        out.push(Violation {
                            vertex: id,
                            kind: ViolationKind::DistributionArity {
                                successors: successors.len(),
                                probabilities: probabilities.len(),
                            },
                        });
                    } else {
                        for (succ, p) in successors.iter().zip(probabilities) {
                            if *p <= Rational::zero() {
                                out.push(Violation {
                                    vertex: id,
                                    kind: ViolationKind::NonPositiveProbability { target: *succ },
                                });
                            }
                        }
                        let sum: Rational = probabilities.iter().sum();
                        if !sum.is_one() {
                            out.push(Violation {
                                vertex: id,
                                kind: ViolationKind::DistributionSum { sum },
                            });
                        }
                    }
                }
                VertexKind::Sink { value } => {
                    if *value < Rational::zero() || *value > Rational::one() {
                        out.push(Violation {
                            vertex: id,
                            kind: ViolationKind::SinkValueRange {
                                value: value.clone(),
                            },
                        });
                    }
                }
            }
            let mut seen = BTreeSet::new();
            for succ in vertex.successors() {
                if succ.0 >= n {
                    out.push(Violation {
                        vertex: id,
                        kind: ViolationKind::UnknownSuccessor { target: succ.0 },
                    });
                    continue;
                }
                if *succ == id {
                    out.push(Violation {
                        vertex: id,
                        kind: ViolationKind::SelfLoop,
                    });
                }
                if !seen.insert(*succ) {
                    out.push(Violation {
                        vertex: id,
                        kind: ViolationKind::DuplicateSuccessor { target: *succ },
                    });
                }
            }
        }
        let mut names: HashMap<String, VertexId> = HashMap::new();
        for id in self.ids() {
            if let Some(prev) = names.insert(self.display_id(id), id) {
                out.push(Violation {
                    vertex: id,
                    kind: ViolationKind::DuplicateDisplayId { other: prev },
                });
            }
        }
        out
    }

    /// Returns a copy with vertices sorted by display id and indices
    /// remapped accordingly. Unlabelled vertices get their current index
    /// as a label first, so the operation is idempotent.
    pub fn canonical(&self) -> Ssg {
        let labelled: Vec<Vertex> = self
            .ids()
            .map(|id| {
                let v = self.vertex(id);
                Vertex {
                    label: Some(self.display_id(id)),
                    kind: v.kind.clone(),
                }
            })
            .collect();
        let mut order: Vec<usize> = (0..labelled.len()).collect();
        order.sort_by(|&a, &b| labelled[a].label.cmp(&labelled[b].label));
        let mut remap = vec![0usize; labelled.len()];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            remap[old_idx] = new_idx;
        }
        let map_id = |v: VertexId| VertexId(remap[v.0]);
        let vertices = order
            .into_iter()
            .map(|old_idx| {
                let v = &labelled[old_idx];
                let kind = match &v.kind {
                    VertexKind::Max { successors } => VertexKind::Max {
                        successors: successors.iter().copied().map(map_id).collect(),
                    },
                    VertexKind::Min { successors } => VertexKind::Min {
                        successors: successors.iter().copied().map(map_id).collect(),
                    },
                    VertexKind::Random {
                        successors,
                        probabilities,
                    } => VertexKind::Random {
                        successors: successors.iter().copied().map(map_id).collect(),
                        probabilities: probabilities.clone(),
                    },
                    VertexKind::Sink { value } => VertexKind::Sink {
                        value: value.clone(),
                    },
                };
                Vertex {
                    label: v.label.clone(),
                    kind,
                }
            })
            .collect();
        Ssg::new(vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    MaxOutdegree { found: usize },
    MinOutdegree { found: usize },
    RandomOutdegree,
    DistributionArity { successors: usize, probabilities: usize },
    NonPositiveProbability { target: VertexId },
    DistributionSum { sum: Rational },
    SinkValueRange { value: Rational },
    UnknownSuccessor { target: usize },
    SelfLoop,
    DuplicateSuccessor { target: VertexId },
    DuplicateDisplayId { other: VertexId },
}

/// One failed validation rule, naming the offending vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: VertexId,
    pub kind: ViolationKind,
}

impl Violation {
    pub fn message(&self, game: &Ssg) -> String {
        let name = game.display_id(self.vertex);
        match &self.kind {
            ViolationKind::MaxOutdegree { found } => {
                format!("vertex {name}: MAX outdegree < 2 (found {found})")
            }
            ViolationKind::MinOutdegree { found } => {
                format!("vertex {name}: MIN outdegree < 2 (found {found})")
            }
            ViolationKind::RandomOutdegree => {
                format!("vertex {name}: random outdegree < 1")
            }
            ViolationKind::DistributionArity {
                successors,
                probabilities,
            } => format!(
                "vertex {name}: {successors} successors but {probabilities} probabilities"
            ),
            ViolationKind::NonPositiveProbability { target } => format!(
                "vertex {name}: non-positive probability on arc to {}",
                game.display_id(*target)
            ),
            ViolationKind::DistributionSum { sum } => format!(
                "vertex {name}: distribution sum ≠ 1 (got {})",
                rational_to_string(sum)
            ),
            ViolationKind::SinkValueRange { value } => format!(
                "vertex {name}: sink value outside [0,1] (got {})",
                rational_to_string(value)
            ),
            ViolationKind::UnknownSuccessor { target } => {
                format!("vertex {name}: successor index {target} out of range")
            }
            ViolationKind::SelfLoop => format!("vertex {name}: self-loop"),
            ViolationKind::DuplicateSuccessor { target } => format!(
                "vertex {name}: duplicate arc to {}",
                game.display_id(*target)
            ),
            ViolationKind::DuplicateDisplayId { other } => format!(
                "vertex {name}: display id also used by vertex {}",
                other.0
            ),
        }
    }
}

macro_rules! strategy_type {
    ($name:ident, $is_kind:ident, $doc:expr) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
        pub struct $name {
            choices: BTreeMap<VertexId, VertexId>,
        }

        impl $name {
            pub fn empty() -> Self {
                Self {
                    choices: BTreeMap::new(),
                }
            }

            pub fn new(choices: BTreeMap<VertexId, VertexId>) -> Self {
                Self { choices }
            }

            pub fn from_pairs(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
                Self {
                    choices: pairs.into_iter().collect(),
                }
            }

            /// Chosen successor of `vertex`. Panics when the strategy does
            /// not cover it; strategies are total maps by construction.
            pub fn choice(&self, vertex: VertexId) -> VertexId {
                self.choices[&vertex]
            }

            pub fn get(&self, vertex: VertexId) -> Option<VertexId> {
                self.choices.get(&vertex).copied()
            }

            pub fn set(&mut self, vertex: VertexId, successor: VertexId) {
                self.choices.insert(vertex, successor);
            }

            pub fn choices(&self) -> &BTreeMap<VertexId, VertexId> {
                &self.choices
            }

            pub fn len(&self) -> usize {
                self.choices.len()
            }

            pub fn is_empty(&self) -> bool {
                self.choices.is_empty()
            }

            /// Total on the controlled vertices of `game`, with every choice
            /// following an arc of the game.
            pub fn is_valid_for(&self, game: &Ssg) -> bool {
                let controlled: Vec<VertexId> = game
                    .ids()
                    .filter(|&v| game.vertex(v).$is_kind())
                    .collect();
                controlled.len() == self.choices.len()
                    && controlled
                        .iter()
                        .all(|&v| self.get(v).is_some_and(|s| game.has_arc(v, s)))
            }
        }
    };
}

strategy_type!(
    MaxStrategy,
    is_max,
    "Positional MAX strategy: a total map from MAX vertices to successors."
);
strategy_type!(
    MinStrategy,
    is_min,
    "Positional MIN strategy: a total map from MIN vertices to successors."
);

/// Result of comparing two value vectors in the pointwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointwiseOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// One exact rational value per vertex of a game, indexed by `VertexId`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueVector {
    values: Vec<Rational>,
}

impl ValueVector {
    pub fn new(values: Vec<Rational>) -> Self {
        ValueVector { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, id: VertexId) -> &Rational {
        &self.values[id.0]
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &Rational)> {
        self.values.iter().enumerate().map(|(i, r)| (VertexId(i), r))
    }

    /// Pointwise comparison. Panics when the vectors cover different
    /// vertex sets.
    pub fn compare(&self, other: &ValueVector) -> PointwiseOrder {
        assert_eq!(
            self.values.len(),
            other.values.len(),
            "value vectors over different vertex sets"
        );
        let mut above = false;
        let mut below = false;
        for (a, b) in self.values.iter().zip(&other.values) {
            match a.cmp(b) {
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        match (above, below) {
            (false, false) => PointwiseOrder::Equal,
            (true, false) => PointwiseOrder::Greater,
            (false, true) => PointwiseOrder::Less,
            (true, true) => PointwiseOrder::Incomparable,
        }
    }
}

impl std::ops::Index<VertexId> for ValueVector {
    type Output = Rational;

    fn index(&self, id: VertexId) -> &Rational {
        &self.values[id.0]
    }
}

enum BuilderKind {
    Max(Vec<String>),
    Min(Vec<String>),
    Random(Vec<(String, Rational)>),
    Sink(Rational),
}

/// Label-based game construction for fixtures and tests. Successor labels
/// may refer to vertices declared later; resolution happens in `build`.
#[derive(Default)]
pub struct GameBuilder {
    entries: Vec<(String, BuilderKind)>,
}

impl GameBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn max<S: Into<String>>(mut self, label: &str, successors: impl IntoIterator<Item = S>) -> Self {
        self.entries.push((
            label.to_owned(),
            BuilderKind::Max(successors.into_iter().map(Into::into).collect()),
        ));
        self
    }

    pub fn min<S: Into<String>>(mut self, label: &str, successors: impl IntoIterator<Item = S>) -> Self {
        self.entries.push((
            label.to_owned(),
            BuilderKind::Min(successors.into_iter().map(Into::into).collect()),
        ));
        self
    }

    pub fn random<S: Into<String>>(
        mut self,
        label: &str,
        distribution: impl IntoIterator<Item = (S, Rational)>,
    ) -> Self {
        self.entries.push((
            label.to_owned(),
            BuilderKind::Random(
                distribution
                    .into_iter()
                    .map(|(l, p)| (l.into(), p))
                    .collect(),
            ),
        ));
        self
    }

    /// Uniform distribution over the given successors.
    pub fn uniform<S: Into<String>>(
        self,
        label: &str,
        successors: impl IntoIterator<Item = S>,
    ) -> Self {
        let succ: Vec<String> = successors.into_iter().map(Into::into).collect();
        let p = Rational::new(BigInt::one(), BigInt::from(succ.len() as i64));
        self.random(label, succ.into_iter().map(|s| (s, p.clone())))
    }

    pub fn sink(mut self, label: &str, value: Rational) -> Self {
        self.entries.push((label.to_owned(), BuilderKind::Sink(value)));
        self
    }

    pub fn build(self) -> Result<Ssg, String> {
        let mut index: HashMap<&str, VertexId> = HashMap::new();
        for (i, (label, _)) in self.entries.iter().enumerate() {
            if index.insert(label, VertexId(i)).is_some() {
                return Err(format!("duplicate vertex label {label:?}"));
            }
        }
        let resolve = |label: &str| -> Result<VertexId, String> {
            index
                .get(label)
                .copied()
                .ok_or_else(|| format!("unknown vertex label {label:?}"))
        };
        let mut vertices = Vec::with_capacity(self.entries.len());
        for (label, kind) in &self.entries {
            let kind = match kind {
                BuilderKind::Max(succ) => VertexKind::Max {
                    successors: succ.iter().map(|s| resolve(s)).collect::<Result<_, _>>()?,
                },
                BuilderKind::Min(succ) => VertexKind::Min {
                    successors: succ.iter().map(|s| resolve(s)).collect::<Result<_, _>>()?,
                },
                BuilderKind::Random(dist) => VertexKind::Random {
                    successors: dist
                        .iter()
                        .map(|(s, _)| resolve(s))
                        .collect::<Result<_, _>>()?,
                    probabilities: dist.iter().map(|(_, p)| p.clone()).collect(),
                },
                BuilderKind::Sink(value) => VertexKind::Sink {
                    value: value.clone(),
                },
            };
            vertices.push(Vertex {
                label: Some(label.clone()),
                kind,
            });
        }
        Ok(Ssg::new(vertices))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_sinks() -> Ssg {
        GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .build()
            .unwrap()
    }

    #[test]
    fn parses_rational_literals() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("4/14").unwrap(), ratio(2, 7));
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational(" 0 ").unwrap(), ratio(0, 1));
        assert!(matches!(
            parse_rational("1/0"),
            Err(RationalParseError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("a/b"),
            Err(RationalParseError::Malformed(_))
        ));
        assert!(matches!(
            parse_rational("1/2/3"),
            Err(RationalParseError::Malformed(_))
        ));
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(rational_to_string(&ratio(4, 14)), "2/7");
        assert_eq!(rational_to_string(&ratio(3, 1)), "3");
        assert_eq!(rational_to_string(&ratio(0, 5)), "0");
    }

    #[test]
    fn rejects_low_outdegree() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .max("x", ["0"])
            .min("m", ["1"])
            .build()
            .unwrap();
        let violations = g.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v.kind, ViolationKind::MaxOutdegree { found: 1 })));
        assert!(violations
            .iter()
            .any(|v| matches!(v.kind, ViolationKind::MinOutdegree { found: 1 })));
    }

    #[test]
    fn rejects_bad_distribution() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .random("r", [("0", ratio(1, 2)), ("1", ratio(1, 4))])
            .build()
            .unwrap();
        let violations = g.validate();
        assert_eq!(violations.len(), 1);
        assert!(matches!(
            &violations[0].kind,
            ViolationKind::DistributionSum { sum } if *sum == ratio(3, 4)
        ));
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .max("x", ["x", "0"])
            .build()
            .unwrap();
        assert!(g
            .validate()
            .iter()
            .any(|v| matches!(v.kind, ViolationKind::SelfLoop)));

        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .max("x", ["0", "0"])
            .build()
            .unwrap();
        assert!(g
            .validate()
            .iter()
            .any(|v| matches!(v.kind, ViolationKind::DuplicateSuccessor { .. })));
    }

    #[test]
    fn rejects_out_of_range_sink_value() {
        let g = GameBuilder::new().sink("s", ratio(3, 2)).build().unwrap();
        assert!(g
            .validate()
            .iter()
            .any(|v| matches!(v.kind, ViolationKind::SinkValueRange { .. })));
    }

    #[test]
    fn compare_is_pointwise() {
        let v = ValueVector::new(vec![ratio(1, 1), ratio(0, 1)]);
        let w = ValueVector::new(vec![ratio(0, 1), ratio(1, 1)]);
        assert_eq!(v.compare(&v), PointwiseOrder::Equal);
        assert_eq!(v.compare(&w), PointwiseOrder::Incomparable);
        let u = ValueVector::new(vec![ratio(1, 1), ratio(1, 1)]);
        assert_eq!(u.compare(&v), PointwiseOrder::Greater);
        assert_eq!(v.compare(&u), PointwiseOrder::Less);
    }

    #[test]
    fn canonical_sorts_by_display_id() {
        let g = GameBuilder::new()
            .max("x1", ["0", "1"])
            .sink("1", ratio(1, 1))
            .sink("0", ratio(0, 1))
            .build()
            .unwrap();
        let c = g.canonical();
        assert_eq!(c.display_id(VertexId(0)), "0");
        assert_eq!(c.display_id(VertexId(1)), "1");
        assert_eq!(c.display_id(VertexId(2)), "x1");
        let x = c.vertex_by_label("x1").unwrap();
        assert_eq!(c.successors(x), &[VertexId(0), VertexId(1)]);
        assert_eq!(c.canonical(), c);
    }

    #[test]
    fn strategy_validity() {
        let g = two_sinks();
        let s = MaxStrategy::empty();
        assert!(s.is_valid_for(&g));
        let g = GameBuilder::new()
            .sink("0", ratio(0, 1))
            .sink("1", ratio(1, 1))
            .max("x", ["0", "1"])
            .build()
            .unwrap();
        let x = g.vertex_by_label("x").unwrap();
        let zero = g.vertex_by_label("0").unwrap();
        let one = g.vertex_by_label("1").unwrap();
        assert!(MaxStrategy::from_pairs([(x, zero)]).is_valid_for(&g));
        assert!(MaxStrategy::from_pairs([(x, one)]).is_valid_for(&g));
        assert!(!MaxStrategy::empty().is_valid_for(&g));
        assert!(!MaxStrategy::from_pairs([(zero, x)]).is_valid_for(&g));
    }
}

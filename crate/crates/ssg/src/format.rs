//! Game and strategy file formats.
//!
//! A game file is a UTF-8 JSON object `{"vertices":[...]}`. Each vertex is
//! one of:
//!
//! ```json
//! {"id":"x3","kind":"max","succ":["r3","x4"]}
//! {"id":"r1","kind":"random","succ":[["0","1/2"],["r3","1/2"]]}
//! {"id":"1","kind":"sink","value":"1"}
//! ```
//!
//! Rationals are strings `"p/q"` or `"k"`. A strategy file is a JSON object
//! mapping controlled-vertex ids to successor ids. Serialization emits
//! vertices (and strategy keys) sorted by id, so output is byte-stable.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{
    parse_rational, rational_to_string, MaxStrategy, MinStrategy, RationalParseError, Ssg, Vertex,
    VertexId, VertexKind,
};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("duplicate vertex id {0:?}")]
    DuplicateId(String),
    #[error("unknown vertex reference {0:?}")]
    UnknownVertex(String),
    #[error("vertex {id:?}: unknown kind {kind:?}")]
    UnknownKind { id: String, kind: String },
    #[error("vertex {id:?}: missing field {field:?}")]
    MissingField { id: String, field: &'static str },
    #[error("vertex {id:?}: field {field:?} does not belong to kind {kind:?}")]
    UnexpectedField {
        id: String,
        field: &'static str,
        kind: String,
    },
    #[error("vertex {id:?}: successor list has the wrong shape for kind {kind:?}")]
    WrongSuccessorShape { id: String, kind: String },
    #[error("vertex {id:?}: {source}")]
    BadRational {
        id: String,
        #[source]
        source: RationalParseError,
    },
    #[error("partial strategy: vertex {0:?} has no choice")]
    PartialStrategy(String),
    #[error("strategy entry {0:?}: not a controlled vertex of the requested player")]
    NotControlled(String),
    #[error("strategy entry {from:?} -> {to:?}: no such arc")]
    NotAnArc { from: String, to: String },
}

#[derive(Serialize, Deserialize)]
struct RawGame {
    vertices: Vec<RawVertex>,
}

#[derive(Serialize, Deserialize)]
struct RawVertex {
    id: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    succ: Option<RawSuccessors>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawSuccessors {
    Plain(Vec<String>),
    Weighted(Vec<(String, String)>),
}

/// Parses a game file. Vertices get dense indices in file order and keep
/// their file ids as labels.
pub fn parse_game(bytes: &[u8]) -> Result<Ssg, FormatError> {
    let raw: RawGame = serde_json::from_slice(bytes)?;
    let mut index: HashMap<String, VertexId> = HashMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if index.insert(v.id.clone(), VertexId(i)).is_some() {
            return Err(FormatError::DuplicateId(v.id.clone()));
        }
    }
    let resolve = |id: &str| -> Result<VertexId, FormatError> {
        index
            .get(id)
            .copied()
            .ok_or_else(|| FormatError::UnknownVertex(id.to_owned()))
    };
    let mut vertices = Vec::with_capacity(raw.vertices.len());
    for v in &raw.vertices {
        let kind = match v.kind.as_str() {
            "max" | "min" => {
                if v.value.is_some() {
                    return Err(FormatError::UnexpectedField {
                        id: v.id.clone(),
                        field: "value",
                        kind: v.kind.clone(),
                    });
                }
                let succ = match &v.succ {
                    Some(RawSuccessors::Plain(list)) => list
                        .iter()
                        .map(|s| resolve(s))
                        .collect::<Result<Vec<_>, _>>()?,
                    Some(RawSuccessors::Weighted(_)) => {
                        return Err(FormatError::WrongSuccessorShape {
                            id: v.id.clone(),
                            kind: v.kind.clone(),
                        })
                    }
                    None => {
                        return Err(FormatError::MissingField {
                            id: v.id.clone(),
                            field: "succ",
                        })
                    }
                };
                if v.kind == "max" {
                    VertexKind::Max { successors: succ }
                } else {
                    VertexKind::Min { successors: succ }
                }
            }
            "random" => {
                if v.value.is_some() {
                    return Err(FormatError::UnexpectedField {
                        id: v.id.clone(),
                        field: "value",
                        kind: v.kind.clone(),
                    });
                }
                let entries = match &v.succ {
                    Some(RawSuccessors::Weighted(list)) => list,
                    Some(RawSuccessors::Plain(_)) => {
                        return Err(FormatError::WrongSuccessorShape {
                            id: v.id.clone(),
                            kind: v.kind.clone(),
                        })
                    }
                    None => {
                        return Err(FormatError::MissingField {
                            id: v.id.clone(),
                            field: "succ",
                        })
                    }
                };
                let mut successors = Vec::with_capacity(entries.len());
                let mut probabilities = Vec::with_capacity(entries.len());
                for (target, prob) in entries {
                    successors.push(resolve(target)?);
                    probabilities.push(parse_rational(prob).map_err(|source| {
                        FormatError::BadRational {
                            id: v.id.clone(),
                            source,
                        }
                    })?);
                }
                VertexKind::Random {
                    successors,
                    probabilities,
                }
            }
            "sink" => {
                if v.succ.is_some() {
                    return Err(FormatError::UnexpectedField {
                        id: v.id.clone(),
                        field: "succ",
                        kind: v.kind.clone(),
                    });
                }
                let text = v.value.as_ref().ok_or_else(|| FormatError::MissingField {
                    id: v.id.clone(),
                    field: "value",
                })?;
                VertexKind::Sink {
                    value: parse_rational(text).map_err(|source| FormatError::BadRational {
                        id: v.id.clone(),
                        source,
                    })?,
                }
            }
            other => {
                return Err(FormatError::UnknownKind {
                    id: v.id.clone(),
                    kind: other.to_owned(),
                })
            }
        };
        vertices.push(Vertex {
            label: Some(v.id.clone()),
            kind,
        });
    }
    Ok(Ssg::new(vertices))
}

/// Serializes a game with vertices sorted by display id. Fails when two
/// vertices share a display id, since the output could not be parsed back.
pub fn serialize_game(game: &Ssg) -> Result<String, FormatError> {
    let mut order: Vec<VertexId> = game.ids().collect();
    order.sort_by_key(|&id| game.display_id(id));
    for pair in order.windows(2) {
        if game.display_id(pair[0]) == game.display_id(pair[1]) {
            return Err(FormatError::DuplicateId(game.display_id(pair[0])));
        }
    }
    let vertices = order
        .into_iter()
        .map(|id| {
            let name = game.display_id(id);
            match &game.vertex(id).kind {
                VertexKind::Max { successors } => RawVertex {
                    id: name,
                    kind: "max".into(),
                    succ: Some(RawSuccessors::Plain(
                        successors.iter().map(|&s| game.display_id(s)).collect(),
                    )),
                    value: None,
                },
                VertexKind::Min { successors } => RawVertex {
                    id: name,
                    kind: "min".into(),
                    succ: Some(RawSuccessors::Plain(
                        successors.iter().map(|&s| game.display_id(s)).collect(),
                    )),
                    value: None,
                },
                VertexKind::Random {
                    successors,
                    probabilities,
                } => RawVertex {
                    id: name,
                    kind: "random".into(),
                    succ: Some(RawSuccessors::Weighted(
                        successors
                            .iter()
                            .zip(probabilities)
                            .map(|(&s, p)| (game.display_id(s), rational_to_string(p)))
                            .collect(),
                    )),
                    value: None,
                },
                VertexKind::Sink { value } => RawVertex {
                    id: name,
                    kind: "sink".into(),
                    succ: None,
                    value: Some(rational_to_string(value)),
                },
            }
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&RawGame { vertices })?;
    text.push('\n');
    Ok(text)
}

fn parse_strategy_map(
    bytes: &[u8],
    game: &Ssg,
    controlled: &[VertexId],
) -> Result<BTreeMap<VertexId, VertexId>, FormatError> {
    let raw: BTreeMap<String, String> = serde_json::from_slice(bytes)?;
    let mut index: HashMap<String, VertexId> = HashMap::new();
    for id in game.ids() {
        index.insert(game.display_id(id), id);
    }
    let mut choices = BTreeMap::new();
    for (from, to) in &raw {
        let from_id = *index
            .get(from)
            .ok_or_else(|| FormatError::UnknownVertex(from.clone()))?;
        if !controlled.contains(&from_id) {
            return Err(FormatError::NotControlled(from.clone()));
        }
        let to_id = *index
            .get(to)
            .ok_or_else(|| FormatError::UnknownVertex(to.clone()))?;
        if !game.has_arc(from_id, to_id) {
            return Err(FormatError::NotAnArc {
                from: from.clone(),
                to: to.clone(),
            });
        }
        choices.insert(from_id, to_id);
    }
    for &v in controlled {
        if !choices.contains_key(&v) {
            return Err(FormatError::PartialStrategy(game.display_id(v)));
        }
    }
    Ok(choices)
}

/// Parses a MAX strategy file against `game`, checking totality and that
/// every choice follows an arc.
pub fn parse_max_strategy(bytes: &[u8], game: &Ssg) -> Result<MaxStrategy, FormatError> {
    Ok(MaxStrategy::new(parse_strategy_map(
        bytes,
        game,
        &game.max_vertices(),
    )?))
}

pub fn parse_min_strategy(bytes: &[u8], game: &Ssg) -> Result<MinStrategy, FormatError> {
    Ok(MinStrategy::new(parse_strategy_map(
        bytes,
        game,
        &game.min_vertices(),
    )?))
}

fn serialize_strategy_map(
    choices: &BTreeMap<VertexId, VertexId>,
    game: &Ssg,
) -> Result<String, FormatError> {
    let map: BTreeMap<String, String> = choices
        .iter()
        .map(|(&from, &to)| (game.display_id(from), game.display_id(to)))
        .collect();
    let mut text = serde_json::to_string_pretty(&map)?;
    text.push('\n');
    Ok(text)
}

pub fn serialize_max_strategy(strategy: &MaxStrategy, game: &Ssg) -> Result<String, FormatError> {
    serialize_strategy_map(strategy.choices(), game)
}

pub fn serialize_min_strategy(strategy: &MinStrategy, game: &Ssg) -> Result<String, FormatError> {
    serialize_strategy_map(strategy.choices(), game)
}

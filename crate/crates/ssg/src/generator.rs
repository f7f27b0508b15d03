//! Seeded random game generation. Identical parameters produce
//! byte-identical serialized games.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::game::{Rational, Ssg, Vertex, VertexId, VertexKind};

/// Parameters of one generated game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorParams {
    pub max_vertices: usize,
    pub min_vertices: usize,
    pub random_vertices: usize,
    pub sinks: usize,
    /// Outdegree of MAX and MIN vertices; random vertices get 1 to this
    /// many successors.
    pub degree: usize,
    /// Largest denominator of probabilities and sink values.
    pub max_denominator: u64,
    pub seed: u64,
    /// Force every MAX vertex to outdegree exactly 2.
    pub require_binary: bool,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            max_vertices: 4,
            min_vertices: 1,
            random_vertices: 3,
            sinks: 2,
            degree: 2,
            max_denominator: 10,
            seed: 1,
            require_binary: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("at least one sink is required")]
    NoSinks,
    #[error("degree must be at least 2")]
    DegreeTooSmall,
    #[error("maximum denominator must be at least 2")]
    DenominatorTooSmall,
    #[error("{needed} distinct successors requested but only {available} other vertices exist")]
    TooFewTargets { needed: usize, available: usize },
}

/// Number of digits used to zero-pad labels of a class of `count` vertices.
fn pad_width(count: usize) -> usize {
    count.saturating_sub(1).to_string().len()
}

/// Generates a validated game, deterministically in the seed. Sink
/// reachability is not enforced: instances where some strategies loop
/// forever are legal and wanted.
pub fn generate(params: &GeneratorParams) -> Result<Ssg, GeneratorError> {
    if params.sinks == 0 {
        return Err(GeneratorError::NoSinks);
    }
    if params.degree < 2 {
        return Err(GeneratorError::DegreeTooSmall);
    }
    if params.max_denominator < 2 {
        return Err(GeneratorError::DenominatorTooSmall);
    }
    let total =
        params.max_vertices + params.min_vertices + params.random_vertices + params.sinks;
    let max_degree = if params.require_binary { 2 } else { params.degree };
    let mut needed = 0;
    if params.max_vertices > 0 {
        needed = needed.max(max_degree);
    }
    if params.min_vertices > 0 {
        needed = needed.max(params.degree);
    }
    if params.random_vertices > 0 {
        needed = needed.max(1);
    }
    let available = total - 1;
    if needed > available {
        return Err(GeneratorError::TooFewTargets { needed, available });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let max_w = pad_width(params.max_vertices);
    let min_w = pad_width(params.min_vertices);
    let rand_w = pad_width(params.random_vertices);
    let sink_w = pad_width(params.sinks);

    // Layout before canonicalization: MAX, MIN, random, sinks.
    let mut vertices: Vec<Vertex> = Vec::with_capacity(total);
    let sample_successors = |rng: &mut ChaCha8Rng, own: usize, count: usize| -> Vec<VertexId> {
        // Distinct targets among all other vertices.
        let mut picked = rand::seq::index::sample(rng, total - 1, count).into_vec();
        picked.sort_unstable();
        picked
            .into_iter()
            .map(|i| VertexId(if i >= own { i + 1 } else { i }))
            .collect()
    };

    for i in 0..params.max_vertices {
        let successors = sample_successors(&mut rng, i, max_degree);
        vertices.push(Vertex {
            label: Some(format!("x{i:0max_w$}")),
            kind: VertexKind::Max { successors },
        });
    }
    for i in 0..params.min_vertices {
        let own = params.max_vertices + i;
        let successors = sample_successors(&mut rng, own, params.degree);
        vertices.push(Vertex {
            label: Some(format!("n{i:0min_w$}")),
            kind: VertexKind::Min { successors },
        });
    }
    for i in 0..params.random_vertices {
        let own = params.max_vertices + params.min_vertices + i;
        let most = params
            .degree
            .min(params.max_denominator as usize)
            .min(total - 1);
        let count = rng.gen_range(1..=most);
        let successors = sample_successors(&mut rng, own, count);
        let probabilities = cut_distribution(&mut rng, count, params.max_denominator);
        vertices.push(Vertex {
            label: Some(format!("r{i:0rand_w$}")),
            kind: VertexKind::Random {
                successors,
                probabilities,
            },
        });
    }
    for i in 0..params.sinks {
        let value = if params.sinks >= 2 && i == 0 {
            Rational::from(BigInt::from(0))
        } else if params.sinks >= 2 && i == 1 {
            Rational::from(BigInt::from(1))
        } else {
            let q = params.max_denominator;
            Rational::new(BigInt::from(rng.gen_range(0..=q)), BigInt::from(q))
        };
        vertices.push(Vertex {
            label: Some(format!("s{i:0sink_w$}")),
            kind: VertexKind::Sink { value },
        });
    }

    let game = Ssg::new(vertices).canonical();
    debug_assert!(game.validate().is_empty(), "generated game is well formed");
    Ok(game)
}

/// Splits `[0,1]` into `count` positive parts by sampling distinct cut
/// points on the grid of multiples of `1/q`.
fn cut_distribution(rng: &mut ChaCha8Rng, count: usize, q: u64) -> Vec<Rational> {
    if count == 1 {
        return vec![Rational::one()];
    }
    let mut cuts: Vec<u64> = rand::seq::index::sample(rng, (q - 1) as usize, count - 1)
        .into_iter()
        .map(|i| i as u64 + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(q);
    let mut parts = Vec::with_capacity(count);
    let mut previous = 0;
    for cut in cuts {
        parts.push(Rational::new(BigInt::from(cut - previous), BigInt::from(q)));
        previous = cut;
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize_game;
    use num_traits::Zero;

    #[test]
    fn identical_seeds_give_identical_bytes() {
        let params = GeneratorParams {
            max_vertices: 6,
            min_vertices: 2,
            random_vertices: 5,
            sinks: 3,
            degree: 3,
            max_denominator: 10,
            seed: 99,
            require_binary: false,
        };
        let a = generate(&params).unwrap();
        let b = generate(&params).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_game(&a).unwrap(), serialize_game(&b).unwrap());
        let other = generate(&GeneratorParams {
            seed: 100,
            ..params
        })
        .unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn binary_flag_caps_max_outdegree() {
        let params = GeneratorParams {
            max_vertices: 5,
            degree: 4,
            random_vertices: 4,
            require_binary: true,
            ..GeneratorParams::default()
        };
        let game = generate(&params).unwrap();
        assert!(game.is_binary());
        for m in game.min_vertices() {
            assert_eq!(game.successors(m).len(), 4);
        }
    }

    #[test]
    fn generated_games_validate() {
        for seed in 0..60 {
            let params = GeneratorParams {
                max_vertices: (seed % 7) as usize,
                min_vertices: (seed % 3) as usize,
                random_vertices: (seed % 5) as usize,
                sinks: 1 + (seed % 3) as usize,
                degree: 2 + (seed % 3) as usize,
                max_denominator: 2 + seed % 9,
                seed,
                require_binary: seed % 2 == 0,
            };
            let game = generate(&params).unwrap();
            let violations = game.validate();
            assert!(
                violations.is_empty(),
                "seed {seed}: {:?}",
                violations
                    .iter()
                    .map(|v| v.message(&game))
                    .collect::<Vec<_>>()
            );
            assert_eq!(
                game.vertex_count(),
                params.max_vertices + params.min_vertices + params.random_vertices + params.sinks
            );
        }
    }

    #[test]
    fn two_sinks_include_zero_and_one() {
        let params = GeneratorParams::default();
        let game = generate(&params).unwrap();
        let values: Vec<Rational> = game
            .sink_vertices()
            .into_iter()
            .map(|s| game.vertex(s).sink_value().unwrap().clone())
            .collect();
        assert!(values.iter().any(|v| v.is_zero()));
        assert!(values.iter().any(|v| v.is_one()));
    }

    #[test]
    fn impossible_constraints_are_rejected() {
        let params = GeneratorParams {
            max_vertices: 1,
            min_vertices: 0,
            random_vertices: 0,
            sinks: 1,
            degree: 3,
            require_binary: false,
            ..GeneratorParams::default()
        };
        assert!(matches!(
            generate(&params),
            Err(GeneratorError::TooFewTargets { .. })
        ));
        assert_eq!(
            generate(&GeneratorParams {
                sinks: 0,
                ..GeneratorParams::default()
            }),
            Err(GeneratorError::NoSinks)
        );
    }

    #[test]
    fn distribution_parts_are_positive_and_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for count in 1..=6 {
            let parts = cut_distribution(&mut rng, count, 12);
            assert_eq!(parts.len(), count);
            assert!(parts.iter().all(|p| *p > Rational::zero()));
            let sum: Rational = parts.iter().sum();
            assert!(sum.is_one());
        }
    }
}

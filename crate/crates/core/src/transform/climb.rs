//! Best-improvement local search over trees.
//!
//! Moves are [`shift_degree2_vertex`] and [`reattach_leaf`]. When no single
//! move strictly improves the index, every composition of two moves is
//! tried. When that fails too, the search takes an equal-valued step to an
//! unvisited tree, at most `n` times in a row, before declaring a local
//! optimum. Ties are broken by the smallest canonical code, so a run is a
//! function of its inputs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{reattach_leaf, reattach_matches, shift_degree2_vertex, shift_matches, RewriteError};
use crate::canon::{canonical_form, CanonicalCode};
use crate::families::{construct, FamilySpec};
use crate::graph::{Graph, Vertex};
use crate::graph6;
use crate::indices::{azi, Rational};

#[derive(Debug, Clone)]
pub enum ClimbSeed {
    Graph(Graph),
    Family(FamilySpec),
    /// A uniformly random labeled tree drawn from the run's RNG seed.
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClimbStep {
    pub description: String,
    #[serde(serialize_with = "crate::verify::serialize_rational")]
    pub azi: Rational,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClimbTrace {
    pub n: usize,
    pub rng_seed: u64,
    pub seed_graph6: String,
    #[serde(serialize_with = "crate::verify::serialize_rational")]
    pub seed_azi: Rational,
    pub steps: Vec<ClimbStep>,
    #[serde(skip)]
    pub best: Graph,
    pub best_graph6: String,
    #[serde(serialize_with = "crate::verify::serialize_rational")]
    pub best_azi: Rational,
}

#[derive(Debug, Clone, Copy)]
enum Move {
    Shift(Vertex, (Vertex, Vertex)),
    Reattach(Vertex, Vertex),
}

impl Move {
    fn apply(&self, t: &Graph) -> Result<super::RewriteOutcome, RewriteError> {
        match *self {
            Move::Shift(v, e) => shift_degree2_vertex(t, v, e),
            Move::Reattach(leaf, s) => reattach_leaf(t, leaf, s),
        }
    }

    fn describe(&self) -> String {
        match *self {
            Move::Shift(v, (a, b)) => format!("shift {v} onto {a}-{b}"),
            Move::Reattach(leaf, s) => format!("reattach leaf {leaf} to {s}"),
        }
    }
}

fn moves(t: &Graph) -> Vec<Move> {
    shift_matches(t)
        .into_iter()
        .map(|(v, e)| Move::Shift(v, e))
        .chain(
            reattach_matches(t)
                .into_iter()
                .map(|(l, s)| Move::Reattach(l, s)),
        )
        .collect()
}

/// Neighbours of `t` as `(description, graph, azi)`.
fn neighbours(t: &Graph, current: &Rational) -> Vec<(String, Graph, Rational)> {
    moves(t)
        .into_iter()
        .filter_map(|m| {
            let out = m.apply(t).ok()?;
            let value = current - &out.azi_delta;
            Some((m.describe(), out.result, value))
        })
        .collect()
}

/// The strictly improving candidate with the largest value, ties by code.
fn pick_best(
    candidates: Vec<(String, Graph, Rational)>,
    current: &Rational,
) -> Option<(String, Graph, Rational)> {
    let top = candidates.iter().map(|c| &c.2).max()?.clone();
    if &top <= current {
        return None;
    }
    candidates
        .into_iter()
        .filter(|c| c.2 == top)
        .map(|c| (canonical_form(&c.1), c))
        .min_by(|a: &(CanonicalCode, _), b| a.0.cmp(&b.0).then_with(|| a.1 .0.cmp(&b.1 .0)))
        .map(|(_, c)| c)
}

/// The equal-valued candidate with the smallest unvisited code.
fn pick_sideways(
    candidates: Vec<(String, Graph, Rational)>,
    current: &Rational,
    visited: &BTreeSet<CanonicalCode>,
) -> Option<(String, Graph, Rational)> {
    candidates
        .into_iter()
        .filter(|c| &c.2 == current)
        .map(|c| (canonical_form(&c.1), c))
        .filter(|(code, _)| !visited.contains(code))
        .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1 .0.cmp(&b.1 .0)))
        .map(|(_, c)| c)
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Graph::from_edge_list(n, &edges).expect("valid");
    }
    let prufer: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &prufer {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).expect("Prüfer decoding gives a tree")
}

pub fn hill_climb_max_azi(
    n: usize,
    seed: ClimbSeed,
    max_steps: usize,
    rng_seed: u64,
) -> Result<ClimbTrace, RewriteError> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let start = match seed {
        ClimbSeed::Graph(g) => g,
        ClimbSeed::Family(spec) => {
            construct(&spec).map_err(|e| RewriteError::PatternMismatch(e.to_string()))?
        }
        ClimbSeed::Random => random_tree(n, &mut rng),
    };
    if start.vertex_count() != n || !start.is_tree() {
        return Err(RewriteError::PatternMismatch(format!(
            "seed must be a tree on {n} vertices"
        )));
    }
    let start_azi = azi(&start)?;
    let mut current = start.clone();
    let mut value = start_azi.clone();
    let mut steps = Vec::new();
    let mut visited = BTreeSet::from([canonical_form(&start)]);
    let mut sideways = 0;
    while steps.len() < max_steps {
        let single = neighbours(&current, &value);
        let mut chosen = pick_best(single.clone(), &value);
        if chosen.is_none() {
            let mut pairs: Vec<_> = single
                .iter()
                .flat_map(|(d1, g1, v1)| {
                    neighbours(g1, v1)
                        .into_iter()
                        .map(move |(d2, g2, v2)| (format!("{d1}; {d2}"), g2, v2))
                })
                .collect();
            chosen = pick_best(pairs.clone(), &value);
            if chosen.is_none() && sideways < n {
                pairs.extend(single);
                chosen = pick_sideways(pairs, &value, &visited);
                sideways += 1;
            }
        }
        let Some((description, next, next_value)) = chosen else {
            break;
        };
        if next_value > value {
            sideways = 0;
        }
        visited.insert(canonical_form(&next));
        steps.push(ClimbStep {
            description,
            azi: next_value.clone(),
            graph6: graph6::encode(&next),
        });
        current = next;
        value = next_value;
    }
    Ok(ClimbTrace {
        n,
        rng_seed,
        seed_graph6: graph6::encode(&start),
        seed_azi: start_azi,
        steps,
        best_graph6: graph6::encode(&current),
        best: current,
        best_azi: value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{integer, rational};

    #[test]
    fn zero_steps_returns_seed() {
        let trace = hill_climb_max_azi(6, ClimbSeed::Family(FamilySpec::Star(6)), 0, 1).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(trace.best, construct(&FamilySpec::Star(6)).unwrap());
    }

    #[test]
    fn star_four_climbs_to_path() {
        let trace = hill_climb_max_azi(4, ClimbSeed::Family(FamilySpec::Star(4)), 10, 0).unwrap();
        assert_eq!(trace.best_azi, integer(24));
        assert_eq!(trace.best.degree_sequence(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn leaves_the_path_at_ten() {
        let trace = hill_climb_max_azi(10, ClimbSeed::Family(FamilySpec::Path(10)), 50, 0).unwrap();
        assert!(
            trace.best_azi >= rational(729, 64) + integer(64),
            "{}",
            trace.best_azi
        );
        assert!(trace.best.is_tree());
    }

    #[test]
    fn values_never_decrease() {
        let trace = hill_climb_max_azi(9, ClimbSeed::Random, 30, 7).unwrap();
        let mut prev = trace.seed_azi.clone();
        for s in &trace.steps {
            assert!(s.azi >= prev);
            assert_eq!(azi(&graph6::decode(&s.graph6).unwrap()).unwrap(), s.azi);
            prev = s.azi.clone();
        }
        let again = hill_climb_max_azi(9, ClimbSeed::Random, 30, 7).unwrap();
        assert_eq!(trace, again);
    }

    #[test]
    fn random_trees_are_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..12 {
            assert!(random_tree(n, &mut rng).is_tree());
        }
    }

    #[test]
    fn rejects_non_tree_seed() {
        assert!(hill_climb_max_azi(5, ClimbSeed::Family(FamilySpec::Cycle(5)), 3, 0).is_err());
        assert!(hill_climb_max_azi(6, ClimbSeed::Family(FamilySpec::Star(5)), 3, 0).is_err());
    }
}

//! Named graph families and the path-structure predicates used for the
//! maximum-index trees.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("graph is not a tree")]
    NotATree,
}

/// A constructed family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Star(usize),
    Path(usize),
    Cycle(usize),
    /// The star `S_n` with `k` independent edges joining pairs of leaves.
    G0 {
        n: usize,
        k: usize,
    },
    /// Two adjacent degree-3 vertices carrying four pendant chains of two or
    /// more vertices each.
    TPlus(usize),
}

impl FamilySpec {
    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Star(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::TPlus(n) => n,
            FamilySpec::G0 { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let ok = match *self {
            FamilySpec::Star(n) | FamilySpec::Path(n) => n >= 1,
            FamilySpec::Cycle(n) => n >= 3,
            FamilySpec::G0 { n, k } => n >= 3 && 2 * k < n,
            FamilySpec::TPlus(n) => n >= 10,
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::InvalidSpec(format!(
                "{self} violates its size constraints"
            )))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::G0 { n, k } => write!(f, "g0:{n},{k}"),
            FamilySpec::TPlus(n) => write!(f, "tplus:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `star:7`, `path:10`, `cycle:5`, `g0:9,3`, `tplus:12`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::InvalidSpec(s.to_string());
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("star", &[n]) => FamilySpec::Star(n),
            ("path", &[n]) => FamilySpec::Path(n),
            ("cycle", &[n]) => FamilySpec::Cycle(n),
            ("g0", &[n, k]) => FamilySpec::G0 { n, k },
            ("tplus", &[n]) => FamilySpec::TPlus(n),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn construct(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let edges: Vec<(Vertex, Vertex)> = match *spec {
        FamilySpec::Star(n) => (1..n).map(|v| (0, v)).collect(),
        FamilySpec::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
        FamilySpec::Cycle(n) => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        FamilySpec::G0 { n, k } => (1..n)
            .map(|v| (0, v))
            .chain((0..k).map(|i| (2 * i + 1, 2 * i + 2)))
            .collect(),
        FamilySpec::TPlus(n) => tplus_edges(n),
    };
    Ok(Graph::from_edge_list(spec.vertex_count(), &edges).expect("family edges are valid"))
}

/// Centres 0 and 1; chains 0 and 1 hang off vertex 0, chains 2 and 3 off
/// vertex 1, with the `n - 2` chain vertices split as evenly as possible and
/// longer chains first.
fn tplus_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    let rest = n - 2;
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for chain in 0..4 {
        let len = rest / 4 + usize::from(chain < rest % 4);
        let mut prev = if chain < 2 { 0 } else { 1 };
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    edges
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PathKind {
    Pendent,
    Internal,
}

/// A maximal path whose interior vertices all have degree 2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
    pub kind: PathKind,
}

impl PathWitness {
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

/// Follows degree-2 vertices from `start` through `first` until a vertex of
/// degree other than 2, or until the walk returns to `start`.
fn walk_chain(g: &Graph, start: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut chain = vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while g.degree(cur) == 2 && cur != start {
        let nbrs = g.neighbors(cur);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        chain.push(next);
        prev = cur;
        cur = next;
    }
    chain
}

/// Pendent paths are listed from the leaf; internal paths from the end whose
/// `(endpoint, neighbour)` pair is smaller. Output is sorted.
pub fn pendent_and_internal_paths(g: &Graph) -> Vec<PathWitness> {
    let mut out = Vec::new();
    for v in g.vertices() {
        let d = g.degree(v);
        if d == 1 {
            let chain = walk_chain(g, v, g.neighbors(v)[0]);
            if g.degree(*chain.last().unwrap()) > 2 {
                out.push(PathWitness {
                    vertices: chain,
                    kind: PathKind::Pendent,
                });
            }
        } else if d > 2 {
            for &w in g.neighbors(v) {
                let chain = walk_chain(g, v, w);
                let end = *chain.last().unwrap();
                if end == v || g.degree(end) <= 2 {
                    continue;
                }
                let penultimate = chain[chain.len() - 2];
                if (v, w) < (end, penultimate) {
                    out.push(PathWitness {
                        vertices: chain,
                        kind: PathKind::Internal,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

pub fn star_type_pendent_vertices(g: &Graph) -> BTreeSet<Vertex> {
    g.vertices()
        .filter(|&v| g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) > 2)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub has_internal_path_ge2: bool,
    pub has_pendent_path_ge4: bool,
    pub pendent_paths_len3: usize,
}

impl Theorem2Report {
    /// No internal path of length >= 2, no pendent path of length >= 4, at
    /// most one pendent path of length 3.
    pub fn all_clear(&self) -> bool {
        !self.has_internal_path_ge2 && !self.has_pendent_path_ge4 && self.pendent_paths_len3 <= 1
    }
}

pub fn theorem2_report(t: &Graph) -> Result<Theorem2Report, FamilyError> {
    if !t.is_tree() {
        return Err(FamilyError::NotATree);
    }
    let paths = pendent_and_internal_paths(t);
    let internal = |p: &&PathWitness| p.kind == PathKind::Internal;
    let pendent = |p: &&PathWitness| p.kind == PathKind::Pendent;
    Ok(Theorem2Report {
        has_internal_path_ge2: paths.iter().filter(internal).any(|p| p.length() >= 2),
        has_pendent_path_ge4: paths.iter().filter(pendent).any(|p| p.length() >= 4),
        pendent_paths_len3: paths
            .iter()
            .filter(pendent)
            .filter(|p| p.length() == 3)
            .count(),
    })
}

pub fn every_edge_deg2_incident(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.degree(u) == 2 || g.degree(v) == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::{cycle_count, is_cactus};
    use crate::indices::{azi, f_bound, integer, rational};

    fn spider(legs: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::from_edge_list(next, &edges).unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["star:7", "path:10", "cycle:5", "g0:9,3", "tplus:12"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert_eq!("g0:9,3".parse(), Ok(FamilySpec::G0 { n: 9, k: 3 }));
        for bad in [
            "", "star", "star:x", "cycle:2", "g0:5,3", "tplus:9", "wheel:5", "g0:5",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn g0_members() {
        let g = construct(&FamilySpec::G0 { n: 5, k: 2 }).unwrap();
        assert_eq!(azi(&g).unwrap(), integer(48));
        assert_eq!(azi(&g).unwrap(), f_bound(5, 2).unwrap());
        assert_eq!(cycle_count(&g), Ok(2));
        assert!(is_cactus(
            &construct(&FamilySpec::G0 { n: 6, k: 2 }).unwrap()
        ));
        assert_eq!(
            construct(&FamilySpec::G0 { n: 7, k: 0 }).unwrap(),
            construct(&FamilySpec::Star(7)).unwrap()
        );
        assert!(construct(&FamilySpec::G0 { n: 6, k: 3 }).is_err());
    }

    #[test]
    fn tplus_value() {
        let t = construct(&FamilySpec::TPlus(10)).unwrap();
        assert!(t.is_tree());
        assert_eq!(azi(&t).unwrap(), rational(729, 64) + integer(64));
        assert_eq!(t.degree_sequence(), vec![3, 3, 2, 2, 2, 2, 1, 1, 1, 1]);
        assert!(construct(&FamilySpec::TPlus(9)).is_err());
    }

    #[test]
    fn paths_on_path_graph_are_empty() {
        let p7 = construct(&FamilySpec::Path(7)).unwrap();
        assert!(pendent_and_internal_paths(&p7).is_empty());
        let r = theorem2_report(&construct(&FamilySpec::Path(10)).unwrap()).unwrap();
        assert_eq!(
            r,
            Theorem2Report {
                has_internal_path_ge2: false,
                has_pendent_path_ge4: false,
                pendent_paths_len3: 0
            }
        );
    }

    #[test]
    fn spider_paths() {
        let paths = pendent_and_internal_paths(&spider(&[2, 2, 2]));
        assert_eq!(paths.len(), 3);
        assert!(paths
            .iter()
            .all(|p| p.kind == PathKind::Pendent && p.length() == 2));
    }

    #[test]
    fn tplus_paths() {
        let t = construct(&FamilySpec::TPlus(10)).unwrap();
        let paths = pendent_and_internal_paths(&t);
        let pendent: Vec<_> = paths
            .iter()
            .filter(|p| p.kind == PathKind::Pendent)
            .collect();
        let internal: Vec<_> = paths
            .iter()
            .filter(|p| p.kind == PathKind::Internal)
            .collect();
        assert_eq!(pendent.len(), 4);
        assert!(pendent.iter().all(|p| p.length() == 2));
        assert_eq!(internal.len(), 1);
        assert_eq!(internal[0].vertices, vec![0, 1]);
        assert!(theorem2_report(&t).unwrap().all_clear());
        assert_eq!(theorem2_report(&t).unwrap().pendent_paths_len3, 0);
    }

    #[test]
    fn broom_with_long_chain() {
        // degree-3 vertex 0 with two leaves and a chain of five edges
        let edges = [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
        let g = Graph::from_edge_list(8, &edges).unwrap();
        assert!(theorem2_report(&g).unwrap().has_pendent_path_ge4);
    }

    #[test]
    fn report_needs_tree() {
        let c = construct(&FamilySpec::Cycle(5)).unwrap();
        assert_eq!(theorem2_report(&c), Err(FamilyError::NotATree));
    }

    #[test]
    fn cycle_with_one_branch_vertex_has_no_internal_path() {
        // triangle 0-1-2 with pendant 3 at 0: the walk around the triangle
        // returns to its start
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(pendent_and_internal_paths(&g)
            .iter()
            .all(|p| p.kind == PathKind::Pendent));
    }

    #[test]
    fn star_type() {
        let s5 = construct(&FamilySpec::Star(5)).unwrap();
        assert_eq!(
            star_type_pendent_vertices(&s5),
            BTreeSet::from([1, 2, 3, 4])
        );
        assert!(star_type_pendent_vertices(&construct(&FamilySpec::Path(6)).unwrap()).is_empty());
        // chair: centre 0 with leaves 1, 2 and chain 0-3-4
        let chair = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(star_type_pendent_vertices(&chair), BTreeSet::from([1, 2]));
    }

    #[test]
    fn deg2_incidence() {
        assert!(every_edge_deg2_incident(
            &construct(&FamilySpec::Path(7)).unwrap()
        ));
        assert!(!every_edge_deg2_incident(
            &construct(&FamilySpec::Star(4)).unwrap()
        ));
        assert!(!every_edge_deg2_incident(
            &construct(&FamilySpec::TPlus(10)).unwrap()
        ));
    }
}

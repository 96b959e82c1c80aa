//! Canonical labeling by colour refinement and individualization.
//!
//! The search tree is explored completely except for subtrees that are
//! images of already explored ones under an automorphism found along the way,
//! so the result is exact for every input; it is only slow on graphs with
//! large, highly regular automorphism-free structure, which do not occur at
//! the sizes used here.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{Graph, Vertex};
use crate::graph6;

/// graph6 bytes of the canonically relabeled graph. Equal codes mean
/// isomorphic graphs and vice versa.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::decode(self.as_str()).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<Vertex>,
    /// Smallest vertex of each vertex's orbit under the automorphisms found.
    pub orbit_rep: Vec<Vertex>,
    pub code: CanonicalCode,
}

impl CanonicalLabeling {
    /// One vertex per automorphism orbit, ascending.
    pub fn orbit_representatives(&self) -> Vec<Vertex> {
        (0..self.orbit_rep.len())
            .filter(|&v| self.orbit_rep[v] == v)
            .collect()
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).code
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g).labeling)
}

pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.vertex_count();
    let mut search = Search::new(g);
    let colors = search.refine(vec![0; n]);
    let mut path = Vec::new();
    search.descend(colors, &mut path);
    let best = search.best.expect("search visits at least one leaf");
    let mut uf = UnionFind::new(n);
    for gamma in &search.automorphisms {
        for (v, &w) in gamma.iter().enumerate() {
            uf.union(v, w);
        }
    }
    let orbit_rep = (0..n).map(|v| uf.min_of(v)).collect();
    CanonicalLabeling {
        labeling: best.colors.iter().map(|&c| c as Vertex).collect(),
        orbit_rep,
        code: CanonicalCode(best.cert),
    }
}

struct Leaf {
    colors: Vec<u32>,
    cert: Vec<u8>,
    path: Vec<Vertex>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    matrix: Vec<bool>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        let mut matrix = vec![false; n * n];
        for (u, v) in g.edges() {
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Search {
            g,
            n,
            matrix,
            first: None,
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Equitable refinement. Colours stay dense and order-preserving, so a
    /// vertex's position in the ordered partition never moves once it is a
    /// singleton.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let mut cells = densify(&mut colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, Vertex)> = (0..self.n)
                .map(|v| {
                    let mut nc: Vec<u32> = self.g.neighbors(v).iter().map(|&w| colors[w]).collect();
                    nc.sort_unstable();
                    (colors[v], nc, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; self.n];
            let mut rank = 0u32;
            for i in 0..sigs.len() {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank += 1;
                }
                next[sigs[i].2] = rank;
            }
            let new_cells = if self.n == 0 { 0 } else { rank as usize + 1 };
            colors = next;
            if new_cells == cells {
                return colors;
            }
            cells = new_cells;
        }
    }

    fn individualize(&self, colors: &[u32], v: Vertex) -> Vec<u32> {
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + (w != v) as u32)
            .collect();
        self.refine(split)
    }

    fn certificate(&self, colors: &[u32]) -> Vec<u8> {
        let n = self.n;
        let mut inverse = vec![0; n];
        for (v, &c) in colors.iter().enumerate() {
            inverse[c as usize] = v;
        }
        let mut relabeled = vec![Vec::new(); n];
        for j in 0..n {
            for i in 0..j {
                if self.matrix[inverse[i] * n + inverse[j]] {
                    relabeled[i].push(j);
                    relabeled[j].push(i);
                }
            }
        }
        graph6::encode_bytes(&Graph::from_raw_adjacency(relabeled))
    }

    /// Returns `Some(depth)` to unwind to the node at that depth.
    fn descend(&mut self, colors: Vec<u32>, path: &mut Vec<Vertex>) -> Option<usize> {
        let depth = path.len();
        let Some(target) = first_nonsingleton_cell(&colors) else {
            return self.visit_leaf(colors, path);
        };
        let cell: Vec<Vertex> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<Vertex> = Vec::new();
        for &v in &cell {
            if self.equivalent_to_tried(path, &tried, v) {
                continue;
            }
            tried.push(v);
            let child = self.individualize(&colors, v);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with a tried vertex under the known
    /// automorphisms fixing the current prefix pointwise.
    fn equivalent_to_tried(&self, path: &[Vertex], tried: &[Vertex], v: Vertex) -> bool {
        if tried.is_empty() {
            return false;
        }
        let stabilizing: Vec<&Vec<Vertex>> = self
            .automorphisms
            .iter()
            .filter(|gamma| path.iter().all(|&p| gamma[p] == p))
            .collect();
        if stabilizing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for gamma in stabilizing {
            for (a, &b) in gamma.iter().enumerate() {
                uf.union(a, b);
            }
        }
        let root = uf.find(v);
        tried.iter().any(|&t| uf.find(t) == root)
    }

    fn visit_leaf(&mut self, colors: Vec<u32>, path: &[Vertex]) -> Option<usize> {
        let cert = self.certificate(&colors);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                colors,
                cert,
                path: path.to_vec(),
            };
            self.first = Some(Leaf {
                colors: leaf.colors.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let gamma = automorphism(&first.colors, &colors);
            let level = divergence(&first.path, path);
            self.automorphisms.push(gamma);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best set with first");
        match cert.cmp(&best.cert) {
            Ordering::Greater => {
                self.best = Some(Leaf {
                    colors,
                    cert,
                    path: path.to_vec(),
                });
                None
            }
            Ordering::Equal => {
                let gamma = automorphism(&best.colors, &colors);
                let level = divergence(&best.path, path);
                self.automorphisms.push(gamma);
                Some(level)
            }
            Ordering::Less => None,
        }
    }
}

/// Maps the vertex at each position of `from` to the vertex at the same
/// position of `to`.
fn automorphism(from: &[u32], to: &[u32]) -> Vec<Vertex> {
    let n = from.len();
    let mut at_position = vec![0; n];
    for (v, &c) in to.iter().enumerate() {
        at_position[c as usize] = v;
    }
    from.iter().map(|&c| at_position[c as usize]).collect()
}

fn divergence(a: &[Vertex], b: &[Vertex]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn first_nonsingleton_cell(colors: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; colors.len()];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}

/// Renumbers colours to `0..k` preserving order; returns `k`.
fn densify(colors: &mut [u32]) -> usize {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
    distinct.len()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // keeps the smaller label as root
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, x: usize) -> usize {
        self.find(x)
    }
}

//! Free trees via the Wright-Richmond-Odlyzko-McKay successor on level
//! sequences, each tree rooted at its centre (or one of its two centres).
//!
//! A level sequence lists vertex depths in preorder. Successive rooted
//! trees come from the Beyer-Hedetniemi step; a candidate is a valid free
//! tree when its first root subtree is strictly shallower than the rest (or
//! equally deep but not larger, and not lexicographically later), and
//! invalid candidates jump straight to the next valid one.

use super::GraphStream;
use crate::graph::{Graph, Vertex};

/// Every isomorphism class of `n`-vertex trees exactly once, path first and
/// star last.
pub fn trees(n: usize) -> GraphStream {
    GraphStream::new(FreeTrees::new(n))
}

/// Iterator over level sequences; `next` yields the tree graph.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    small_done: bool,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        let layout = (n >= 3).then(|| {
            let mut l: Vec<usize> = (0..=n / 2).collect();
            l.extend(1..n.div_ceil(2));
            l
        });
        FreeTrees {
            n,
            layout,
            small_done: false,
        }
    }

    /// The next level sequence, or `None` after the star.
    pub fn next_layout(&mut self) -> Option<Vec<usize>> {
        if self.n < 3 {
            if self.small_done || self.n == 0 {
                return None;
            }
            self.small_done = true;
            return Some((0..self.n).collect());
        }
        let candidate = self.layout.take()?;
        let tree = next_valid(candidate);
        self.layout = next_rooted(&tree, None);
        Some(tree)
    }
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_layout().map(|l| layout_to_graph(&l))
    }
}

/// Beyer-Hedetniemi successor. `p` defaults to the last position whose level
/// exceeds 1.
fn next_rooted(layout: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = layout.len() - 1;
            while layout[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while layout[q] != layout[p] - 1 {
        q -= 1;
    }
    let mut result = layout.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

/// The root's first subtree (levels shifted by one) and the remaining tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &l)| l == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn next_valid(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("p >= 1");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix = new_left_height + 1;
        for (slot, level) in next[len - suffix..].iter_mut().zip(1..) {
            *slot = level;
        }
    }
    next
}

pub(crate) fn layout_to_graph(layout: &[usize]) -> Graph {
    let n = layout.len();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(n.saturating_sub(1));
    let mut stack: Vec<Vertex> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if layout[top] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            edges.push((parent, i));
        }
        stack.push(i);
    }
    Graph::from_edge_list(n, &edges).expect("level sequences give valid trees")
}

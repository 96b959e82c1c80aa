//! Cacti grown block by block.
//!
//! Every cactus on two or more vertices has a leaf block (a bridge or a
//! cycle meeting the rest in at most one vertex), so each class in
//! `C(n, k)` arises from `C(n - 1, k)` by hanging a pendant edge, or from
//! `C(n - l + 1, k - 1)` by gluing an `l`-cycle at a vertex. Attachment points
//! are taken one per automorphism orbit of the parent and duplicates are
//! dropped by canonical code; the class is emitted in canonical-code order
//! with canonical labels, so output is reproducible byte for byte.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::GraphStream;
use crate::canon::{canonical_labeling, CanonicalCode};
use crate::graph::{Graph, Vertex};

pub fn cacti(n: usize, k: usize) -> GraphStream {
    if n == 0 || 2 * k >= n {
        return GraphStream::empty_domain();
    }
    let mut memo = HashMap::new();
    let graphs = class(n, k, &mut memo);
    GraphStream::new(graphs.into_iter())
}

fn class(n: usize, k: usize, memo: &mut HashMap<(usize, usize), Vec<Graph>>) -> Vec<Graph> {
    if let Some(found) = memo.get(&(n, k)) {
        return found.clone();
    }
    if n == 1 {
        return if k == 0 {
            vec![Graph::empty(1)]
        } else {
            Vec::new()
        };
    }
    let mut jobs: Vec<(Graph, usize)> = Vec::new();
    if 2 * k < n - 1 {
        jobs.extend(class(n - 1, k, memo).into_iter().map(|g| (g, 1)));
    }
    if k >= 1 {
        for len in 3..=n {
            let parent_n = n - len + 1;
            if 2 * (k - 1) < parent_n {
                jobs.extend(class(parent_n, k - 1, memo).into_iter().map(|g| (g, len)));
            }
        }
    }
    let found: BTreeMap<CanonicalCode, ()> = jobs
        .par_iter()
        .flat_map_iter(|(parent, len)| {
            let reps = canonical_labeling(parent).orbit_representatives();
            let len = *len;
            reps.into_iter()
                .map(move |v| canonical_labeling(&attach(parent, v, len)).code)
        })
        .map(|code| (code, ()))
        .collect();
    let graphs: Vec<Graph> = found.keys().map(CanonicalCode::to_graph).collect();
    memo.insert((n, k), graphs.clone());
    graphs
}

/// Hangs a pendant edge (`len == 1`) or a cycle of `len` vertices at `v`.
fn attach(parent: &Graph, v: Vertex, len: usize) -> Graph {
    if len == 1 {
        return parent.with_new_vertex(&[v]).0;
    }
    let mut g = parent.clone();
    let mut prev = v;
    for i in 1..len {
        let attach_to = if i == len - 1 {
            vec![prev, v]
        } else {
            vec![prev]
        };
        let (next, new) = g.with_new_vertex(&attach_to);
        g = next;
        prev = new;
    }
    g
}

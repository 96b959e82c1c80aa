//! Reference enumeration: every labeled graph with `n - 1 + k` edges,
//! filtered to cacti and deduplicated by canonical code.

use std::collections::BTreeSet;

use super::{EnumError, GraphStream};
use crate::blocks::is_cactus;
use crate::canon::{canonical_form, CanonicalCode};
use crate::graph::Graph;

pub const BRUTE_FORCE_MAX_N: usize = 8;

pub fn brute_force_cacti(n: usize, k: usize) -> Result<GraphStream, EnumError> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(EnumError::RefusedTooLarge(n));
    }
    if n == 0 || 2 * k >= n {
        return Ok(GraphStream::empty_domain());
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = n - 1 + k;
    let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
    if m <= pairs.len() {
        for mask in Combinations::new(pairs.len(), m) {
            if !connected(n, &pairs, mask) {
                continue;
            }
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edge_list(n, &edges).expect("pairs are in range");
            if is_cactus(&g) {
                codes.insert(canonical_form(&g));
            }
        }
    }
    let graphs: Vec<Graph> = codes.iter().map(CanonicalCode::to_graph).collect();
    Ok(GraphStream::new(graphs.into_iter()))
}

fn connected(n: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut adj = [0u32; BRUTE_FORCE_MAX_N];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let mut reached = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, row) in adj.iter().enumerate().take(n) {
            if frontier >> v & 1 == 1 {
                next |= row;
            }
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == (1u32 << n) - 1
}

/// All `width`-bit masks with exactly `ones` set bits, ascending (Gosper).
struct Combinations {
    next: Option<u32>,
    limit: u32,
}

impl Combinations {
    fn new(width: usize, ones: usize) -> Self {
        debug_assert!(width < 32 && ones <= width);
        let first = if ones == 0 { 0 } else { (1u32 << ones) - 1 };
        Combinations {
            next: Some(first),
            limit: 1u32 << width,
        }
    }
}

impl Iterator for Combinations {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    }
}

//! Biconnected blocks, cut vertices, and cactus recognition.

use crate::graph::{Graph, GraphError, Vertex};

/// A maximal 2-connected piece or a bridge edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted vertex set.
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.vertices.len() == 2
    }

    /// A block on three or more vertices is a cycle iff it has as many edges
    /// as vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edge_count == self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    pub fn cycle_blocks(&self) -> usize {
        self.blocks.iter().filter(|b| b.is_cycle()).count()
    }
}

/// Iterative Hopcroft-Tarjan over every component. Isolated vertices
/// contribute no block.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0;

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&v) = g.neighbors(u).get(*idx) {
                *idx += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    edge_stack.push((u, v));
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    low[u] = low[u].min(disc[v]);
                    edge_stack.push((u, v));
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut vertices = Vec::new();
                    let mut edge_count = 0;
                    while let Some((a, b)) = edge_stack.pop() {
                        vertices.push(a);
                        vertices.push(b);
                        edge_count += 1;
                        if (a, b) == (parent, u) {
                            break;
                        }
                    }
                    vertices.sort_unstable();
                    vertices.dedup();
                    blocks.push(Block {
                        vertices,
                        edge_count,
                    });
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }

    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

/// Connected, and every block is a bridge or a cycle.
pub fn is_cactus(g: &Graph) -> bool {
    g.is_connected()
        && block_decomposition(g)
            .blocks
            .iter()
            .all(|b| b.is_bridge() || b.is_cycle())
}

/// Cyclomatic number `m - n + 1`; equals the number of cycles of a cactus.
pub fn cycle_count(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    Ok(g.edge_count() + 1 - g.vertex_count())
}

//! Checked graph rewrites with exact index bookkeeping, and a local search
//! for trees with a large augmented Zagreb index.
//!
//! Each rewrite validates its pattern, builds the result as a new graph, and
//! reports `azi(input) - azi(result)` computed only from the edges incident
//! to vertices whose edges changed. Tests recompute both sides from scratch.

mod climb;

pub use climb::{hill_climb_max_azi, ClimbSeed, ClimbStep, ClimbTrace};

use num_traits::Zero;
use thiserror::Error;

use crate::graph::{Graph, GraphEdit, Vertex};
use crate::indices::{psi, IndexError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("degenerate result: {0}")]
    DegenerateResult(String),
    #[error(transparent)]
    Index(#[from] IndexError),
}

fn mismatch(msg: impl Into<String>) -> RewriteError {
    RewriteError::PatternMismatch(msg.into())
}

#[derive(Debug, Clone, PartialEq)]
pub struct RewriteOutcome {
    pub result: Graph,
    /// `azi(input) - azi(result)`.
    pub azi_delta: Rational,
    pub degree_sequence_preserved: bool,
}

/// Sum of Ψ over the edges with an endpoint in `touched`.
fn local_sum(g: &Graph, touched: &[Vertex]) -> Result<Rational, RewriteError> {
    let mut total = Rational::zero();
    for (u, v) in g.edges() {
        if touched.contains(&u) || touched.contains(&v) {
            total += psi(g.degree(u), g.degree(v))
                .map_err(|_| IndexError::UnsupportedGraph("rewrite produced a (1,1) edge"))?;
        }
    }
    Ok(total)
}

/// `before` and `after` share labels; removed vertices are isolated in
/// `after` and dropped afterwards.
fn finish(
    before: &Graph,
    edit: GraphEdit,
    touched: &[Vertex],
    removed: &[Vertex],
) -> Result<RewriteOutcome, RewriteError> {
    if !before.is_connected() {
        return Err(IndexError::UnsupportedGraph("graph is not connected").into());
    }
    let after = edit.finish();
    let azi_delta = local_sum(before, touched)? - local_sum(&after, touched)?;
    let mut edit = after.to_edit();
    for &v in removed {
        edit.isolate(v);
    }
    let result = edit.finish_without(removed);
    if !result.is_connected() {
        return Err(RewriteError::DegenerateResult(
            "result is disconnected or empty".into(),
        ));
    }
    let degree_sequence_preserved = before.degree_sequence() == result.degree_sequence();
    Ok(RewriteOutcome {
        result,
        azi_delta,
        degree_sequence_preserved,
    })
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<(), RewriteError> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(mismatch(format!("vertex {v} out of range")))
    }
}

/// Whether `a` and `b` are joined by a path avoiding `skip`.
fn connected_avoiding(g: &Graph, a: Vertex, b: Vertex, skip: Vertex) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    seen[skip] = true;
    seen[a] = true;
    let mut stack = vec![a];
    while let Some(x) = stack.pop() {
        if x == b {
            return true;
        }
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Removes the degree-2 cycle vertex `u` between `v` (degree 2) and `w`
/// (degree >= 3) and joins `v` to `w`. The index drops by exactly 8.
pub fn contract_cycle_path(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    w: Vertex,
) -> Result<RewriteOutcome, RewriteError> {
    for x in [u, v, w] {
        check_vertex(g, x)?;
    }
    if !(g.has_edge(u, v) && g.has_edge(u, w)) || v == w {
        return Err(mismatch("u must be adjacent to both v and w"));
    }
    if g.degree(u) != 2 || g.degree(v) != 2 || g.degree(w) < 3 {
        return Err(mismatch("need d(u) = d(v) = 2 and d(w) >= 3"));
    }
    if g.has_edge(v, w) {
        return Err(mismatch("v and w are adjacent"));
    }
    if !connected_avoiding(g, v, w, u) {
        return Err(mismatch("u, v, w are not on a common cycle"));
    }
    let mut edit = g.to_edit();
    edit.isolate(u);
    edit.add_edge(v, w);
    finish(g, edit, &[u, v, w], &[u])
}

/// Deletes the two degree-2 vertices `u`, `v` of a triangle `uvw` with
/// `d(w) >= 3`.
pub fn delete_triangle_pair(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    w: Vertex,
) -> Result<RewriteOutcome, RewriteError> {
    for x in [u, v, w] {
        check_vertex(g, x)?;
    }
    if !(g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w)) {
        return Err(mismatch("u, v, w must form a triangle"));
    }
    if g.degree(u) != 2 || g.degree(v) != 2 || g.degree(w) < 3 {
        return Err(mismatch("need d(u) = d(v) = 2 and d(w) >= 3"));
    }
    let mut edit = g.to_edit();
    edit.isolate(u);
    edit.isolate(v);
    finish(g, edit, &[u, v, w], &[u, v])
}

/// Removes every pendant neighbour of `v0`.
pub fn strip_pendants(g: &Graph, v0: Vertex) -> Result<RewriteOutcome, RewriteError> {
    check_vertex(g, v0)?;
    let pendants: Vec<Vertex> = g
        .neighbors(v0)
        .iter()
        .copied()
        .filter(|&x| g.degree(x) == 1)
        .collect();
    if pendants.is_empty() {
        return Err(mismatch(format!("vertex {v0} has no pendant neighbour")));
    }
    let mut edit = g.to_edit();
    for &x in &pendants {
        edit.isolate(x);
    }
    let mut touched = pendants.clone();
    touched.push(v0);
    finish(g, edit, &touched, &pendants)
}

/// Takes the degree-2 vertex `path_vertex` out of its path (joining its two
/// neighbours) and subdivides `target_edge` with it. Degrees are unchanged.
pub fn shift_degree2_vertex(
    t: &Graph,
    path_vertex: Vertex,
    target_edge: (Vertex, Vertex),
) -> Result<RewriteOutcome, RewriteError> {
    let (a, b) = target_edge;
    for x in [path_vertex, a, b] {
        check_vertex(t, x)?;
    }
    if !t.is_tree() {
        return Err(mismatch("input must be a tree"));
    }
    if t.degree(path_vertex) != 2 {
        return Err(mismatch("path vertex must have degree 2"));
    }
    if !t.has_edge(a, b) {
        return Err(mismatch("target is not an edge"));
    }
    if a == path_vertex || b == path_vertex {
        return Err(mismatch("target edge is incident to the path vertex"));
    }
    let (v1, v3) = (t.neighbors(path_vertex)[0], t.neighbors(path_vertex)[1]);
    let mut edit = t.to_edit();
    edit.isolate(path_vertex);
    edit.add_edge(v1, v3);
    edit.remove_edge(a, b);
    edit.add_edge(a, path_vertex);
    edit.add_edge(path_vertex, b);
    finish(t, edit, &[path_vertex, v1, v3, a, b], &[])
}

/// Moves a leaf from its support to `new_support`.
pub fn reattach_leaf(
    t: &Graph,
    leaf: Vertex,
    new_support: Vertex,
) -> Result<RewriteOutcome, RewriteError> {
    check_vertex(t, leaf)?;
    check_vertex(t, new_support)?;
    if !t.is_tree() {
        return Err(mismatch("input must be a tree"));
    }
    if t.degree(leaf) != 1 {
        return Err(mismatch(format!("vertex {leaf} is not a leaf")));
    }
    let support = t.neighbors(leaf)[0];
    if new_support == support || new_support == leaf {
        return Err(mismatch(
            "new support must differ from the leaf and its support",
        ));
    }
    let mut edit = t.to_edit();
    edit.remove_edge(leaf, support);
    edit.add_edge(leaf, new_support);
    finish(t, edit, &[leaf, support, new_support], &[])
}

/// All `(u, v, w)` accepted by [`contract_cycle_path`].
pub fn cycle_path_matches(g: &Graph) -> Vec<(Vertex, Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| g.degree(u) == 2) {
        let nbrs = g.neighbors(u);
        for (v, w) in [(nbrs[0], nbrs[1]), (nbrs[1], nbrs[0])] {
            if g.degree(v) == 2
                && g.degree(w) >= 3
                && !g.has_edge(v, w)
                && connected_avoiding(g, v, w, u)
            {
                out.push((u, v, w));
            }
        }
    }
    out
}

/// All `(u, v, w)` accepted by [`delete_triangle_pair`], with `u < v`.
pub fn triangle_pair_matches(g: &Graph) -> Vec<(Vertex, Vertex, Vertex)> {
    let mut out = Vec::new();
    for u in g.vertices().filter(|&u| g.degree(u) == 2) {
        let nbrs = g.neighbors(u);
        for (v, w) in [(nbrs[0], nbrs[1]), (nbrs[1], nbrs[0])] {
            if u < v && g.degree(v) == 2 && g.degree(w) >= 3 && g.has_edge(v, w) {
                out.push((u, v, w));
            }
        }
    }
    out
}

/// Vertices with at least one pendant neighbour.
pub fn pendant_supports(g: &Graph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| g.neighbors(v).iter().any(|&x| g.degree(x) == 1))
        .collect()
}

/// All `(path_vertex, target_edge)` pairs accepted by
/// [`shift_degree2_vertex`].
pub fn shift_matches(t: &Graph) -> Vec<(Vertex, (Vertex, Vertex))> {
    let edges = t.edge_vec();
    let mut out = Vec::new();
    for v in t.vertices().filter(|&v| t.degree(v) == 2) {
        for &(a, b) in &edges {
            if a != v && b != v {
                out.push((v, (a, b)));
            }
        }
    }
    out
}

/// All `(leaf, new_support)` pairs accepted by [`reattach_leaf`].
pub fn reattach_matches(t: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for leaf in t.vertices().filter(|&v| t.degree(v) == 1) {
        let support = t.neighbors(leaf)[0];
        for s in t.vertices() {
            if s != leaf && s != support {
                out.push((leaf, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::cycle_count;
    use crate::canon::canonical_form;
    use crate::families::{construct, FamilySpec};
    use crate::indices::{azi, f_bound, integer, rational};

    fn graph(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn check_bookkeeping(input: &Graph, out: &RewriteOutcome) {
        assert_eq!(
            out.azi_delta,
            azi(input).unwrap() - azi(&out.result).unwrap()
        );
    }

    #[test]
    fn contract_tadpole() {
        // C4 = 0-1-2-3-0 with pendant 4 at w = 0
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]);
        assert_eq!(azi(&g).unwrap(), rational(283, 8));
        let out = contract_cycle_path(&g, 1, 2, 0).unwrap();
        assert_eq!(out.azi_delta, integer(8));
        check_bookkeeping(&g, &out);
        let paw = construct(&FamilySpec::G0 { n: 4, k: 1 }).unwrap();
        assert_eq!(canonical_form(&out.result), canonical_form(&paw));
        assert_eq!(azi(&out.result).unwrap(), rational(219, 8));
    }

    #[test]
    fn contract_rejects_adjacent_v_w() {
        let g = construct(&FamilySpec::G0 { n: 5, k: 2 }).unwrap();
        assert!(matches!(
            contract_cycle_path(&g, 1, 2, 0),
            Err(RewriteError::PatternMismatch(_))
        ));
    }

    #[test]
    fn triangle_pair_on_g0() {
        let g = construct(&FamilySpec::G0 { n: 5, k: 2 }).unwrap();
        let out = delete_triangle_pair(&g, 1, 2, 0).unwrap();
        assert_eq!(out.azi_delta, integer(24));
        assert_eq!(
            canonical_form(&out.result),
            canonical_form(&construct(&FamilySpec::Cycle(3)).unwrap())
        );
        assert_eq!(cycle_count(&out.result), Ok(1));
        check_bookkeeping(&g, &out);
    }

    #[test]
    fn triangle_pair_on_paw_is_degenerate() {
        let paw = construct(&FamilySpec::G0 { n: 4, k: 1 }).unwrap();
        assert!(matches!(
            delete_triangle_pair(&paw, 1, 2, 0),
            Err(RewriteError::Index(IndexError::UnsupportedGraph(_)))
        ));
    }

    #[test]
    fn strip_star_and_g0() {
        let s5 = construct(&FamilySpec::Star(5)).unwrap();
        let out = strip_pendants(&s5, 0).unwrap();
        assert_eq!(out.result.vertex_count(), 1);
        assert_eq!(out.azi_delta, rational(256, 27));
        let g = construct(&FamilySpec::G0 { n: 6, k: 1 }).unwrap();
        let out = strip_pendants(&g, 0).unwrap();
        assert_eq!(out.result.vertex_count(), 3);
        assert_eq!(out.azi_delta, f_bound(6, 1).unwrap() - integer(24));
        assert!(matches!(
            strip_pendants(&g, 1),
            Err(RewriteError::PatternMismatch(_))
        ));
    }

    #[test]
    fn strip_broom() {
        // P4 0-1-2-3 with two extra leaves 4, 5 at vertex 3
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]);
        let out = strip_pendants(&g, 3).unwrap();
        check_bookkeeping(&g, &out);
        assert_eq!(out.result.vertex_count(), 4);
    }

    #[test]
    fn shift_on_h_tree() {
        // v1 = 0, v2 = 1, v3 = 2; leaves 3, 4 on 0 and 5, 6 on 2
        let t = graph(7, &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]);
        assert_eq!(azi(&t).unwrap(), rational(59, 2));
        let out = shift_degree2_vertex(&t, 1, (0, 3)).unwrap();
        assert!(out.degree_sequence_preserved);
        assert_eq!(azi(&out.result).unwrap(), rational(2401, 64));
        assert_eq!(out.azi_delta, psi(1, 3).unwrap() - psi(3, 3).unwrap());
        check_bookkeeping(&t, &out);
        assert!(matches!(
            shift_degree2_vertex(&t, 1, (0, 1)),
            Err(RewriteError::PatternMismatch(_))
        ));
    }

    #[test]
    fn reattach_between_length_three_paths() {
        // centre 0 (degree 3) with chains 0-1-2-3 and 0-4-5-6 and leaf 7
        let t = graph(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7)]);
        let out = reattach_leaf(&t, 3, 6).unwrap();
        assert_eq!(out.azi_delta, integer(0));
        check_bookkeeping(&t, &out);
        let star = construct(&FamilySpec::Star(5)).unwrap();
        let out = reattach_leaf(&star, 1, 2).unwrap();
        check_bookkeeping(&star, &out);
        assert!(matches!(
            reattach_leaf(&star, 1, 0),
            Err(RewriteError::PatternMismatch(_))
        ));
        assert!(matches!(
            reattach_leaf(&star, 0, 1),
            Err(RewriteError::PatternMismatch(_))
        ));
    }

    #[test]
    fn match_helpers_accept_their_matches() {
        let g = graph(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 0),
                (0, 6),
            ],
        );
        for (u, v, w) in cycle_path_matches(&g) {
            contract_cycle_path(&g, u, v, w).unwrap();
        }
        for (u, v, w) in triangle_pair_matches(&g) {
            delete_triangle_pair(&g, u, v, w).unwrap();
        }
        assert_eq!(cycle_path_matches(&g), vec![(1, 2, 0), (3, 2, 0)]);
        assert_eq!(triangle_pair_matches(&g), vec![(4, 5, 0)]);
        assert_eq!(pendant_supports(&g), vec![0]);
    }
}

use std::collections::BTreeMap;

use aziscan::{
    azi, bid_index, cacti, canonical_form, canonical_labeling, cycle_count,
    every_edge_deg2_incident, graph6, integer, is_cactus, pendent_and_internal_paths, scan, trees,
    Direction, EnumSpec, Graph, IndexKernel, PathKind, ScanConfig, Vertex,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<Vertex>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(8)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let lab = canonical_labeling(&g);
        prop_assert_eq!(graph6::encode(&g.relabel(&lab.labeling)), lab.code.as_str());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(70)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn azi_is_label_free_and_matches_kernel((g, perm) in with_permutation(8)) {
        prop_assume!(g.is_connected() && g.vertex_count() >= 3);
        let a = azi(&g).unwrap();
        prop_assert_eq!(&azi(&g.relabel(&perm)).unwrap(), &a);
        prop_assert_eq!(bid_index(&g, &IndexKernel::azi()).unwrap().exact, Some(a));
    }

    #[test]
    fn equal_codes_share_invariants(a in graph_strategy(6), b in graph_strategy(6)) {
        // Degree sequences are an isomorphism invariant.
        if canonical_form(&a) == canonical_form(&b) {
            prop_assert_eq!(a.degree_sequence(), b.degree_sequence());
            prop_assert_eq!(a.edge_count(), b.edge_count());
        }
    }
}

/// Tree paths between every pair of non-degree-2 vertices whose interior
/// is all degree 2; the slow way.
fn brute_paths(t: &Graph) -> BTreeMap<(Vertex, Vertex), usize> {
    let n = t.vertex_count();
    let mut out = BTreeMap::new();
    for s in (0..n).filter(|&v| t.degree(v) != 2) {
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in t.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        for e in (s + 1..n).filter(|&v| t.degree(v) != 2) {
            let mut cur = parent[e];
            let mut ok = true;
            while cur != s {
                ok &= t.degree(cur) == 2;
                cur = parent[cur];
            }
            if ok && !(t.degree(s) == 1 && t.degree(e) == 1) {
                out.insert((s, e), dist[e]);
            }
        }
    }
    out
}

#[test]
fn path_witnesses_partition_tree_edges() {
    for n in 4..=9 {
        for t in trees(n).filter(|t| t.max_degree() >= 3) {
            let paths = pendent_and_internal_paths(&t);
            let mut edges: Vec<_> = paths.iter().flat_map(|p| p.edges()).collect();
            edges.sort();
            assert_eq!(edges, t.edge_vec(), "{}", graph6::encode(&t));
            let found: BTreeMap<(Vertex, Vertex), usize> = paths
                .iter()
                .map(|p| {
                    let (a, b) = (p.vertices[0], *p.vertices.last().unwrap());
                    if p.kind == PathKind::Pendent {
                        assert_eq!(t.degree(a), 1);
                    } else {
                        assert!(t.degree(a) >= 3 && t.degree(b) >= 3);
                    }
                    ((a.min(b), a.max(b)), p.length())
                })
                .collect();
            assert_eq!(found, brute_paths(&t), "{}", graph6::encode(&t));
        }
    }
}

#[test]
fn degree_two_incident_edges_weigh_eight() {
    for n in 3..=10 {
        for t in trees(n).filter(every_edge_deg2_incident) {
            assert_eq!(azi(&t).unwrap(), integer(8 * t.edge_count() as i64));
        }
    }
    for n in 3..=8 {
        for k in 0..=(n - 1) / 2 {
            for g in cacti(n, k).filter(every_edge_deg2_incident) {
                assert_eq!(azi(&g).unwrap(), integer(8 * g.edge_count() as i64));
            }
        }
    }
}

#[test]
fn enumerated_cacti_are_valid_and_distinct() {
    for n in 1..=9 {
        for k in 0..=(n.max(1) - 1) / 2 {
            let mut codes = Vec::new();
            for g in cacti(n, k) {
                assert!(is_cactus(&g));
                assert_eq!(cycle_count(&g).unwrap(), k);
                assert_eq!(g.vertex_count(), n);
                codes.push(canonical_form(&g));
            }
            let len = codes.len();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), len, "duplicates in ({n},{k})");
        }
    }
}

#[test]
fn attaining_graphs_reproduce_the_extreme() {
    let config = ScanConfig::new(2);
    for (n, k) in [(6, 1), (7, 2), (8, 3), (9, 0), (9, 2)] {
        for direction in [Direction::Min, Direction::Max] {
            let r = scan(
                &EnumSpec::new(n, k),
                &IndexKernel::azi(),
                direction,
                &config,
            )
            .unwrap();
            for g in r.attaining_graphs() {
                assert_eq!(Some(azi(&g).unwrap()), r.value_exact);
            }
            let r = scan(
                &EnumSpec::new(n, k),
                &IndexKernel::abc(),
                direction,
                &config,
            )
            .unwrap();
            for g in r.attaining_graphs() {
                let v = aziscan::abc(&g).unwrap();
                assert!((v - r.value_float).abs() <= 1e-9 * r.value_float);
            }
        }
    }
}

#[test]
fn scans_of_cacti_do_not_depend_on_workers() {
    let spec = EnumSpec::new(9, 2);
    let one = scan(
        &spec,
        &IndexKernel::abc(),
        Direction::Max,
        &ScanConfig::new(1),
    )
    .unwrap();
    let four = scan(
        &spec,
        &IndexKernel::abc(),
        Direction::Max,
        &ScanConfig::new(4),
    )
    .unwrap();
    assert_eq!(one, four);
}

//! Shared test support: the desk-scale corpus and the planted audit
//! configurations.
#![allow(dead_code)] // each integration target uses a different subset
//!
//! The corpus is exhaustive within each family:
//!   (a) every connected labeled graph on up to 5 vertices, embedded with
//!       the first rotation system that satisfies Euler's formula
//!       (nonplanar graphs are excluded by the edge bound or the search);
//!   (b) every connected labeled graph on 6 or 7 vertices with no 4- and
//!       no 6-cycle — this covers every class member of those orders;
//!   (c) structured families up to 13 vertices: cycles, chorded cycles,
//!       hub graphs over every spoke subset, and theta graphs.

use std::collections::BTreeSet;

use discharge_lab::configurations::AuditLemma;
use discharge_lab::plane_graph::{canonical_cycle, fixtures, trace_faces, PlaneGraph};

pub struct CorpusEntry {
    pub name: String,
    pub graph: PlaneGraph,
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// Brute-force cycle oracle: every vertex subset, every cyclic order.
pub fn brute_force_cycles(g: &PlaneGraph, max_len: usize) -> BTreeSet<Vec<usize>> {
    let n = g.n();
    assert!(n <= 10, "oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 1u64..(1 << n) {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() < 3 || verts.len() > max_len {
            continue;
        }
        for tail in permutations(&verts[1..]) {
            let mut order = vec![verts[0]];
            order.extend(tail);
            if (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()])) {
                out.insert(canonical_cycle(&order));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// exhaustive small-graph enumeration

fn edge_list(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    edges
}

fn mask_adjacency(n: usize, edges: &[(usize, usize)], mask: u32) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    adj
}

fn is_connected(adj: &[BTreeSet<usize>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

/// Does the abstract graph contain a cycle of exactly length `k`?
fn has_cycle_of_length(adj: &[BTreeSet<usize>], k: usize) -> bool {
    let n = adj.len();
    fn dfs(
        adj: &[BTreeSet<usize>],
        start: usize,
        k: usize,
        path: &mut Vec<usize>,
        on: &mut Vec<bool>,
    ) -> bool {
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() == k {
                return true;
            }
            if w > start && !on[w] && path.len() < k {
                path.push(w);
                on[w] = true;
                if dfs(adj, start, k, path, on) {
                    return true;
                }
                on[w] = false;
                path.pop();
            }
        }
        false
    }
    let mut on = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        on[start] = true;
        if dfs(adj, start, k, &mut path, &mut on) {
            return true;
        }
        on[start] = false;
    }
    false
}

/// First rotation system of the abstract graph satisfying Euler's formula,
/// if one exists.
pub fn embed_first(adj: &[BTreeSet<usize>]) -> Option<PlaneGraph> {
    let n = adj.len();
    let e: usize = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
    let orders: Vec<Vec<Vec<usize>>> = adj
        .iter()
        .map(|nbrs| {
            let base: Vec<usize> = nbrs.iter().copied().collect();
            if base.len() <= 2 {
                vec![base]
            } else {
                permutations(&base[1..])
                    .into_iter()
                    .map(|tail| {
                        let mut rot = vec![base[0]];
                        rot.extend(tail);
                        rot
                    })
                    .collect()
            }
        })
        .collect();

    let mut idx = vec![0usize; n];
    loop {
        let rotation: Vec<Vec<usize>> = (0..n).map(|v| orders[v][idx[v]].clone()).collect();
        let (faces, _) = trace_faces(&rotation);
        if n + faces.len() == e + 2 {
            return PlaneGraph::from_rotation(rotation, None).ok();
        }
        // odometer
        let mut v = 0;
        loop {
            if v == n {
                return None;
            }
            idx[v] += 1;
            if idx[v] < orders[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

fn exhaustive_small(max_n: usize, out: &mut Vec<CorpusEntry>) {
    for n in 2..=max_n {
        let edges = edge_list(n);
        let max_edges = if n >= 3 { 3 * n - 6 } else { 1 };
        for mask in 1u32..(1 << edges.len()) {
            let count = mask.count_ones() as usize;
            if count < n - 1 || count > max_edges {
                continue;
            }
            let adj = mask_adjacency(n, &edges, mask);
            if adj.iter().any(|s| s.is_empty()) || !is_connected(&adj) {
                continue;
            }
            let Some(g) = embed_first(&adj) else {
                continue;
            };
            // one entry per outer-face choice
            for face in g.faces() {
                let variant = PlaneGraph::from_rotation(
                    g.rotation_system().to_vec(),
                    Some(&face.walk),
                );
                if let Ok(v) = variant {
                    out.push(CorpusEntry {
                        name: format!("small-n{n}-m{mask}-f{}", face.id),
                        graph: v,
                    });
                }
            }
        }
    }
}

fn exhaustive_sparse(n: usize, out: &mut Vec<CorpusEntry>) {
    let edges = edge_list(n);
    // with no 4-cycles at most 9 edges fit on 7 vertices; 3n-6 is looser
    let max_edges = 3 * n - 6;
    for mask in 1u32..(1 << edges.len()) {
        let count = mask.count_ones() as usize;
        if count < n - 1 || count > max_edges {
            continue;
        }
        let adj = mask_adjacency(n, &edges, mask);
        if adj.iter().any(|s| s.is_empty()) || !is_connected(&adj) {
            continue;
        }
        if has_cycle_of_length(&adj, 4) || has_cycle_of_length(&adj, 6) {
            continue;
        }
        if let Some(g) = embed_first(&adj) {
            out.push(CorpusEntry {
                name: format!("sparse-n{n}-m{mask}"),
                graph: g,
            });
        }
    }
}

fn structured_families(out: &mut Vec<CorpusEntry>) {
    for n in 3..=13usize {
        out.push(CorpusEntry {
            name: format!("cycle-{n}"),
            graph: fixtures::cycle(n),
        });
    }
    for n in 4..=13usize {
        for b in 3..n {
            if let Ok(g) = fixtures::cycle_with_chord(n, 1, b) {
                out.push(CorpusEntry {
                    name: format!("chord-{n}-{b}"),
                    graph: g,
                });
            }
        }
    }
    for m in 3..=12usize {
        for mask in 1u32..(1 << m) {
            let spokes: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            if let Ok(g) = fixtures::cycle_with_hub(m, &spokes) {
                out.push(CorpusEntry {
                    name: format!("hub-{m}-{mask}"),
                    graph: g,
                });
            }
        }
    }
    for m in 4..=12usize {
        for len in 2..=4usize {
            if m + len - 1 > 13 {
                continue;
            }
            for b in 2..=m {
                if b == 1 {
                    continue;
                }
                if let Ok(g) = fixtures::cycle_with_path(m, 1, b, len) {
                    out.push(CorpusEntry {
                        name: format!("theta-{m}-{b}-{len}"),
                        graph: g,
                    });
                }
            }
        }
    }
}

static CORPUS: std::sync::OnceLock<Vec<CorpusEntry>> = std::sync::OnceLock::new();

/// The full test corpus, built once per test binary.
pub fn corpus() -> &'static [CorpusEntry] {
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        exhaustive_small(5, &mut out);
        exhaustive_sparse(6, &mut out);
        exhaustive_sparse(7, &mut out);
        structured_families(&mut out);
        out
    })
}

// ---------------------------------------------------------------------------
// planted audit configurations

pub struct Plant {
    pub lemma: AuditLemma,
    pub plant: PlaneGraph,
    pub host: PlaneGraph,
}

fn path_graph() -> PlaneGraph {
    PlaneGraph::from_rotation(vec![vec![1], vec![0, 2], vec![1]], None).unwrap()
}

/// A 9-cycle separating a degree-2 vertex inside from one outside; the
/// outer face is on the outside apex's side.
fn separating_good_cycle_plant() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![9, 0, 1],
            vec![0, 9, 1, 2, 3, 4, 5, 6, 7, 8],
            vec![10, 4, 5],
            vec![10, 5, 6, 7, 8, 0, 1, 2, 3, 4],
        ],
        Some(&[10, 5, 6, 7, 8, 0, 1, 2, 3, 4]),
    )
    .unwrap()
}

/// F8 plus two triangles hung on the long-cell arc: the boundary is a bad
/// 12-cycle adjacent to both.
fn two_triangle_bad_cycle_plant() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![12, 0, 1, 2, 3],
            vec![12, 3, 4, 5, 6],
            vec![12, 6, 7, 8, 9, 10, 11, 0],
            vec![13, 7, 8],
            vec![14, 9, 10],
            vec![0, 1, 2, 3, 4, 5, 6, 7, 13, 8, 9, 14, 10, 11],
        ],
        Some(&[0, 1, 2, 3, 4, 5, 6, 7, 13, 8, 9, 14, 10, 11]),
    )
    .unwrap()
}

/// A 7-face with four consecutive internal 3-vertices whose first edge
/// lies on a triangle, inside a 10-rim.
fn good_path_plant() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![14, 10, 11],
            vec![10, 11, 12, 13, 4, 5, 6],
            vec![14, 8, 7, 6, 10],
            vec![14, 11, 12, 2, 1, 0, 9, 8],
            vec![12, 13, 3, 2],
            vec![13, 4, 3],
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
        ],
        Some(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
    )
    .unwrap()
}

/// Pentagon of internal 3-vertices spoked into a 10-rim.
fn all_three_face_plant() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![10, 11, 12, 13, 14],
            vec![10, 0, 1, 2, 11],
            vec![11, 2, 3, 4, 12],
            vec![12, 4, 5, 6, 13],
            vec![13, 6, 7, 8, 14],
            vec![14, 8, 9, 0, 10],
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
        ],
        Some(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
    )
    .unwrap()
}

fn light_seven_pair_faces(with_bridge_edge: bool) -> Vec<Vec<usize>> {
    let mut walks = vec![
        vec![0, 1, 2, 3, 4, 5, 6],
        vec![0, 7, 8, 9, 10, 11, 12],
        vec![0, 6, 17, 18, 12],
        vec![2, 13, 14, 3],
        vec![3, 14, 15, 4],
        vec![4, 15, 16, 5],
        vec![5, 16, 17, 6],
        vec![12, 18, 19, 11],
        vec![11, 19, 20, 10],
        vec![10, 20, 21, 9],
        vec![9, 21, 22, 8],
        vec![8, 22, 23, 7],
        vec![13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23],
    ];
    if with_bridge_edge {
        walks.push(vec![0, 1, 7]);
        walks.push(vec![1, 7, 23, 13, 2]);
    } else {
        walks.push(vec![0, 1, 2, 13, 23, 7]);
    }
    walks
}

/// Two 7-faces sharing exactly one internal 4-vertex, joined by an edge
/// between their first boundary vertices, everything else internal degree 3.
fn light_seven_pair_plant(with_bridge_edge: bool) -> PlaneGraph {
    let rim: Vec<usize> = (13..=23).collect();
    PlaneGraph::from_face_walks(&light_seven_pair_faces(with_bridge_edge), Some(&rim)).unwrap()
}

fn chorded_eight_faces(with_chord: bool) -> Vec<Vec<usize>> {
    let mut walks = vec![
        vec![1, 8, 9, 2],
        vec![2, 9, 10, 3],
        vec![3, 10, 11, 4],
        vec![4, 11, 12, 5],
        vec![5, 12, 13, 6],
        vec![6, 13, 14, 7],
        vec![7, 14, 8, 1, 0],
        vec![8, 9, 10, 11, 12, 13, 14],
    ];
    if with_chord {
        walks.push(vec![0, 1, 2]);
        walks.push(vec![0, 2, 3, 4, 5, 6, 7]);
    } else {
        walks.push(vec![0, 1, 2, 3, 4, 5, 6, 7]);
    }
    walks
}

/// An 8-cycle of internal vertices with a short chord, the chord end an
/// internal 4-vertex, spoked into a 7-rim.
fn chorded_eight_plant(with_chord: bool) -> PlaneGraph {
    let rim: Vec<usize> = (8..=14).collect();
    PlaneGraph::from_face_walks(&chorded_eight_faces(with_chord), Some(&rim)).unwrap()
}

/// A 9-face with six bad vertices and a 4-vertex between two 3-faces.
fn nine_face_plant() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8],
            vec![9, 0, 1],
            vec![10, 2, 3],
            vec![11, 3, 4],
            vec![12, 5, 6],
            vec![9, 13, 14, 10, 2, 1],
            vec![10, 14, 15, 11, 3],
            vec![11, 15, 16, 12, 5, 4],
            vec![12, 16, 17, 7, 6],
            vec![7, 17, 18, 8],
            vec![8, 18, 13, 9, 0],
            vec![13, 14, 15, 16, 17, 18],
        ],
        Some(&[13, 14, 15, 16, 17, 18]),
    )
    .unwrap()
}

/// The nine-face plant with the second triangle apex removed: the hinge
/// vertex drops to degree 3 and the pattern no longer matches.
fn nine_face_host() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![0, 1, 2, 3, 4, 5, 6, 7, 8],
            vec![9, 0, 1],
            vec![10, 2, 3],
            vec![11, 5, 6],
            vec![9, 12, 13, 10, 2, 1],
            vec![10, 13, 14, 11, 5, 4, 3],
            vec![11, 14, 15, 7, 6],
            vec![7, 15, 16, 8],
            vec![8, 16, 12, 9, 0],
            vec![12, 13, 14, 15, 16],
        ],
        Some(&[12, 13, 14, 15, 16]),
    )
    .unwrap()
}

/// One plant/host pair per audit check. The catalog plant is exercised
/// through the raw scan since no class member can violate it.
pub fn audit_plants() -> Vec<Plant> {
    vec![
        Plant {
            lemma: AuditLemma::MinDegree,
            plant: fixtures::f9(),
            host: fixtures::f3(),
        },
        Plant {
            lemma: AuditLemma::TwoConnected,
            plant: path_graph(),
            host: fixtures::f1(),
        },
        Plant {
            lemma: AuditLemma::SeparatingGoodCycle,
            plant: separating_good_cycle_plant(),
            host: fixtures::f3(),
        },
        Plant {
            // the separating 9-cycle is also the one non-facial small cycle
            lemma: AuditLemma::NonFacialSmallCycle,
            plant: separating_good_cycle_plant(),
            host: fixtures::f3(),
        },
        Plant {
            lemma: AuditLemma::BadCycleCatalog,
            plant: fixtures::f7(),
            host: fixtures::f3(),
        },
        Plant {
            lemma: AuditLemma::TriangularBadCycle,
            plant: two_triangle_bad_cycle_plant(),
            host: fixtures::f8(),
        },
        Plant {
            lemma: AuditLemma::SplittingPathFace,
            plant: fixtures::f9(),
            host: fixtures::cycle_with_hub(11, &[1, 2]).unwrap(),
        },
        Plant {
            lemma: AuditLemma::GoodPathOnFace,
            plant: good_path_plant(),
            host: fixtures::f10(),
        },
        Plant {
            lemma: AuditLemma::AllThreeFace,
            plant: all_three_face_plant(),
            host: fixtures::f8(),
        },
        Plant {
            lemma: AuditLemma::LightSevenPair,
            plant: light_seven_pair_plant(true),
            host: light_seven_pair_plant(false),
        },
        Plant {
            lemma: AuditLemma::ChordedEight,
            plant: chorded_eight_plant(true),
            host: chorded_eight_plant(false),
        },
        Plant {
            lemma: AuditLemma::NineFaceConfig,
            plant: nine_face_plant(),
            host: nine_face_host(),
        },
    ]
}

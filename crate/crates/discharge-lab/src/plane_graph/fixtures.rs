//! Built-in fixture graphs and the small constructors behind them.
//!
//! The fixture atlas (F1..F10) is used throughout the tests and shipped as
//! `.rot` files; the constructors are also handy for building corpora of
//! cycles with hubs, chords, and internal paths.

use super::{GraphError, PlaneGraph};

/// Plain cycle v1..vn.
pub fn cycle(n: usize) -> PlaneGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let rotation = (0..n)
        .map(|i| vec![(i + 1) % n, (i + n - 1) % n])
        .collect();
    PlaneGraph::from_rotation(rotation, None).expect("cycle is a valid plane graph")
}

/// Cycle of length `n` plus one hub vertex (id n) drawn inside, adjacent to
/// the 1-based rim vertices in `spokes`. The outer face is the rim.
pub fn cycle_with_hub(n: usize, spokes: &[usize]) -> Result<PlaneGraph, GraphError> {
    assert!(n >= 3);
    let hub = n;
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + 1) % n, (i + n - 1) % n])
        .collect();
    let mut sorted: Vec<usize> = spokes.iter().map(|&s| s - 1).collect();
    sorted.sort_unstable();
    sorted.dedup();
    for &s in &sorted {
        rotation[s].push(hub);
    }
    // hub sees its attachments in reverse rim order
    let mut hub_rot = sorted.clone();
    hub_rot.reverse();
    rotation.push(hub_rot);
    let rim: Vec<usize> = (0..n).collect();
    PlaneGraph::from_rotation(rotation, Some(&rim))
}

/// Cycle of length `n` plus a chord between 1-based rim vertices `a` and
/// `b`, drawn inside. The outer face is the rim.
pub fn cycle_with_chord(n: usize, a: usize, b: usize) -> Result<PlaneGraph, GraphError> {
    let (a, b) = (a - 1, b - 1);
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + 1) % n, (i + n - 1) % n])
        .collect();
    rotation[a].push(b);
    rotation[b].push(a);
    let rim: Vec<usize> = (0..n).collect();
    PlaneGraph::from_rotation(rotation, Some(&rim))
}

/// Cycle of length `n` plus an internal path of `len` edges from rim vertex
/// `a` to rim vertex `b` (1-based), drawn inside. New internal vertices get
/// ids n, n+1, ... The outer face is the rim.
pub fn cycle_with_path(n: usize, a: usize, b: usize, len: usize) -> Result<PlaneGraph, GraphError> {
    assert!(len >= 2, "a path of length 1 is just a chord");
    let (a, b) = (a - 1, b - 1);
    let inner: Vec<usize> = (n..n + len - 1).collect();
    let mut rotation: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + 1) % n, (i + n - 1) % n])
        .collect();
    rotation[a].push(inner[0]);
    rotation[b].push(*inner.last().unwrap());
    let mut chain = vec![a];
    chain.extend(&inner);
    chain.push(b);
    for w in 1..chain.len() - 1 {
        rotation.push(vec![chain[w - 1], chain[w + 1]]);
    }
    let rim: Vec<usize> = (0..n).collect();
    PlaneGraph::from_rotation(rotation, Some(&rim))
}

/// F1: the 9-cycle.
pub fn f1() -> PlaneGraph {
    cycle(9)
}

/// F2: 9-cycle with a chord between v1 and v3.
pub fn f2() -> PlaneGraph {
    cycle_with_chord(9, 1, 3).unwrap()
}

/// F3: 11-cycle with a hub adjacent to v1, v2, v7.
pub fn f3() -> PlaneGraph {
    cycle_with_hub(11, &[1, 2, 7]).unwrap()
}

/// F4: K4 in its tetrahedral embedding.
pub fn f4() -> PlaneGraph {
    cycle_with_hub(3, &[1, 2, 3]).unwrap()
}

/// F5: the triangle K3.
pub fn f5() -> PlaneGraph {
    cycle(3)
}

/// F6: the 5-cycle.
pub fn f6() -> PlaneGraph {
    cycle(5)
}

/// F7: 9-cycle with a hub adjacent to v1, v4, v7.
pub fn f7() -> PlaneGraph {
    cycle_with_hub(9, &[1, 4, 7]).unwrap()
}

/// F8: 12-cycle with a hub adjacent to v1, v4, v7.
pub fn f8() -> PlaneGraph {
    cycle_with_hub(12, &[1, 4, 7]).unwrap()
}

/// F9: 10-cycle with a degree-2 hub adjacent to v1, v4.
pub fn f9() -> PlaneGraph {
    cycle_with_hub(10, &[1, 4]).unwrap()
}

/// F10: 12-cycle with an internal 3-edge path from v1 to v7.
pub fn f10() -> PlaneGraph {
    cycle_with_path(12, 1, 7, 3).unwrap()
}

/// A light 7-face [c1..c7] (vertices 0..=6) meeting one triangle on the
/// edge c1c2, where c2 has degree 5. The triangle apex is vertex 7; a rim
/// of eight vertices (8..=15) closes the graph.
pub fn light7_with_heavy_edge() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![0, 1, 2, 3, 4, 5, 6],
            vec![7, 0, 1],
            vec![7, 8, 9, 1],
            vec![1, 9, 10],
            vec![1, 10, 11, 2],
            vec![2, 11, 12, 3],
            vec![3, 12, 13, 4],
            vec![4, 13, 14, 5],
            vec![5, 14, 15, 6],
            vec![6, 15, 8, 7, 0],
            vec![8, 9, 10, 11, 12, 13, 14, 15],
        ],
        Some(&[8, 9, 10, 11, 12, 13, 14, 15]),
    )
    .expect("light 7-face fixture embeds")
}

/// A light 7-face whose triangle apex sits on the outer boundary (vertex
/// 7), so the apex pays the face directly.
pub fn light7_with_boundary_apex() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![0, 1, 2, 3, 4, 5, 6],
            vec![7, 0, 1],
            vec![7, 1, 2, 8],
            vec![8, 2, 3, 9],
            vec![9, 3, 4, 10],
            vec![10, 4, 5, 11],
            vec![11, 5, 6, 12],
            vec![12, 6, 0, 7, 14, 13],
            vec![7, 8, 9, 10, 11, 12, 13, 14],
        ],
        Some(&[7, 8, 9, 10, 11, 12, 13, 14]),
    )
    .expect("light 7-face fixture embeds")
}

/// A light 7-face whose triangle apex (vertex 7) is an internal 4-vertex
/// and whose heavy edge endpoint c2 has degree 4, so the face behind the
/// apex pays through c2.
pub fn light7_with_inner_four_apex() -> PlaneGraph {
    PlaneGraph::from_face_walks(
        &[
            vec![0, 1, 2, 3, 4, 5, 6],
            vec![7, 0, 1],
            vec![7, 8, 9],
            vec![7, 9, 10, 1],
            vec![1, 10, 11, 2],
            vec![2, 11, 12, 3],
            vec![3, 12, 13, 4],
            vec![4, 13, 14, 5],
            vec![5, 14, 15, 6],
            vec![6, 15, 8, 7, 0],
            vec![8, 9, 10, 11, 12, 13, 14, 15],
        ],
        Some(&[8, 9, 10, 11, 12, 13, 14, 15]),
    )
    .expect("light 7-face fixture embeds")
}

pub const FIXTURE_NAMES: [&str; 10] = [
    "F1", "F2", "F3", "F4", "F5", "F6", "F7", "F8", "F9", "F10",
];

/// Look a fixture up by name (case-insensitive).
pub fn by_name(name: &str) -> Option<PlaneGraph> {
    match name.to_ascii_uppercase().as_str() {
        "F1" => Some(f1()),
        "F2" => Some(f2()),
        "F3" => Some(f3()),
        "F4" => Some(f4()),
        "F5" => Some(f5()),
        "F6" => Some(f6()),
        "F7" => Some(f7()),
        "F8" => Some(f8()),
        "F9" => Some(f9()),
        "F10" => Some(f10()),
        _ => None,
    }
}

/// All fixtures in atlas order.
pub fn all() -> Vec<PlaneGraph> {
    FIXTURE_NAMES
        .iter()
        .map(|name| by_name(name).unwrap())
        .collect()
}

//! Detectors for the structures defined on cycles, paths, faces, and
//! vertices of a plane graph: side decompositions, chords, claws, biclaws,
//! triclaws and their cell signatures, splitting paths, good paths, light
//! 7-faces, and the A/B/C/D classification of face vertices.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{canonical_cycle, norm_edge, trace_faces, walk_edges, Face, PlaneGraph};
use crate::rat::Rat;

#[derive(Debug, Error)]
pub enum StructureError {
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("cycle length limit is 13, got {0}")]
    LengthLimit(usize),
    #[error("face boundary is not a simple cycle")]
    NonSimpleFace,
    #[error("outer boundary is not a simple cycle")]
    NonSimpleOuter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CycleFlags {
    pub facial: bool,
    pub separating: bool,
    pub good: bool,
    pub bad: bool,
    pub special9: bool,
    pub triangular: bool,
    pub ext_triangular: bool,
}

/// A cycle with its side decomposition and classification flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    /// canonical vertex sequence
    pub vertices: Vec<usize>,
    pub length: usize,
    pub interior: BTreeSet<usize>,
    pub exterior: BTreeSet<usize>,
    pub flags: CycleFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PartitionKind {
    Chord,
    Claw,
    Biclaw,
    Triclaw,
}

impl PartitionKind {
    pub fn cell_count(self) -> usize {
        match self {
            PartitionKind::Chord => 2,
            PartitionKind::Claw => 3,
            PartitionKind::Biclaw | PartitionKind::Triclaw => 4,
        }
    }

    pub fn extra_edge_count(self) -> usize {
        match self {
            PartitionKind::Chord => 1,
            PartitionKind::Claw => 3,
            PartitionKind::Biclaw => 5,
            PartitionKind::Triclaw => 6,
        }
    }
}

/// A cycle together with one chord/claw/biclaw/triclaw and the cells the
/// union cuts the disk into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPartition {
    pub kind: PartitionKind,
    /// interior anchor vertices (empty for a chord)
    pub anchors: Vec<usize>,
    /// edges joining the anchor structure to the cycle (the chord itself
    /// for `Chord`)
    pub legs: Vec<(usize, usize)>,
    /// cell boundary cycles, in cyclic order around the cycle (triclaws
    /// list the triangle cell first)
    pub cells: Vec<Vec<usize>>,
    /// canonical cell-length signature
    pub signature: Vec<usize>,
}

/// Which side of a cycle a vertex or edge lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Interior,
    Exterior,
    OnCycle,
}

/// Side decomposition of one cycle, with per-face shores for reuse by the
/// edge-side and partition queries.
pub struct SideDecomposition {
    pub interior: BTreeSet<usize>,
    pub exterior: BTreeSet<usize>,
    face_interior: Vec<bool>,
    cycle_vertices: BTreeSet<usize>,
    cycle_edges: BTreeSet<(usize, usize)>,
}

impl SideDecomposition {
    pub fn vertex_side(&self, v: usize) -> Side {
        if self.cycle_vertices.contains(&v) {
            Side::OnCycle
        } else if self.interior.contains(&v) {
            Side::Interior
        } else {
            Side::Exterior
        }
    }

    /// Side of an edge; edges of the cycle itself are `OnCycle`.
    pub fn edge_side(&self, g: &PlaneGraph, u: usize, v: usize) -> Side {
        let e = norm_edge(u, v);
        if self.cycle_edges.contains(&e) {
            return Side::OnCycle;
        }
        let (fa, _fb) = g.faces_on_edge(u, v);
        if self.face_interior[fa] {
            Side::Interior
        } else {
            Side::Exterior
        }
    }
}

fn check_is_cycle(g: &PlaneGraph, cycle: &[usize]) -> Result<(), StructureError> {
    let len = cycle.len();
    if len < 3 {
        return Err(StructureError::NotACycle);
    }
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    if distinct.len() != len || cycle.iter().any(|&v| v >= g.n()) {
        return Err(StructureError::NotACycle);
    }
    for i in 0..len {
        if !g.has_edge(cycle[i], cycle[(i + 1) % len]) {
            return Err(StructureError::NotACycle);
        }
    }
    Ok(())
}

/// Split the faces of `g` along the edges of `cycle` into two shores and
/// collect the vertices strictly on each side. The shore containing the
/// outer face is the exterior.
pub fn side_decomposition(
    g: &PlaneGraph,
    cycle: &[usize],
) -> Result<SideDecomposition, StructureError> {
    check_is_cycle(g, cycle)?;
    let cycle_edges = walk_edges(cycle);
    let nf = g.faces().len();

    // union faces across every non-cycle edge
    let mut comp: Vec<usize> = (0..nf).collect();
    fn find(comp: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while comp[root] != root {
            root = comp[root];
        }
        let mut cur = x;
        while comp[cur] != root {
            let next = comp[cur];
            comp[cur] = root;
            cur = next;
        }
        root
    }
    for &(u, v) in g.edges() {
        if cycle_edges.contains(&norm_edge(u, v)) {
            continue;
        }
        let (fa, fb) = g.faces_on_edge(u, v);
        let (ra, rb) = (find(&mut comp, fa), find(&mut comp, fb));
        if ra != rb {
            comp[ra] = rb;
        }
    }

    let outer_root = find(&mut comp, g.outer_face_id());
    let mut face_interior = vec![false; nf];
    for f in 0..nf {
        face_interior[f] = find(&mut comp, f) != outer_root;
    }

    let cycle_vertices: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut interior = BTreeSet::new();
    let mut exterior = BTreeSet::new();
    for face in g.faces() {
        for &v in &face.walk {
            if cycle_vertices.contains(&v) {
                continue;
            }
            if face_interior[face.id] {
                interior.insert(v);
            } else {
                exterior.insert(v);
            }
        }
    }

    Ok(SideDecomposition {
        interior,
        exterior,
        face_interior,
        cycle_vertices,
        cycle_edges,
    })
}

/// Interior and exterior vertex sets of a cycle.
pub fn cycle_sides(
    g: &PlaneGraph,
    cycle: &[usize],
) -> Result<(BTreeSet<usize>, BTreeSet<usize>), StructureError> {
    let sides = side_decomposition(g, cycle)?;
    Ok((sides.interior, sides.exterior))
}

/// All simple cycles of length at most `max_len` (≤ 13), each reported once
/// in canonical form, with side decomposition and classification flags.
pub fn enumerate_cycles(g: &PlaneGraph, max_len: usize) -> Result<Vec<CycleRecord>, StructureError> {
    if max_len > 13 {
        return Err(StructureError::LengthLimit(max_len));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let n = g.n();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; n];

    fn dfs(
        g: &PlaneGraph,
        start: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                // close the cycle once per orientation
                if path[1] < *path.last().unwrap() {
                    out.push(path.clone());
                }
            }
            if w <= start || on_path[w] || path.len() >= max_len {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            dfs(g, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }

    for start in 0..n {
        path.clear();
        path.push(start);
        on_path[start] = true;
        dfs(g, start, max_len, &mut path, &mut on_path, &mut cycles);
        on_path[start] = false;
    }

    let mut records: Vec<CycleRecord> = cycles
        .iter()
        .map(|c| classify_cycle(g, c).expect("enumerated cycles are cycles"))
        .collect();
    records.sort_by(|a, b| a.length.cmp(&b.length).then(a.vertices.cmp(&b.vertices)));
    Ok(records)
}

/// Trace the cells of the plane subgraph consisting of `cycle` plus
/// `extra` edges drawn in its closed interior. Returns the cells in cyclic
/// order around the cycle (cells without any cycle edge come first), or
/// None when the configuration does not cut the disk into simple cells.
fn trace_cells(
    g: &PlaneGraph,
    cycle: &[usize],
    extra: &[(usize, usize)],
    expected: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut h_edges: BTreeSet<(usize, usize)> = walk_edges(cycle);
    for &(u, v) in extra {
        h_edges.insert(norm_edge(u, v));
    }
    let mut h_vertices: BTreeSet<usize> = cycle.iter().copied().collect();
    for &(u, v) in extra {
        h_vertices.insert(u);
        h_vertices.insert(v);
    }

    // restrict the rotation system to H
    let index: BTreeMap<usize, usize> = h_vertices.iter().copied().zip(0..).collect();
    let back: Vec<usize> = h_vertices.iter().copied().collect();
    let rotation: Vec<Vec<usize>> = back
        .iter()
        .map(|&v| {
            g.rotation(v)
                .iter()
                .filter(|&&w| h_edges.contains(&norm_edge(v, w)))
                .map(|&w| index[&w])
                .collect()
        })
        .collect();

    let (faces, _) = trace_faces(&rotation);
    // Euler check on H guards against non-disk configurations
    if back.len() + faces.len() != h_edges.len() + 2 {
        return None;
    }

    let cycle_canon = canonical_cycle(cycle);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut outer_seen = false;
    for face in &faces {
        let walk: Vec<usize> = face.walk.iter().map(|&i| back[i]).collect();
        if !outer_seen && walk.len() == cycle.len() && canonical_cycle(&walk) == cycle_canon {
            outer_seen = true;
            continue;
        }
        let distinct: BTreeSet<usize> = walk.iter().copied().collect();
        if distinct.len() != walk.len() {
            return None; // cell is not a simple cycle
        }
        cells.push(walk);
    }
    if !outer_seen || cells.len() != expected {
        return None;
    }

    // order cells cyclically by where their cycle-edge block starts
    let len = cycle.len();
    let edge_index: HashMap<(usize, usize), usize> = (0..len)
        .map(|i| (norm_edge(cycle[i], cycle[(i + 1) % len]), i))
        .collect();
    let mut keyed: Vec<(usize, bool, Vec<usize>)> = Vec::new();
    for cell in cells {
        let mut indices: Vec<usize> = walk_edges(&cell)
            .iter()
            .filter_map(|e| edge_index.get(e).copied())
            .collect();
        if indices.is_empty() {
            // no arc: the triangle cell of a triclaw
            keyed.push((0, true, cell));
            continue;
        }
        indices.sort_unstable();
        let block_start = if indices.len() == len {
            0
        } else {
            *indices
                .iter()
                .find(|&&i| !indices.contains(&((i + len - 1) % len)))?
        };
        keyed.push((block_start, false, cell));
    }
    // triangle cells (no arc) first, then by cyclic block start
    keyed.sort_by_key(|k| (!k.1, k.0));
    Some(keyed.into_iter().map(|(_, _, cell)| cell).collect())
}

/// Lexicographically minimal rotation/reflection of a cyclic tuple.
fn necklace_min(xs: &[usize]) -> Vec<usize> {
    let len = xs.len();
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |seq: &[usize]| {
        for start in 0..len {
            let rot: Vec<usize> = (0..len).map(|i| seq[(start + i) % len]).collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    };
    consider(xs);
    let rev: Vec<usize> = xs.iter().rev().copied().collect();
    consider(&rev);
    best.unwrap_or_default()
}

fn make_partition(
    g: &PlaneGraph,
    cycle: &[usize],
    kind: PartitionKind,
    anchors: Vec<usize>,
    legs: Vec<(usize, usize)>,
    extra: &[(usize, usize)],
) -> Option<BadPartition> {
    let cells = trace_cells(g, cycle, extra, kind.cell_count())?;
    let lengths: Vec<usize> = cells.iter().map(|c| c.len()).collect();
    let signature = match kind {
        PartitionKind::Triclaw => {
            let mut sig = vec![lengths[0]];
            sig.extend(necklace_min(&lengths[1..]));
            sig
        }
        _ => necklace_min(&lengths),
    };
    // every cell is a cycle and the lengths balance
    debug_assert_eq!(
        lengths.iter().sum::<usize>(),
        cycle.len() + 2 * kind.extra_edge_count()
    );
    Some(BadPartition {
        kind,
        anchors,
        legs,
        cells,
        signature,
    })
}

/// All chords, claws, biclaws, and triclaws of a cycle, each with its cells
/// in canonical order.
pub fn find_bad_partitions(
    g: &PlaneGraph,
    cycle: &[usize],
) -> Result<Vec<BadPartition>, StructureError> {
    let sides = side_decomposition(g, cycle)?;
    let len = cycle.len();
    let pos: HashMap<usize, usize> = cycle.iter().copied().zip(0..).collect();
    let mut out: Vec<BadPartition> = Vec::new();

    // chords: interior-side edges joining nonconsecutive cycle vertices
    for &(u, v) in g.edges() {
        let (Some(&pu), Some(&pv)) = (pos.get(&u), pos.get(&v)) else {
            continue;
        };
        let gap = (pu + len - pv) % len;
        if gap == 1 || gap == len - 1 {
            continue;
        }
        if sides.edge_side(g, u, v) != Side::Interior {
            continue;
        }
        if let Some(p) = make_partition(
            g,
            cycle,
            PartitionKind::Chord,
            vec![],
            vec![(u, v)],
            &[(u, v)],
        ) {
            out.push(p);
        }
    }

    let on_cycle_neighbors = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|w| pos.contains_key(w))
            .collect()
    };

    // claws: interior vertex with three neighbors on the cycle
    for &v in &sides.interior {
        let nc = on_cycle_neighbors(v);
        if nc.len() < 3 {
            continue;
        }
        for i in 0..nc.len() {
            for j in i + 1..nc.len() {
                for k in j + 1..nc.len() {
                    let legs = vec![(v, nc[i]), (v, nc[j]), (v, nc[k])];
                    if let Some(p) = make_partition(
                        g,
                        cycle,
                        PartitionKind::Claw,
                        vec![v],
                        legs.clone(),
                        &legs,
                    ) {
                        out.push(p);
                    }
                }
            }
        }
    }

    // biclaws: adjacent interior pair, two distinct attachments each
    let interior: Vec<usize> = sides.interior.iter().copied().collect();
    for &u in &interior {
        for &v in g.neighbors(u) {
            if v <= u || !sides.interior.contains(&v) {
                continue;
            }
            let nu = on_cycle_neighbors(u);
            let nv = on_cycle_neighbors(v);
            for i in 0..nu.len() {
                for j in i + 1..nu.len() {
                    for k in 0..nv.len() {
                        for l in k + 1..nv.len() {
                            let att = [nu[i], nu[j], nv[k], nv[l]];
                            let set: BTreeSet<usize> = att.iter().copied().collect();
                            if set.len() != 4 {
                                continue;
                            }
                            let legs =
                                vec![(u, nu[i]), (u, nu[j]), (v, nv[k]), (v, nv[l])];
                            let mut extra = legs.clone();
                            extra.push((u, v));
                            if let Some(p) = make_partition(
                                g,
                                cycle,
                                PartitionKind::Biclaw,
                                vec![u, v],
                                legs,
                                &extra,
                            ) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }

    // triclaws: interior triangle with one leg each, distinct attachments
    for &u in &interior {
        for &v in g.neighbors(u) {
            if v <= u || !sides.interior.contains(&v) {
                continue;
            }
            for &w in g.neighbors(v) {
                if w <= v || !sides.interior.contains(&w) || !g.has_edge(u, w) {
                    continue;
                }
                for &ua in &on_cycle_neighbors(u) {
                    for &va in &on_cycle_neighbors(v) {
                        for &wa in &on_cycle_neighbors(w) {
                            let set: BTreeSet<usize> = [ua, va, wa].into_iter().collect();
                            if set.len() != 3 {
                                continue;
                            }
                            let legs = vec![(u, ua), (v, va), (w, wa)];
                            let mut extra = legs.clone();
                            extra.extend([(u, v), (v, w), (u, w)]);
                            if let Some(p) = make_partition(
                                g,
                                cycle,
                                PartitionKind::Triclaw,
                                vec![u, v, w],
                                legs,
                                &extra,
                            ) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }

    out.sort_by(|a, b| {
        (a.kind, &a.signature, &a.anchors, &a.legs).cmp(&(b.kind, &b.signature, &b.anchors, &b.legs))
    });
    Ok(out)
}

/// 3-cycles of `g`, other than the cycle itself, sharing at least one edge
/// with it.
pub fn triangles_adjacent_to_cycle(g: &PlaneGraph, cycle: &[usize]) -> Vec<[usize; 3]> {
    let canon = canonical_cycle(cycle);
    let cycle_edges = walk_edges(cycle);
    g.triangles()
        .into_iter()
        .filter(|t| {
            let walk = [t[0], t[1], t[2]];
            if cycle.len() == 3 && canonical_cycle(&walk) == canon {
                return false;
            }
            let te = [
                norm_edge(t[0], t[1]),
                norm_edge(t[0], t[2]),
                norm_edge(t[1], t[2]),
            ];
            te.iter().any(|e| cycle_edges.contains(e))
        })
        .collect()
}

/// Full classification of one cycle.
pub fn classify_cycle(g: &PlaneGraph, cycle: &[usize]) -> Result<CycleRecord, StructureError> {
    let sides = side_decomposition(g, cycle)?;
    let canon = canonical_cycle(cycle);
    let length = cycle.len();

    let facial = g
        .faces()
        .iter()
        .any(|f| f.size() == length && f.is_simple_cycle() && canonical_cycle(&f.walk) == canon);
    let separating = !sides.interior.is_empty() && !sides.exterior.is_empty();

    let partitions = find_bad_partitions(g, cycle)?;
    let has_interior_structure = partitions
        .iter()
        .any(|p| p.kind != PartitionKind::Chord);
    let good = length <= 12 && !has_interior_structure;
    let bad = length <= 12 && has_interior_structure;
    let special9 = length == 9
        && partitions.iter().any(|p| {
            (p.kind == PartitionKind::Chord && p.signature == [3, 8])
                || (p.kind == PartitionKind::Claw && p.signature == [5, 5, 5])
        });

    let adjacent_triangles = triangles_adjacent_to_cycle(g, cycle);
    let triangular = !adjacent_triangles.is_empty();
    let ext_triangular = adjacent_triangles.iter().any(|t| {
        let verts_ok = t
            .iter()
            .all(|&v| sides.vertex_side(v) != Side::Interior);
        let edges_ok = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            .iter()
            .all(|&(a, b)| sides.edge_side(g, a, b) != Side::Interior);
        verts_ok && edges_ok
    });

    Ok(CycleRecord {
        vertices: canon,
        length,
        interior: sides.interior,
        exterior: sides.exterior,
        flags: CycleFlags {
            facial,
            separating,
            good,
            bad,
            special9,
            triangular,
            ext_triangular,
        },
    })
}

/// All splitting paths of the outer boundary with the given edge length
/// (2..=5): both ends on the boundary, all inner vertices strictly inside.
pub fn find_splitting_paths(
    g: &PlaneGraph,
    len: usize,
) -> Result<Vec<Vec<usize>>, StructureError> {
    assert!((2..=5).contains(&len), "splitting paths have length 2..=5");
    let outer = g.outer_face();
    if !outer.is_simple_cycle() {
        return Err(StructureError::NonSimpleOuter);
    }
    let boundary: BTreeSet<usize> = outer.walk.iter().copied().collect();
    let internal = g.internal_vertices();

    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    fn dfs(
        g: &PlaneGraph,
        boundary: &BTreeSet<usize>,
        internal: &BTreeSet<usize>,
        len: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        if path.len() == len {
            for &w in g.neighbors(last) {
                if boundary.contains(&w) && w > path[0] {
                    let mut full = path.clone();
                    full.push(w);
                    out.push(full);
                }
            }
            return;
        }
        for &w in g.neighbors(last) {
            if internal.contains(&w) && !path.contains(&w) {
                path.push(w);
                dfs(g, boundary, internal, len, path, out);
                path.pop();
            }
        }
    }

    for &start in &boundary {
        path.clear();
        path.push(start);
        dfs(g, &boundary, &internal, len, &mut path, &mut out);
    }
    out.sort();
    Ok(out)
}

/// The two cycles a splitting path cuts the outer boundary into.
pub fn split_outer_by_path(g: &PlaneGraph, path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let outer = &g.outer_face().walk;
    let len = outer.len();
    let a = outer.iter().position(|&v| v == path[0]).expect("end on boundary");
    let b = outer
        .iter()
        .position(|&v| v == *path.last().unwrap())
        .expect("end on boundary");

    let mut arc1 = Vec::new();
    let mut i = a;
    while i != b {
        arc1.push(outer[i]);
        i = (i + 1) % len;
    }
    arc1.push(outer[b]);
    let mut arc2 = Vec::new();
    let mut i = b;
    while i != a {
        arc2.push(outer[i]);
        i = (i + 1) % len;
    }
    arc2.push(outer[a]);

    // path runs a -> b; arc1 runs a -> b, arc2 runs b -> a
    let inner: Vec<usize> = path[1..path.len() - 1].to_vec();
    let mut d1 = arc1;
    d1.extend(inner.iter().rev());
    let mut d2 = arc2;
    d2.extend(inner.iter());
    (d1, d2)
}

/// 3-edge paths along a face boundary whose four vertices are internal
/// 3-vertices and whose first or last edge lies on a triangle.
pub fn find_good_paths(g: &PlaneGraph, face: &Face) -> Vec<Vec<usize>> {
    let walk = &face.walk;
    let k = walk.len();
    if k < 4 {
        return Vec::new();
    }
    let edge_on_triangle = |u: usize, v: usize| {
        g.neighbors(u)
            .intersection(g.neighbors(v))
            .next()
            .is_some()
    };
    let mut out = Vec::new();
    for i in 0..k {
        let p: Vec<usize> = (0..4).map(|d| walk[(i + d) % k]).collect();
        let distinct: BTreeSet<usize> = p.iter().copied().collect();
        if distinct.len() != 4 {
            continue;
        }
        if !p.iter().all(|&v| g.is_internal(v) && g.degree(v) == 3) {
            continue;
        }
        if edge_on_triangle(p[0], p[1]) || edge_on_triangle(p[2], p[3]) {
            out.push(p);
        }
    }
    out.sort();
    out
}

/// A light 7-face: size 7, shares an edge with a 3-face, has no external
/// vertex, and every incident vertex not on a triangle has degree 3.
pub fn is_light_7face(g: &PlaneGraph, face: &Face) -> bool {
    if face.size() != 7 || !face.is_simple_cycle() {
        return false;
    }
    if face.walk.iter().any(|&v| g.is_external(v)) {
        return false;
    }
    let meets_3face = face.edge_set().iter().any(|&(u, v)| {
        let (fa, fb) = g.faces_on_edge(u, v);
        let other = if fa == face.id { fb } else { fa };
        other != face.id && g.face(other).size() == 3
    });
    if !meets_3face {
        return false;
    }
    face.walk
        .iter()
        .all(|&v| g.is_triangular_vertex(v) || g.degree(v) == 3)
}

/// Adjacent 3-face instances of a face: (3-face id, shared edge).
pub fn adjacent_3faces(g: &PlaneGraph, face: &Face) -> Vec<(usize, (usize, usize))> {
    let mut out = Vec::new();
    for &(u, v) in face.edge_set().iter() {
        let (fa, fb) = g.faces_on_edge(u, v);
        let other = if fa == face.id { fb } else { fa };
        if other != face.id && g.face(other).size() == 3 {
            out.push((other, (u, v)));
        }
    }
    out.sort();
    out
}

/// A vertex is bad when it is an internal triangular 3-vertex.
pub fn is_bad_vertex(g: &PlaneGraph, v: usize) -> bool {
    g.is_internal(v) && g.degree(v) == 3 && g.is_triangular_vertex(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVertexClasses {
    /// good vertices whose both face neighbors are bad
    pub a: BTreeSet<usize>,
    /// good vertices with exactly one bad face neighbor
    pub b: BTreeSet<usize>,
    /// good vertices with two good face neighbors
    pub c: BTreeSet<usize>,
    /// bad vertices on the face
    pub d: BTreeSet<usize>,
    /// 1/3·|A| + 7/24·|B| + 1/6·|C| + 1/3·|f| − 4
    pub star_bound: Rat,
}

/// Partition the vertices of a face into the A/B/C/D classes by the badness
/// of each vertex and its two neighbors along the boundary.
pub fn classify_face_vertices(
    g: &PlaneGraph,
    face: &Face,
) -> Result<FaceVertexClasses, StructureError> {
    if !face.is_simple_cycle() {
        return Err(StructureError::NonSimpleFace);
    }
    let walk = &face.walk;
    let k = walk.len();
    let bad: Vec<bool> = walk.iter().map(|&v| is_bad_vertex(g, v)).collect();

    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    let mut c = BTreeSet::new();
    let mut d = BTreeSet::new();
    for i in 0..k {
        let v = walk[i];
        if bad[i] {
            d.insert(v);
            continue;
        }
        let bad_neighbors =
            usize::from(bad[(i + k - 1) % k]) + usize::from(bad[(i + 1) % k]);
        match bad_neighbors {
            2 => a.insert(v),
            1 => b.insert(v),
            _ => c.insert(v),
        };
    }

    let star_bound = Rat::new(a.len() as i64, 3)
        + Rat::new(7 * b.len() as i64, 24)
        + Rat::new(c.len() as i64, 6)
        + Rat::new(k as i64, 3)
        + Rat::int(-4);

    Ok(FaceVertexClasses {
        a,
        b,
        c,
        d,
        star_bound,
    })
}

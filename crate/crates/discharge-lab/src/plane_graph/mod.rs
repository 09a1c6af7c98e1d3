//! Plane graphs stored as rotation systems.
//!
//! A plane graph is a simple connected graph together with, for every
//! vertex, the clockwise cyclic order of its neighbors. Faces are derived
//! by tracing directed edges ("next neighbor after the reverse edge"), and
//! an embedding is accepted only if Euler's formula for the sphere holds.
//! One face is designated the outer face; vertices on it are external,
//! everything else is internal.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod fixtures;
mod parse;

pub use parse::{
    emit_planar_code, emit_rotation_text, parse_planar_code, parse_planar_code_records,
    parse_rotation_text, PLANAR_CODE_HEADER,
};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("rotation of vertex {u} lists {v} but not vice versa")]
    AsymmetricRotation { u: usize, v: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("parallel edge {u}-{v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation system is not planar: n={n}, e={e} traces {f} faces, Euler needs {need}")]
    EulerViolation {
        n: usize,
        e: usize,
        f: usize,
        need: usize,
    },
    #[error("declared outer walk matches no face")]
    OuterFaceNotFound,
    #[error("planar_code stream truncated in graph {index}")]
    Truncated { index: usize },
    #[error("graph {index} in stream: {source}")]
    InStream {
        index: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("face walks do not define a plane graph: {0}")]
    BadFaceWalks(String),
    #[error("planar_code supports at most 255 vertices, got {0}")]
    TooLargeForPlanarCode(usize),
}

/// A face of the embedding. The boundary walk lists vertices in tracing
/// order; its length equals the number of edge sides on the face, so for a
/// simple boundary it is the face size in the usual sense.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub walk: Vec<usize>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.walk.len()
    }

    /// True when the boundary walk is a simple cycle (no repeated vertex).
    pub fn is_simple_cycle(&self) -> bool {
        if self.walk.len() < 3 {
            return false;
        }
        let set: BTreeSet<usize> = self.walk.iter().copied().collect();
        set.len() == self.walk.len()
    }

    /// Undirected edges of the boundary walk.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        walk_edges(&self.walk)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub simple: bool,
    pub connected: bool,
    pub euler_ok: bool,
    pub two_connected: bool,
    pub all_faces_simple: bool,
    pub cut_vertices: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<BTreeSet<usize>>,
    faces: Vec<Face>,
    /// face id of each directed edge (u, v)
    directed_face: HashMap<(usize, usize), usize>,
    outer_face: usize,
}

impl PlaneGraph {
    /// Build a plane graph from a rotation system (0-based neighbor lists in
    /// clockwise order). `outer` may name the outer face by its boundary
    /// walk; otherwise the largest face wins, ties broken by smallest id.
    pub fn from_rotation(
        rotation: Vec<Vec<usize>>,
        outer: Option<&[usize]>,
    ) -> Result<Self, GraphError> {
        let n = rotation.len();
        let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (u, nbrs) in rotation.iter().enumerate() {
            for &v in nbrs {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { id: v + 1, n });
                }
                if v == u {
                    return Err(GraphError::LoopEdge(u));
                }
                if !adjacency[u].insert(v) {
                    return Err(GraphError::ParallelEdge {
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
            }
        }
        for u in 0..n {
            for &v in &adjacency[u] {
                if !adjacency[v].contains(&u) {
                    return Err(GraphError::AsymmetricRotation { u, v });
                }
            }
        }

        let mut edges: Vec<(usize, usize)> = Vec::new();
        for u in 0..n {
            for &v in &adjacency[u] {
                if u < v {
                    edges.push((u, v));
                }
            }
        }

        if n == 0 || !is_connected(n, &adjacency) {
            return Err(GraphError::Disconnected);
        }

        let (faces, directed_face) = trace_faces(&rotation);
        let e = edges.len();
        let f = faces.len();
        if n + f != e + 2 {
            return Err(GraphError::EulerViolation {
                n,
                e,
                f,
                need: (e + 2).saturating_sub(n),
            });
        }

        let outer_face = match outer {
            Some(walk) => faces
                .iter()
                .find(|face| same_cycle(&face.walk, walk))
                .map(|face| face.id)
                .ok_or(GraphError::OuterFaceNotFound)?,
            None => faces
                .iter()
                .max_by(|a, b| a.size().cmp(&b.size()).then(b.id.cmp(&a.id)))
                .map(|face| face.id)
                .unwrap_or(0),
        };

        Ok(PlaneGraph {
            rotation,
            edges,
            adjacency,
            faces,
            directed_face,
            outer_face,
        })
    }

    /// Build from a full list of face boundary walks. Walk orientations are
    /// reconciled automatically; the map must use every edge side exactly
    /// once. `outer` picks the outer face by walk, as in `from_rotation`.
    pub fn from_face_walks(
        walks: &[Vec<usize>],
        outer: Option<&[usize]>,
    ) -> Result<Self, GraphError> {
        if walks.is_empty() {
            return Err(GraphError::BadFaceWalks("no walks given".into()));
        }
        let n = 1 + walks
            .iter()
            .flat_map(|w| w.iter().copied())
            .max()
            .unwrap_or(0);

        // Orient walks consistently: two walks sharing an undirected edge
        // must traverse it in opposite directions.
        let mut oriented: Vec<Option<Vec<usize>>> = vec![None; walks.len()];
        let mut queue = VecDeque::new();
        oriented[0] = Some(walks[0].clone());
        queue.push_back(0usize);
        while let Some(i) = queue.pop_front() {
            let w = oriented[i].clone().unwrap();
            for k in 0..w.len() {
                let (a, b) = (w[k], w[(k + 1) % w.len()]);
                // find the other walk on this undirected edge and orient it
                for (j, other) in walks.iter().enumerate() {
                    if oriented[j].is_some() {
                        continue;
                    }
                    if walk_edges(other).contains(&norm_edge(a, b)) {
                        let mut cand = other.clone();
                        if walk_has_directed(&cand, a, b) {
                            cand.reverse();
                        }
                        if walk_has_directed(&cand, a, b) {
                            return Err(GraphError::BadFaceWalks(format!(
                                "cannot orient walk {j} against edge {}-{}",
                                a + 1,
                                b + 1
                            )));
                        }
                        oriented[j] = Some(cand);
                        queue.push_back(j);
                    }
                }
            }
        }
        if oriented.iter().any(|w| w.is_none()) {
            return Err(GraphError::BadFaceWalks(
                "walks are not edge-connected".into(),
            ));
        }

        // Every directed edge must appear exactly once over all walks.
        let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for w in oriented.iter().flatten() {
            let len = w.len();
            for k in 0..len {
                let a = w[k];
                let v = w[(k + 1) % len];
                let b = w[(k + 2) % len];
                if !seen.insert((a, v)) {
                    return Err(GraphError::BadFaceWalks(format!(
                        "directed edge {}->{} appears twice",
                        a + 1,
                        v + 1
                    )));
                }
                if succ[v].insert(a, b).is_some() {
                    return Err(GraphError::BadFaceWalks(format!(
                        "corner conflict at vertex {}",
                        v + 1
                    )));
                }
            }
        }

        // The successor map at each vertex must be a single cyclic order.
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let map = &succ[v];
            if map.is_empty() {
                return Err(GraphError::BadFaceWalks(format!(
                    "vertex {} has no incident edge",
                    v + 1
                )));
            }
            let start = *map.keys().min().unwrap();
            let mut order = vec![start];
            let mut cur = map[&start];
            while cur != start {
                if order.len() > map.len() {
                    return Err(GraphError::BadFaceWalks(format!(
                        "rotation at vertex {} is not a single cycle",
                        v + 1
                    )));
                }
                order.push(cur);
                cur = *map.get(&cur).ok_or_else(|| {
                    GraphError::BadFaceWalks(format!("rotation at vertex {} is broken", v + 1))
                })?;
            }
            if order.len() != map.len() {
                return Err(GraphError::BadFaceWalks(format!(
                    "rotation at vertex {} splits into several cycles",
                    v + 1
                )));
            }
            rotation.push(order);
        }

        PlaneGraph::from_rotation(rotation, outer)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_system(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].contains(&v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    pub fn outer_face_id(&self) -> usize {
        self.outer_face
    }

    pub fn outer_face(&self) -> &Face {
        &self.faces[self.outer_face]
    }

    /// Face on the left of the directed edge (u, v) under the tracing rule.
    pub fn face_of_directed(&self, u: usize, v: usize) -> usize {
        self.directed_face[&(u, v)]
    }

    /// The two face ids bordering an undirected edge (equal for a bridge).
    pub fn faces_on_edge(&self, u: usize, v: usize) -> (usize, usize) {
        (self.directed_face[&(u, v)], self.directed_face[&(v, u)])
    }

    /// Face ids incident to `v`, one per corner, deduplicated.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.rotation[v]
            .iter()
            .map(|&w| self.directed_face[&(v, w)])
            .collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Face ids at the corners of `v` in rotation order, with multiplicity.
    pub fn corner_faces(&self, v: usize) -> Vec<usize> {
        self.rotation[v]
            .iter()
            .map(|&w| self.directed_face[&(v, w)])
            .collect()
    }

    pub fn is_external(&self, v: usize) -> bool {
        self.faces[self.outer_face].walk.contains(&v)
    }

    pub fn is_internal(&self, v: usize) -> bool {
        !self.is_external(v)
    }

    pub fn external_vertices(&self) -> BTreeSet<usize> {
        self.faces[self.outer_face].walk.iter().copied().collect()
    }

    pub fn internal_vertices(&self) -> BTreeSet<usize> {
        let ext = self.external_vertices();
        (0..self.n()).filter(|v| !ext.contains(v)).collect()
    }

    /// Multiset of face sizes, sorted ascending.
    pub fn face_size_multiset(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.faces.iter().map(Face::size).collect();
        sizes.sort_unstable();
        sizes
    }

    /// All 3-cycles, as sorted vertex triples.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for &w in self.adjacency[u].intersection(&self.adjacency[v]) {
                if w > v {
                    out.push([u, v, w]);
                }
            }
        }
        out
    }

    /// True when `v` lies on some 3-cycle.
    pub fn is_triangular_vertex(&self, v: usize) -> bool {
        let nbrs: Vec<usize> = self.adjacency[v].iter().copied().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if self.adjacency[a].contains(&b) {
                    return true;
                }
            }
        }
        false
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        cut_vertices(self.n(), &self.adjacency)
    }

    pub fn is_two_connected(&self) -> bool {
        self.n() >= 3 && self.cut_vertices().is_empty()
    }

    pub fn validate(&self) -> ValidationReport {
        let cut = self.cut_vertices();
        ValidationReport {
            simple: true,
            connected: true,
            euler_ok: true,
            two_connected: self.n() >= 3 && cut.is_empty(),
            all_faces_simple: self.faces.iter().all(Face::is_simple_cycle),
            cut_vertices: cut,
        }
    }
}

pub(crate) fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

pub(crate) fn walk_edges(walk: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut set = BTreeSet::new();
    let len = walk.len();
    for i in 0..len {
        set.insert(norm_edge(walk[i], walk[(i + 1) % len]));
    }
    set
}

fn walk_has_directed(walk: &[usize], a: usize, b: usize) -> bool {
    let len = walk.len();
    (0..len).any(|i| walk[i] == a && walk[(i + 1) % len] == b)
}

/// Canonical form of a cyclic vertex sequence: the lexicographically
/// smallest among all rotations of the sequence and of its reverse.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut consider = |seq: &[usize]| {
        for start in 0..len {
            let rotated: Vec<usize> = (0..len).map(|i| seq[(start + i) % len]).collect();
            if best.as_ref().map_or(true, |b| rotated < *b) {
                best = Some(rotated);
            }
        }
    };
    consider(cycle);
    let rev: Vec<usize> = cycle.iter().rev().copied().collect();
    consider(&rev);
    best.unwrap()
}

/// True when two vertex sequences describe the same cycle up to rotation
/// and reflection.
pub fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && canonical_cycle(a) == canonical_cycle(b)
}

fn is_connected(n: usize, adjacency: &[BTreeSet<usize>]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

fn cut_vertices(n: usize, adjacency: &[BTreeSet<usize>]) -> Vec<usize> {
    // iterative Tarjan lowlink
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut root_children = 0usize;
        let mut stack: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, adjacency[root].iter().copied().collect(), 0));
        while let Some((u, nbrs, idx)) = stack.last_mut() {
            if *idx < nbrs.len() {
                let v = nbrs[*idx];
                *idx += 1;
                let u = *u;
                if disc[v] == usize::MAX {
                    parent[v] = u;
                    if u == root {
                        root_children += 1;
                    }
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, adjacency[v].iter().copied().collect(), 0));
                } else if v != parent[u] {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                let u = *u;
                stack.pop();
                if let Some((p, _, _)) = stack.last() {
                    let p = *p;
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Trace all faces of a rotation system. Each directed edge is consumed
/// exactly once: from (u, v) the walk continues with (v, w) where w follows
/// u in the rotation of v.
pub fn trace_faces(rotation: &[Vec<usize>]) -> (Vec<Face>, HashMap<(usize, usize), usize>) {
    let n = rotation.len();
    let mut pos: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for (v, nbrs) in rotation.iter().enumerate() {
        for (i, &w) in nbrs.iter().enumerate() {
            pos[v].insert(w, i);
        }
    }
    let mut directed_face = HashMap::new();
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in &rotation[u] {
            if directed_face.contains_key(&(u, v)) {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                walk.push(a);
                directed_face.insert((a, b), id);
                let i = pos[b][&a];
                let w = rotation[b][(i + 1) % rotation[b].len()];
                a = b;
                b = w;
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(Face { id, walk });
        }
    }
    if faces.is_empty() && n == 1 {
        // single isolated vertex: one face covering the whole sphere
        faces.push(Face {
            id: 0,
            walk: Vec::new(),
        });
    }
    (faces, directed_face)
}

//! Configuration audits and the reduction-condition checker.
//!
//! Each audit check encodes one structural conclusion that must hold in a
//! minimal counterexample; a finding is a violated conclusion, certifying
//! that the audited graph is not shaped like one. The reduction checker
//! evaluates the side conditions of the vertex-deletion surgeries
//! combinatorially on the original graph, without rebuilding an embedding.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::class_membership::{check_class_g, ClassReport};
use crate::exec;
use crate::plane_graph::{norm_edge, PlaneGraph};
use crate::structures::{
    self, enumerate_cycles, find_bad_partitions, find_splitting_paths, is_bad_vertex,
    split_outer_by_path, BadPartition, CycleRecord, PartitionKind, Side, StructureError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AuditLemma {
    MinDegree,
    TwoConnected,
    SeparatingGoodCycle,
    NonFacialSmallCycle,
    BadCycleCatalog,
    TriangularBadCycle,
    SplittingPathFace,
    GoodPathOnFace,
    AllThreeFace,
    LightSevenPair,
    ChordedEight,
    NineFaceConfig,
}

pub const AUDIT_LEMMAS: [AuditLemma; 12] = [
    AuditLemma::MinDegree,
    AuditLemma::TwoConnected,
    AuditLemma::SeparatingGoodCycle,
    AuditLemma::NonFacialSmallCycle,
    AuditLemma::BadCycleCatalog,
    AuditLemma::TriangularBadCycle,
    AuditLemma::SplittingPathFace,
    AuditLemma::GoodPathOnFace,
    AuditLemma::AllThreeFace,
    AuditLemma::LightSevenPair,
    AuditLemma::ChordedEight,
    AuditLemma::NineFaceConfig,
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub lemma: AuditLemma,
    pub vertices: Vec<usize>,
    pub faces: Vec<usize>,
    pub cycles: Vec<Vec<usize>>,
    pub detail: String,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("graph is not in the studied class; catalog check does not apply")]
    NotInClass(ClassReport),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

struct AuditContext {
    /// all cycles of length at most 12, classified
    records: Vec<CycleRecord>,
    /// partitions per canonical cycle
    partitions: BTreeMap<Vec<usize>, Vec<BadPartition>>,
    in_class_g: bool,
}

fn build_context(g: &PlaneGraph) -> AuditContext {
    let records = enumerate_cycles(g, 12).expect("12 is within the length limit");
    let partitions = records
        .iter()
        .map(|r| {
            let parts = find_bad_partitions(g, &r.vertices).expect("record is a cycle");
            (r.vertices.clone(), parts)
        })
        .collect();
    let in_class_g = check_class_g(g).map(|r| r.member).unwrap_or(false);
    AuditContext {
        records,
        partitions,
        in_class_g,
    }
}

fn check_min_degree(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    (0..g.n())
        .filter(|&v| g.is_internal(v) && g.degree(v) < 3)
        .map(|v| AuditFinding {
            lemma: AuditLemma::MinDegree,
            vertices: vec![v],
            faces: vec![],
            cycles: vec![],
            detail: format!("internal vertex v{} has degree {}", v + 1, g.degree(v)),
        })
        .collect()
}

fn check_two_connected(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    if g.is_two_connected() {
        return Vec::new();
    }
    vec![AuditFinding {
        lemma: AuditLemma::TwoConnected,
        vertices: g.cut_vertices(),
        faces: vec![],
        cycles: vec![],
        detail: "graph is not 2-connected".into(),
    }]
}

fn check_separating_good_cycle(_g: &PlaneGraph, ctx: &AuditContext) -> Vec<AuditFinding> {
    ctx.records
        .iter()
        .filter(|r| r.flags.separating && r.flags.good)
        .map(|r| AuditFinding {
            lemma: AuditLemma::SeparatingGoodCycle,
            vertices: vec![],
            faces: vec![],
            cycles: vec![r.vertices.clone()],
            detail: format!("separating good {}-cycle", r.length),
        })
        .collect()
}

fn check_nonfacial_small_cycle(_g: &PlaneGraph, ctx: &AuditContext) -> Vec<AuditFinding> {
    ctx.records
        .iter()
        .filter(|r| r.length <= 9 && !r.flags.facial)
        .filter(|r| {
            let excepted = r.length == 8
                && ctx.partitions[&r.vertices].iter().any(|p| {
                    p.kind == PartitionKind::Chord
                        && (p.signature == [3, 7] || p.signature == [5, 5])
                });
            !excepted
        })
        .map(|r| AuditFinding {
            lemma: AuditLemma::NonFacialSmallCycle,
            vertices: vec![],
            faces: vec![],
            cycles: vec![r.vertices.clone()],
            detail: format!("non-facial {}-cycle without an allowed chord", r.length),
        })
        .collect()
}

const CATALOG: [(usize, PartitionKind, &[usize]); 6] = [
    (11, PartitionKind::Claw, &[3, 7, 7]),
    (11, PartitionKind::Claw, &[5, 5, 7]),
    (12, PartitionKind::Claw, &[5, 5, 8]),
    (12, PartitionKind::Biclaw, &[3, 7, 5, 7]),
    (12, PartitionKind::Biclaw, &[5, 5, 5, 7]),
    (12, PartitionKind::Triclaw, &[3, 7, 7, 7]),
];

fn is_cataloged(length: usize, p: &BadPartition) -> bool {
    CATALOG
        .iter()
        .any(|&(len, kind, sig)| len == length && kind == p.kind && p.signature == sig)
}

fn check_bad_cycle_catalog_ctx(_g: &PlaneGraph, ctx: &AuditContext) -> Vec<AuditFinding> {
    ctx.records
        .iter()
        .filter(|r| r.flags.bad)
        .filter_map(|r| {
            if r.length != 11 && r.length != 12 {
                return Some(AuditFinding {
                    lemma: AuditLemma::BadCycleCatalog,
                    vertices: vec![],
                    faces: vec![],
                    cycles: vec![r.vertices.clone()],
                    detail: format!("bad cycle of length {} (catalog allows 11 or 12)", r.length),
                });
            }
            let parts = &ctx.partitions[&r.vertices];
            if parts.iter().any(|p| is_cataloged(r.length, p)) {
                None
            } else {
                Some(AuditFinding {
                    lemma: AuditLemma::BadCycleCatalog,
                    vertices: vec![],
                    faces: vec![],
                    cycles: vec![r.vertices.clone()],
                    detail: format!(
                        "bad {}-cycle has no cataloged partition (found {:?})",
                        r.length,
                        parts
                            .iter()
                            .map(|p| (p.kind, p.signature.clone()))
                            .collect::<Vec<_>>()
                    ),
                })
            }
        })
        .collect()
}

fn check_triangular_bad_cycle(g: &PlaneGraph, ctx: &AuditContext) -> Vec<AuditFinding> {
    ctx.records
        .iter()
        .filter(|r| r.flags.bad)
        .filter_map(|r| {
            let triangles = structures::triangles_adjacent_to_cycle(g, &r.vertices);
            let mut problems = Vec::new();
            if triangles.len() >= 2 {
                problems.push(format!("adjacent to {} triangles", triangles.len()));
            }
            if r.flags.ext_triangular {
                let parts = &ctx.partitions[&r.vertices];
                let has_required = parts.iter().any(|p| {
                    (p.kind == PartitionKind::Claw && p.signature == [5, 5, 7])
                        || (p.kind == PartitionKind::Biclaw && p.signature == [5, 5, 5, 7])
                });
                if !has_required {
                    problems.push(
                        "ext-triangular without a (5,5,7)-claw or (5,5,5,7)-biclaw".into(),
                    );
                }
            }
            if problems.is_empty() {
                None
            } else {
                Some(AuditFinding {
                    lemma: AuditLemma::TriangularBadCycle,
                    vertices: vec![],
                    faces: vec![],
                    cycles: vec![r.vertices.clone()],
                    detail: problems.join("; "),
                })
            }
        })
        .collect()
}

fn face_of_cycle(g: &PlaneGraph, cycle: &[usize]) -> Option<usize> {
    g.faces()
        .iter()
        .find(|f| {
            f.size() == cycle.len()
                && f.is_simple_cycle()
                && crate::plane_graph::same_cycle(&f.walk, cycle)
        })
        .map(|f| f.id)
}

fn check_splitting_path_face(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    if !g.outer_face().is_simple_cycle() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for len in 2..=5usize {
        let Ok(paths) = find_splitting_paths(g, len) else {
            continue;
        };
        for path in paths {
            let (d1, d2) = split_outer_by_path(g, &path);
            let is_face_of_size = |cyc: &[usize], sizes: &[usize]| {
                sizes.contains(&cyc.len()) && face_of_cycle(g, cyc).is_some()
            };
            let ok = match len {
                2 => is_face_of_size(&d1, &[3]) || is_face_of_size(&d2, &[3]),
                3 => is_face_of_size(&d1, &[5]) || is_face_of_size(&d2, &[5]),
                4 => is_face_of_size(&d1, &[5, 7]) || is_face_of_size(&d2, &[5, 7]),
                _ => d1.len().min(d2.len()) <= 9,
            };
            if !ok {
                out.push(AuditFinding {
                    lemma: AuditLemma::SplittingPathFace,
                    vertices: path.clone(),
                    faces: vec![],
                    cycles: vec![d1.clone(), d2.clone()],
                    detail: format!(
                        "splitting {}-path cuts the boundary into {}- and {}-cycles with no required face between",
                        len,
                        d1.len(),
                        d2.len()
                    ),
                });
            }
        }
    }
    out
}

fn check_good_path_on_face(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    let mut out = Vec::new();
    for face in g.faces() {
        for path in structures::find_good_paths(g, face) {
            out.push(AuditFinding {
                lemma: AuditLemma::GoodPathOnFace,
                vertices: path,
                faces: vec![face.id],
                cycles: vec![],
                detail: format!("good path on a {}-face", face.size()),
            });
        }
    }
    out
}

fn check_all_three_face(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    g.faces()
        .iter()
        .filter(|f| {
            (f.size() == 5 || f.size() == 7)
                && f.is_simple_cycle()
                && f.walk
                    .iter()
                    .all(|&v| g.is_internal(v) && g.degree(v) == 3)
        })
        .map(|f| AuditFinding {
            lemma: AuditLemma::AllThreeFace,
            vertices: vec![],
            faces: vec![f.id],
            cycles: vec![],
            detail: format!("{}-face with only internal 3-vertices", f.size()),
        })
        .collect()
}

fn check_light_seven_pair(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    let sevens: Vec<usize> = g
        .faces()
        .iter()
        .filter(|f| f.size() == 7 && f.is_simple_cycle())
        .map(|f| f.id)
        .collect();
    let mut out = Vec::new();
    for (i, &fa) in sevens.iter().enumerate() {
        for &fb in &sevens[i + 1..] {
            let wa = &g.face(fa).walk;
            let wb = &g.face(fb).walk;
            let common: Vec<usize> = wa.iter().filter(|v| wb.contains(v)).copied().collect();
            if common.len() != 1 {
                continue;
            }
            let x = common[0];
            if !g.is_internal(x) || g.degree(x) != 4 {
                continue;
            }
            let face_neighbors = |walk: &[usize]| -> [usize; 2] {
                let k = walk.len();
                let i = walk.iter().position(|&v| v == x).unwrap();
                [walk[(i + k - 1) % k], walk[(i + 1) % k]]
            };
            let mut matched = false;
            for &v1 in &face_neighbors(wa) {
                for &u1 in &face_neighbors(wb) {
                    if !g.has_edge(u1, v1) {
                        continue;
                    }
                    if !(g.is_internal(u1) && g.degree(u1) == 4) {
                        continue;
                    }
                    let others_ok = wa
                        .iter()
                        .chain(wb.iter())
                        .filter(|&&v| v != x && v != u1)
                        .all(|&v| g.is_internal(v) && g.degree(v) == 3);
                    if others_ok {
                        out.push(AuditFinding {
                            lemma: AuditLemma::LightSevenPair,
                            vertices: vec![x, u1, v1],
                            faces: vec![fa, fb],
                            cycles: vec![],
                            detail: "paired 7-faces with a unique shared 4-vertex".into(),
                        });
                        matched = true;
                        break;
                    }
                }
                if matched {
                    break;
                }
            }
        }
    }
    out
}

fn check_chorded_eight(g: &PlaneGraph, ctx: &AuditContext) -> Vec<AuditFinding> {
    let mut out = Vec::new();
    for r in ctx.records.iter().filter(|r| r.length == 8) {
        let sides = match structures::side_decomposition(g, &r.vertices) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let c = &r.vertices;
        let mut reported = false;
        for i in 0..8 {
            if reported {
                break;
            }
            let (p, q) = (c[i], c[(i + 2) % 8]);
            if !g.has_edge(p, q) || sides.edge_side(g, p, q) != Side::Interior {
                continue;
            }
            let y = c[(i + 1) % 8];
            for (x, z) in [(p, q), (q, p)] {
                let z_ok = g.is_internal(z) && g.degree(z) == 4;
                let rest_ok = c
                    .iter()
                    .filter(|&&v| v != z)
                    .all(|&v| g.is_internal(v) && g.degree(v) == 3);
                if z_ok && rest_ok {
                    out.push(AuditFinding {
                        lemma: AuditLemma::ChordedEight,
                        vertices: vec![x, y, z],
                        faces: vec![],
                        cycles: vec![c.clone()],
                        detail: "8-cycle with a short chord, an internal 4-vertex, and internal 3-vertices elsewhere".into(),
                    });
                    reported = true;
                    break;
                }
            }
        }
    }
    out
}

fn check_nine_face_config(g: &PlaneGraph, _ctx: &AuditContext) -> Vec<AuditFinding> {
    let mut out = Vec::new();
    for face in g.faces() {
        if face.size() != 9 || !face.is_simple_cycle() {
            continue;
        }
        let three_face_on = |u: usize, v: usize| -> bool {
            if !g.has_edge(u, v) {
                return false;
            }
            let (fa, fb) = g.faces_on_edge(u, v);
            let other = if fa == face.id { fb } else { fa };
            other != face.id && g.face(other).size() == 3
        };
        let mut labelings: Vec<Vec<usize>> = Vec::new();
        let fwd = face.walk.clone();
        let mut rev = fwd.clone();
        rev.reverse();
        for base in [fwd, rev] {
            for start in 0..9 {
                labelings.push((0..9).map(|d| base[(start + d) % 9]).collect());
            }
        }
        let mut found: Option<Vec<usize>> = None;
        for u in labelings {
            let bad_ok = [0, 1, 2, 4, 5, 6].iter().all(|&i| is_bad_vertex(g, u[i]));
            if !bad_ok {
                continue;
            }
            let u4 = u[3];
            let three_faces_at_u4 = g
                .faces_at(u4)
                .into_iter()
                .filter(|&fid| g.face(fid).size() == 3)
                .count();
            if g.degree(u4) != 4 || three_faces_at_u4 != 2 {
                continue;
            }
            if three_face_on(u[0], u[1])
                && three_face_on(u[2], u[3])
                && three_face_on(u[3], u[4])
                && three_face_on(u[5], u[6])
            {
                found = Some(u);
                break;
            }
        }
        if let Some(u) = found {
            out.push(AuditFinding {
                lemma: AuditLemma::NineFaceConfig,
                vertices: u,
                faces: vec![face.id],
                cycles: vec![],
                detail: "9-face with six bad vertices and a 4-vertex carrying two 3-faces".into(),
            });
        }
    }
    out
}

/// Run all audit checks. The catalog check only applies to members of the
/// studied class and is skipped otherwise. Findings come back
/// deterministically ordered.
pub fn audit_lemma_configurations(g: &PlaneGraph) -> Vec<AuditFinding> {
    let ctx = build_context(g);
    type Check = fn(&PlaneGraph, &AuditContext) -> Vec<AuditFinding>;
    let mut checks: Vec<Check> = vec![
        check_min_degree,
        check_two_connected,
        check_separating_good_cycle,
        check_nonfacial_small_cycle,
        check_triangular_bad_cycle,
        check_splitting_path_face,
        check_good_path_on_face,
        check_all_three_face,
        check_light_seven_pair,
        check_chorded_eight,
        check_nine_face_config,
    ];
    if ctx.in_class_g {
        checks.push(check_bad_cycle_catalog_ctx);
    }
    let mut findings: Vec<AuditFinding> = exec::map_collect(checks, |check| check(g, &ctx))
        .into_iter()
        .flatten()
        .collect();
    findings.sort_by(|a, b| {
        (a.lemma, &a.vertices, &a.faces, &a.cycles).cmp(&(b.lemma, &b.vertices, &b.faces, &b.cycles))
    });
    findings
}

/// Raw catalog scan without the class precondition; use this to exercise
/// the detection path on graphs outside the class.
pub fn scan_bad_cycle_catalog(g: &PlaneGraph) -> Vec<AuditFinding> {
    let ctx = build_context(g);
    let mut findings = check_bad_cycle_catalog_ctx(g, &ctx);
    findings.sort_by(|a, b| a.cycles.cmp(&b.cycles));
    findings
}

/// Catalog check with the class membership precondition enforced.
pub fn check_bad_cycle_catalog(g: &PlaneGraph) -> Result<Vec<AuditFinding>, CatalogError> {
    let report = check_class_g(g)?;
    if !report.member {
        return Err(CatalogError::NotInClass(report));
    }
    Ok(scan_bad_cycle_catalog(g))
}

// ---------------------------------------------------------------------------
// reduction checking

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionOp {
    /// delete S, then merge two surviving vertices
    Identify(usize, usize),
    /// delete S, then join two surviving nonadjacent vertices
    AddEdge(usize, usize),
    /// delete S, then identify edge (u1,u2) with (v1,v2), u1 onto v1
    IdentifyEdges((usize, usize), (usize, usize)),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSpec {
    pub delete: BTreeSet<usize>,
    pub op: ReductionOp,
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error("the deleted set must be nonempty")]
    EmptyDeleteSet,
    #[error("vertex {0} in the deleted set is not internal")]
    DeleteNotInternal(usize),
    #[error("operation endpoint {0} does not survive the deletion")]
    EndpointDeleted(usize),
    #[error("operation endpoints must be distinct")]
    EndpointsEqual,
    #[error("edge addition endpoints are already adjacent")]
    AlreadyAdjacent,
    #[error("identification endpoints are adjacent")]
    IdentifyAdjacent,
    #[error("({0}, {1}) is not an edge of the graph minus the deleted set")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
}

/// A cycle the operation would create, described by its preimage path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreatedCycle {
    pub length: usize,
    /// path in the graph minus the deleted set whose closure is the cycle
    pub path: Vec<usize>,
    /// a surviving triangle shares an edge with the path
    pub triangular: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// no two boundary vertices identified, no boundary-boundary edge made
    pub condition_a: bool,
    pub condition_a_witnesses: Vec<String>,
    /// no 6-or-shorter cycle and no triangular 7/8-cycle created
    pub condition_b: bool,
    pub condition_b_witnesses: Vec<CreatedCycle>,
    /// for edge identification: one edge avoids all 8-or-shorter cycles
    pub edge_side_condition: Option<bool>,
    pub pass: bool,
}

fn surviving_neighbors(g: &PlaneGraph, v: usize, s: &BTreeSet<usize>) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .copied()
        .filter(|w| !s.contains(w))
        .collect()
}

/// All simple paths from `a` to `b` in g - s with between 2 and `max_edges`
/// edges.
fn bounded_paths(
    g: &PlaneGraph,
    s: &BTreeSet<usize>,
    a: usize,
    b: usize,
    max_edges: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![a];
    fn dfs(
        g: &PlaneGraph,
        s: &BTreeSet<usize>,
        b: usize,
        max_edges: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if s.contains(&w) || path.contains(&w) {
                continue;
            }
            if w == b {
                if path.len() >= 2 {
                    let mut full = path.clone();
                    full.push(b);
                    out.push(full);
                }
                continue;
            }
            if path.len() < max_edges {
                path.push(w);
                dfs(g, s, b, max_edges, path, out);
                path.pop();
            }
        }
    }
    dfs(g, s, b, max_edges, &mut path, &mut out);
    out
}

fn surviving_triangle_on_path(g: &PlaneGraph, s: &BTreeSet<usize>, path: &[usize]) -> bool {
    let edges: BTreeSet<(usize, usize)> = path
        .windows(2)
        .map(|w| norm_edge(w[0], w[1]))
        .collect();
    g.triangles().iter().any(|t| {
        if t.iter().any(|v| s.contains(v)) {
            return false;
        }
        [
            norm_edge(t[0], t[1]),
            norm_edge(t[0], t[2]),
            norm_edge(t[1], t[2]),
        ]
        .iter()
        .any(|e| edges.contains(e))
    })
}

fn edge_in_short_cycle(g: &PlaneGraph, s: &BTreeSet<usize>, u: usize, v: usize) -> bool {
    // an 8-or-shorter cycle through uv is a u-v path of at most 7 edges
    // avoiding the edge itself
    let mut found = false;
    for path in bounded_paths(g, s, u, v, 7) {
        if path.len() >= 3 {
            found = true;
            break;
        }
    }
    found
}

struct IdentifyOutcome {
    a_ok: bool,
    a_witnesses: Vec<String>,
    created: Vec<CreatedCycle>,
}

fn check_identify(g: &PlaneGraph, s: &BTreeSet<usize>, t1: usize, t2: usize) -> IdentifyOutcome {
    let boundary = g.external_vertices();
    let mut a_witnesses = Vec::new();
    if boundary.contains(&t1) && boundary.contains(&t2) {
        a_witnesses.push(format!(
            "identifies boundary vertices v{} and v{}",
            t1 + 1,
            t2 + 1
        ));
    }
    // identification can also create a new boundary-boundary edge
    for (anchor, merged) in [(t1, t2), (t2, t1)] {
        if !boundary.contains(&anchor) {
            continue;
        }
        for d in surviving_neighbors(g, merged, s) {
            if d != anchor && boundary.contains(&d) && !g.has_edge(anchor, d) {
                a_witnesses.push(format!(
                    "creates boundary edge v{}-v{}",
                    anchor + 1,
                    d + 1
                ));
            }
        }
    }

    let mut created = Vec::new();
    for path in bounded_paths(g, s, t1, t2, 8) {
        let length = path.len() - 1;
        // a closed path that lifts to a cycle of the original graph is not
        // newly created
        if length >= 3 {
            let first_inner = path[1];
            let last_inner = path[path.len() - 2];
            let lifts = g.has_edge(last_inner, t1) || g.has_edge(first_inner, t2);
            if lifts {
                continue;
            }
        }
        if length <= 6 {
            created.push(CreatedCycle {
                length,
                path,
                triangular: false,
            });
        } else {
            let triangular = surviving_triangle_on_path(g, s, &path);
            if triangular {
                created.push(CreatedCycle {
                    length,
                    path,
                    triangular,
                });
            }
        }
    }
    IdentifyOutcome {
        a_ok: a_witnesses.is_empty(),
        a_witnesses,
        created,
    }
}

/// Check conditions (a) and (b) of the graph operation combinatorially.
pub fn reduction_check(
    g: &PlaneGraph,
    spec: &ReductionSpec,
) -> Result<ConditionReport, ReductionError> {
    if spec.delete.is_empty() {
        return Err(ReductionError::EmptyDeleteSet);
    }
    for &v in &spec.delete {
        if v >= g.n() {
            return Err(ReductionError::OutOfRange(v));
        }
        if !g.is_internal(v) {
            return Err(ReductionError::DeleteNotInternal(v));
        }
    }
    let endpoints: Vec<usize> = match spec.op {
        ReductionOp::Identify(a, b) | ReductionOp::AddEdge(a, b) => vec![a, b],
        ReductionOp::IdentifyEdges((a, b), (c, d)) => vec![a, b, c, d],
    };
    for &v in &endpoints {
        if v >= g.n() {
            return Err(ReductionError::OutOfRange(v));
        }
        if spec.delete.contains(&v) {
            return Err(ReductionError::EndpointDeleted(v));
        }
    }
    let s = &spec.delete;
    let boundary = g.external_vertices();

    let report = match spec.op {
        ReductionOp::Identify(t1, t2) => {
            if t1 == t2 {
                return Err(ReductionError::EndpointsEqual);
            }
            if g.has_edge(t1, t2) {
                return Err(ReductionError::IdentifyAdjacent);
            }
            let outcome = check_identify(g, s, t1, t2);
            let b_ok = outcome.created.is_empty();
            ConditionReport {
                condition_a: outcome.a_ok,
                condition_a_witnesses: outcome.a_witnesses,
                condition_b: b_ok,
                condition_b_witnesses: outcome.created,
                edge_side_condition: None,
                pass: false,
            }
        }
        ReductionOp::AddEdge(u, v) => {
            if u == v {
                return Err(ReductionError::EndpointsEqual);
            }
            if g.has_edge(u, v) {
                return Err(ReductionError::AlreadyAdjacent);
            }
            let mut a_witnesses = Vec::new();
            if boundary.contains(&u) && boundary.contains(&v) {
                a_witnesses.push(format!(
                    "adds an edge between boundary vertices v{} and v{}",
                    u + 1,
                    v + 1
                ));
            }
            let mut created = Vec::new();
            for path in bounded_paths(g, s, u, v, 7) {
                let length = path.len(); // path edges + the new edge
                if length <= 6 {
                    created.push(CreatedCycle {
                        length,
                        path,
                        triangular: false,
                    });
                } else {
                    let triangular = surviving_triangle_on_path(g, s, &path);
                    if triangular {
                        created.push(CreatedCycle {
                            length,
                            path,
                            triangular,
                        });
                    }
                }
            }
            ConditionReport {
                condition_a: a_witnesses.is_empty(),
                condition_a_witnesses: a_witnesses,
                condition_b: created.is_empty(),
                condition_b_witnesses: created,
                edge_side_condition: None,
                pass: false,
            }
        }
        ReductionOp::IdentifyEdges((u1, u2), (v1, v2)) => {
            if !g.has_edge(u1, u2) {
                return Err(ReductionError::NotAnEdge(u1, u2));
            }
            if !g.has_edge(v1, v2) {
                return Err(ReductionError::NotAnEdge(v1, v2));
            }
            let o1 = check_identify(g, s, u1, v1);
            let o2 = check_identify(g, s, u2, v2);
            let side = !edge_in_short_cycle(g, s, u1, u2) || !edge_in_short_cycle(g, s, v1, v2);
            let mut a_witnesses = o1.a_witnesses;
            a_witnesses.extend(o2.a_witnesses);
            let mut created = o1.created;
            created.extend(o2.created);
            ConditionReport {
                condition_a: a_witnesses.is_empty(),
                condition_a_witnesses: a_witnesses,
                condition_b: created.is_empty(),
                condition_b_witnesses: created,
                edge_side_condition: Some(side),
                pass: false,
            }
        }
    };

    let mut report = report;
    report.pass =
        report.condition_a && report.condition_b && report.edge_side_condition.unwrap_or(true);
    Ok(report)
}

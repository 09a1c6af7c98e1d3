//! Exact 3-coloring: solving, counting, precoloring extension, and the
//! boundary extension report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec;
use crate::plane_graph::PlaneGraph;
use crate::structures::{classify_cycle, StructureError};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("precoloring assigns color {color} (colors are 0..=2)")]
    BadColor { color: u8 },
    #[error("precoloring is not proper: edge {u}-{v} is monochromatic")]
    ImproperPrecoloring { u: usize, v: usize },
    #[error("precoloring mentions vertex {0} which is not in the graph")]
    UnknownVertex(usize),
    #[error("precoloring assigns vertex {0} outside the stated boundary")]
    OffBoundary(usize),
    #[error("naive counting is limited to 20 vertices, got {0}")]
    TooLargeForNaive(usize),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// A total or partial assignment of colors 0, 1, 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: BTreeMap<usize, u8>,
    pub partial: bool,
}

impl Coloring {
    pub fn total(colors: &[u8]) -> Self {
        Coloring {
            assignment: colors.iter().copied().enumerate().collect(),
            partial: false,
        }
    }

    pub fn partial_from(pairs: &[(usize, u8)]) -> Self {
        Coloring {
            assignment: pairs.iter().copied().collect(),
            partial: true,
        }
    }
}

/// Check properness edge by edge over the assigned domain.
pub fn verify_coloring(g: &PlaneGraph, coloring: &Coloring) -> bool {
    g.edges().iter().all(|&(u, v)| {
        match (coloring.assignment.get(&u), coloring.assignment.get(&v)) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        }
    })
}

fn check_precoloring(g: &PlaneGraph, pre: &BTreeMap<usize, u8>) -> Result<(), ColoringError> {
    for (&v, &c) in pre {
        if v >= g.n() {
            return Err(ColoringError::UnknownVertex(v));
        }
        if c > 2 {
            return Err(ColoringError::BadColor { color: c });
        }
    }
    for &(u, v) in g.edges() {
        if let (Some(a), Some(b)) = (pre.get(&u), pre.get(&v)) {
            if a == b {
                return Err(ColoringError::ImproperPrecoloring { u, v });
            }
        }
    }
    Ok(())
}

/// Deterministic vertex order: decreasing degree, then id.
fn search_order(g: &PlaneGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    order
}

/// Backtracking from a partial state with forced-move propagation: a vertex
/// seeing two distinct neighbor colors has only one candidate left.
fn solve_from(g: &PlaneGraph, colors: &mut Vec<Option<u8>>, order: &[usize]) -> bool {
    // propagate forced vertices to a fixed point
    let mut trail: Vec<usize> = Vec::new();
    loop {
        let mut changed = false;
        for v in 0..g.n() {
            if colors[v].is_some() {
                continue;
            }
            let mut seen = [false; 3];
            for &w in g.neighbors(v) {
                if let Some(c) = colors[w] {
                    seen[c as usize] = true;
                }
            }
            match seen.iter().filter(|&&s| s).count() {
                3 => {
                    for &t in &trail {
                        colors[t] = None;
                    }
                    return false;
                }
                2 => {
                    let c = (0..3).find(|&c| !seen[c as usize]).unwrap() as u8;
                    colors[v] = Some(c);
                    trail.push(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }

    let next = order.iter().copied().find(|&v| colors[v].is_none());
    let Some(v) = next else {
        return true; // total and proper by construction
    };
    for c in 0..3u8 {
        if g.neighbors(v)
            .iter()
            .any(|&w| colors[w] == Some(c))
        {
            continue;
        }
        colors[v] = Some(c);
        if solve_from(g, colors, order) {
            return true;
        }
        colors[v] = None;
    }
    for &t in &trail {
        colors[t] = None;
    }
    false
}

/// Find a proper 3-coloring extending `pre`, or report that none exists.
pub fn solve_3coloring(
    g: &PlaneGraph,
    pre: Option<&Coloring>,
) -> Result<Option<Coloring>, ColoringError> {
    let empty = BTreeMap::new();
    let pre_map = pre.map(|c| &c.assignment).unwrap_or(&empty);
    check_precoloring(g, pre_map)?;

    let mut colors: Vec<Option<u8>> = vec![None; g.n()];
    for (&v, &c) in pre_map {
        colors[v] = Some(c);
    }
    let order = search_order(g);
    if solve_from(g, &mut colors, &order) {
        let total: Vec<u8> = colors.into_iter().map(|c| c.unwrap()).collect();
        let coloring = Coloring::total(&total);
        debug_assert!(verify_coloring(g, &coloring));
        Ok(Some(coloring))
    } else {
        Ok(None)
    }
}

/// Extend a proper coloring of `boundary` to all of `g`, or report none.
pub fn extend_precoloring(
    g: &PlaneGraph,
    boundary: &[usize],
    phi: &Coloring,
) -> Result<Option<Coloring>, ColoringError> {
    for &v in phi.assignment.keys() {
        if !boundary.contains(&v) {
            return Err(ColoringError::OffBoundary(v));
        }
    }
    solve_3coloring(g, Some(phi))
}

fn count_from(g: &PlaneGraph, colors: &mut Vec<Option<u8>>, order: &[usize], idx: usize) -> u64 {
    if idx == order.len() {
        return 1;
    }
    let v = order[idx];
    let mut total = 0;
    for c in 0..3u8 {
        if g.neighbors(v).iter().any(|&w| colors[w] == Some(c)) {
            continue;
        }
        colors[v] = Some(c);
        total += count_from(g, colors, order, idx + 1);
        colors[v] = None;
    }
    total
}

/// Exact number of proper total 3-colorings, by backtracking.
pub fn count_3colorings(g: &PlaneGraph) -> u64 {
    let order = search_order(g);
    let mut colors = vec![None; g.n()];
    count_from(g, &mut colors, &order, 0)
}

/// Exact count by full enumeration of all 3^n assignments. Guarded oracle
/// path for cross-checking the backtracking counter.
pub fn count_3colorings_naive(g: &PlaneGraph) -> Result<u64, ColoringError> {
    let n = g.n();
    if n > 20 {
        return Err(ColoringError::TooLargeForNaive(n));
    }
    let mut count = 0u64;
    let mut assignment = vec![0u8; n];
    loop {
        if g.edges()
            .iter()
            .all(|&(u, v)| assignment[u] != assignment[v])
        {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                return Ok(count);
            }
            assignment[i] += 1;
            if assignment[i] < 3 {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// One boundary coloring that does not extend, for the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonExtendableWitness {
    pub boundary_coloring: BTreeMap<usize, u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    /// is the outer boundary a good cycle
    pub boundary_is_good: bool,
    /// proper 3-colorings of the subgraph induced by the boundary vertices
    pub total_boundary_colorings: u64,
    pub extendable: u64,
    /// capped at 10 entries
    pub non_extendable_witnesses: Vec<NonExtendableWitness>,
}

impl ExtensionReport {
    pub fn non_extendable(&self) -> u64 {
        self.total_boundary_colorings - self.extendable
    }
}

/// Enumerate all proper 3-colorings of the subgraph induced by the
/// boundary vertices (chords included).
fn boundary_colorings(g: &PlaneGraph, boundary: &[usize]) -> Vec<Vec<u8>> {
    let edges: Vec<(usize, usize)> = boundary
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| {
            boundary
                .iter()
                .enumerate()
                .skip(i + 1)
                .filter(move |&(_, &v)| g.has_edge(u, v))
                .map(move |(j, _)| (i, j))
        })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<u8> = Vec::new();
    fn rec(k: usize, edges: &[(usize, usize)], stack: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if stack.len() == k {
            out.push(stack.clone());
            return;
        }
        'color: for c in 0..3u8 {
            let i = stack.len();
            for &(a, b) in edges {
                if b == i && stack[a] == c {
                    continue 'color;
                }
            }
            stack.push(c);
            rec(k, edges, stack, out);
            stack.pop();
        }
    }
    rec(boundary.len(), &edges, &mut stack, &mut out);
    out
}

fn extension_setup(g: &PlaneGraph) -> Result<(Vec<usize>, bool, Vec<Vec<u8>>), ColoringError> {
    let outer = g.outer_face();
    if !outer.is_simple_cycle() {
        return Err(ColoringError::Structure(StructureError::NonSimpleOuter));
    }
    let boundary: Vec<usize> = outer.walk.clone();
    let boundary_is_good = classify_cycle(g, &boundary)?.flags.good;
    let colorings = boundary_colorings(g, &boundary);
    Ok((boundary, boundary_is_good, colorings))
}

fn extend_one(g: &PlaneGraph, boundary: &[usize], phi: &[u8]) -> Option<BTreeMap<usize, u8>> {
    let assignment: BTreeMap<usize, u8> = boundary
        .iter()
        .copied()
        .zip(phi.iter().copied())
        .collect();
    let coloring = Coloring {
        assignment: assignment.clone(),
        partial: true,
    };
    match solve_3coloring(g, Some(&coloring)) {
        Ok(Some(_)) => None,
        // the enumerated colorings are proper, so an error cannot occur
        _ => Some(assignment),
    }
}

fn extension_report(
    boundary_is_good: bool,
    total: u64,
    results: Vec<Option<BTreeMap<usize, u8>>>,
) -> ExtensionReport {
    let mut witnesses = Vec::new();
    let mut extendable = 0u64;
    for r in results {
        match r {
            None => extendable += 1,
            Some(w) => {
                if witnesses.len() < 10 {
                    witnesses.push(NonExtendableWitness {
                        boundary_coloring: w,
                    });
                }
            }
        }
    }
    ExtensionReport {
        boundary_is_good,
        total_boundary_colorings: total,
        extendable,
        non_extendable_witnesses: witnesses,
    }
}

/// Check the extension property of the outer boundary: every proper
/// 3-coloring of the induced boundary subgraph should extend to the whole
/// graph when the boundary is a good cycle. Fans the per-coloring solves
/// out over the worker pool when the `parallel` feature is on.
pub fn check_extension_property(g: &PlaneGraph) -> Result<ExtensionReport, ColoringError> {
    let (boundary, good, colorings) = extension_setup(g)?;
    let total = colorings.len() as u64;
    let results = exec::map_collect(colorings, |phi| extend_one(g, &boundary, &phi));
    Ok(extension_report(good, total, results))
}

/// Sequential variant of [`check_extension_property`].
pub fn check_extension_property_seq(g: &PlaneGraph) -> Result<ExtensionReport, ColoringError> {
    let (boundary, good, colorings) = extension_setup(g)?;
    let total = colorings.len() as u64;
    let results = exec::map_collect_seq(colorings, |phi| extend_one(g, &boundary, &phi));
    Ok(extension_report(good, total, results))
}

/// Parallel variant of [`check_extension_property`].
#[cfg(feature = "parallel")]
pub fn check_extension_property_par(g: &PlaneGraph) -> Result<ExtensionReport, ColoringError> {
    let (boundary, good, colorings) = extension_setup(g)?;
    let total = colorings.len() as u64;
    let results = exec::map_collect_par(colorings, |phi| extend_one(g, &boundary, &phi));
    Ok(extension_report(good, total, results))
}

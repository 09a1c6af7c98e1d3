//! Oracle check for the identify operation: literally perform the surgery
//! on an abstract adjacency model, re-enumerate short cycles by brute
//! force, and compare the created set with the combinatorial checker.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use discharge_lab::configurations::{reduction_check, ReductionOp, ReductionSpec};
use discharge_lab::plane_graph::{canonical_cycle, fixtures, PlaneGraph};

use common::permutations;

type Adjacency = BTreeMap<usize, BTreeSet<usize>>;

fn abstract_minus(g: &PlaneGraph, s: &BTreeSet<usize>) -> Adjacency {
    let mut adj: Adjacency = BTreeMap::new();
    for v in 0..g.n() {
        if s.contains(&v) {
            continue;
        }
        adj.insert(
            v,
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|w| !s.contains(w))
                .collect(),
        );
    }
    adj
}

/// Merge t2 into t1.
fn merge(adj: &Adjacency, t1: usize, t2: usize) -> Adjacency {
    let mut out: Adjacency = BTreeMap::new();
    for (&v, nbrs) in adj {
        if v == t2 {
            continue;
        }
        let mapped: BTreeSet<usize> = nbrs
            .iter()
            .map(|&w| if w == t2 { t1 } else { w })
            .filter(|&w| w != v)
            .collect();
        out.insert(v, mapped);
    }
    let merged: BTreeSet<usize> = adj[&t1]
        .union(&adj[&t2])
        .copied()
        .map(|w| if w == t2 { t1 } else { w })
        .filter(|&w| w != t1)
        .collect();
    out.insert(t1, merged);
    out
}

/// All simple cycles of length 3..=max in an abstract graph, canonical.
fn abstract_cycles(adj: &Adjacency, max: usize) -> BTreeSet<Vec<usize>> {
    let vertices: Vec<usize> = adj.keys().copied().collect();
    let mut out = BTreeSet::new();
    let n = vertices.len();
    for mask in 1u64..(1 << n) {
        let subset: Vec<usize> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| vertices[i])
            .collect();
        if subset.len() < 3 || subset.len() > max {
            continue;
        }
        for tail in permutations(&subset[1..]) {
            let mut order = vec![subset[0]];
            order.extend(tail);
            let ok = (0..order.len()).all(|i| {
                let (a, b) = (order[i], order[(i + 1) % order.len()]);
                adj.get(&a).is_some_and(|s| s.contains(&b))
            });
            if ok {
                out.insert(canonical_cycle(&order));
            }
        }
    }
    out
}

/// Created short cycles per the brute-force surgery: cycles of the merged
/// graph that do not lift back to the un-merged graph.
fn oracle_created(g: &PlaneGraph, s: &BTreeSet<usize>, t1: usize, t2: usize) -> BTreeSet<Vec<usize>> {
    let before = abstract_minus(g, s);
    let after = merge(&before, t1, t2);
    let mut created = BTreeSet::new();
    for cycle in abstract_cycles(&after, 6) {
        if !cycle.contains(&t1) {
            continue; // untouched cycles always existed
        }
        let lift_ok = |replacement: usize| {
            let lifted: Vec<usize> = cycle
                .iter()
                .map(|&v| if v == t1 { replacement } else { v })
                .collect();
            (0..lifted.len()).all(|i| {
                let (a, b) = (lifted[i], lifted[(i + 1) % lifted.len()]);
                before.get(&a).is_some_and(|s| s.contains(&b))
            })
        };
        if !lift_ok(t1) && !lift_ok(t2) {
            created.insert(cycle);
        }
    }
    created
}

fn checker_created(g: &PlaneGraph, s: &BTreeSet<usize>, t1: usize, t2: usize) -> BTreeSet<Vec<usize>> {
    let spec = ReductionSpec {
        delete: s.clone(),
        op: ReductionOp::Identify(t1, t2),
    };
    let report = reduction_check(g, &spec).expect("well-formed spec");
    report
        .condition_b_witnesses
        .iter()
        .filter(|c| (3..=6).contains(&c.length))
        .map(|c| {
            // the path closes into a cycle once its endpoints merge
            let cycle: Vec<usize> = c.path[..c.path.len() - 1].to_vec();
            canonical_cycle(&cycle)
        })
        .collect()
}

#[test]
fn identify_matches_the_surgery_oracle_on_all_fixtures() {
    let mut compared = 0usize;
    for g in fixtures::all() {
        let internal: Vec<usize> = g.internal_vertices().into_iter().collect();
        if internal.is_empty() {
            continue;
        }
        let mut delete_sets: Vec<BTreeSet<usize>> = internal
            .iter()
            .map(|&v| BTreeSet::from([v]))
            .collect();
        if internal.len() >= 2 {
            delete_sets.push(internal.iter().copied().collect());
        }
        for s in delete_sets {
            let survivors: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
            for (i, &t1) in survivors.iter().enumerate() {
                for &t2 in &survivors[i + 1..] {
                    if g.has_edge(t1, t2) {
                        continue;
                    }
                    assert_eq!(
                        checker_created(&g, &s, t1, t2),
                        oracle_created(&g, &s, t1, t2),
                        "n={} S={:?} identify({},{})",
                        g.n(),
                        s,
                        t1,
                        t2
                    );
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 200, "only {compared} spec comparisons ran");
    println!("surgery oracle agreed on {compared} identify specs");
}

#[test]
fn add_edge_matches_a_direct_cycle_scan() {
    // adding an edge creates exactly the cycles through it: path + edge
    for g in [fixtures::f8(), fixtures::f10(), fixtures::f3()] {
        let internal: Vec<usize> = g.internal_vertices().into_iter().collect();
        let s: BTreeSet<usize> = BTreeSet::from([internal[0]]);
        let survivors: Vec<usize> = (0..g.n()).filter(|v| !s.contains(v)).collect();
        for (i, &u) in survivors.iter().enumerate() {
            for &v in &survivors[i + 1..] {
                if g.has_edge(u, v) {
                    continue;
                }
                let spec = ReductionSpec {
                    delete: s.clone(),
                    op: ReductionOp::AddEdge(u, v),
                };
                let report = reduction_check(&g, &spec).unwrap();
                let from_checker: BTreeSet<Vec<usize>> = report
                    .condition_b_witnesses
                    .iter()
                    .filter(|c| c.length <= 6)
                    .map(|c| canonical_cycle(&c.path))
                    .collect();

                // oracle: add the edge to the abstract model and collect the
                // new short cycles
                let before = abstract_minus(&g, &s);
                let mut after = before.clone();
                after.get_mut(&u).unwrap().insert(v);
                after.get_mut(&v).unwrap().insert(u);
                let created: BTreeSet<Vec<usize>> = abstract_cycles(&after, 6)
                    .difference(&abstract_cycles(&before, 6))
                    .cloned()
                    .collect();
                assert_eq!(from_checker, created, "add_edge({u},{v})");
            }
        }
    }
}

//! Membership tests for the two graph classes under study, with witnesses.

use serde::{Deserialize, Serialize};

use crate::plane_graph::PlaneGraph;
use crate::structures::{enumerate_cycles, CycleRecord, StructureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckedClass {
    /// connected plane graphs with no 4-cycle, no 6-cycle, and no special
    /// 9-cycle
    GClass,
    /// plane graphs with no cycle of length 4, 6, or 9
    Theorem3Class,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationReason {
    Cycle4,
    Cycle6,
    Cycle9,
    Special9Cycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassWitness {
    pub reason: ViolationReason,
    pub cycle: CycleRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub checked_class: CheckedClass,
    pub member: bool,
    pub witnesses: Vec<ClassWitness>,
}

fn collect(
    records: &[CycleRecord],
    reason: ViolationReason,
    pick: impl Fn(&CycleRecord) -> bool,
    exhaustive: bool,
    out: &mut Vec<ClassWitness>,
) {
    let mut hits = records.iter().filter(|r| pick(r));
    if exhaustive {
        out.extend(hits.map(|r| ClassWitness {
            reason,
            cycle: r.clone(),
        }));
    } else if let Some(r) = hits.next() {
        out.push(ClassWitness {
            reason,
            cycle: r.clone(),
        });
    }
}

fn check(
    g: &PlaneGraph,
    class: CheckedClass,
    exhaustive: bool,
) -> Result<ClassReport, StructureError> {
    let records = enumerate_cycles(g, 9)?;
    let mut witnesses = Vec::new();
    collect(
        &records,
        ViolationReason::Cycle4,
        |r| r.length == 4,
        exhaustive,
        &mut witnesses,
    );
    collect(
        &records,
        ViolationReason::Cycle6,
        |r| r.length == 6,
        exhaustive,
        &mut witnesses,
    );
    match class {
        CheckedClass::GClass => collect(
            &records,
            ViolationReason::Special9Cycle,
            |r| r.flags.special9,
            exhaustive,
            &mut witnesses,
        ),
        CheckedClass::Theorem3Class => collect(
            &records,
            ViolationReason::Cycle9,
            |r| r.length == 9,
            exhaustive,
            &mut witnesses,
        ),
    }
    witnesses.sort_by(|a, b| {
        (a.reason, &a.cycle.vertices).cmp(&(b.reason, &b.cycle.vertices))
    });
    Ok(ClassReport {
        checked_class: class,
        member: witnesses.is_empty(),
        witnesses,
    })
}

/// Is `g` in the class of connected plane graphs with neither 4- nor
/// 6-cycles nor a special 9-cycle? Reports the first offending cycle per
/// violated condition.
pub fn check_class_g(g: &PlaneGraph) -> Result<ClassReport, StructureError> {
    check(g, CheckedClass::GClass, false)
}

/// As [`check_class_g`] but listing every offending cycle.
pub fn check_class_g_exhaustive(g: &PlaneGraph) -> Result<ClassReport, StructureError> {
    check(g, CheckedClass::GClass, true)
}

/// Does `g` avoid all cycles of length 4, 6, and 9?
pub fn check_theorem3_class(g: &PlaneGraph) -> Result<ClassReport, StructureError> {
    check(g, CheckedClass::Theorem3Class, false)
}

/// As [`check_theorem3_class`] but listing every offending cycle.
pub fn check_theorem3_class_exhaustive(g: &PlaneGraph) -> Result<ClassReport, StructureError> {
    check(g, CheckedClass::Theorem3Class, true)
}

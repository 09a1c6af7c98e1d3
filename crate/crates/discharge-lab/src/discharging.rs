//! Exact-rational discharging: initial charges, rules R1–R6 evaluated in a
//! single simultaneous pass against the initial structure, and an
//! append-only transfer ledger.
//!
//! Initial charges are d(f0)+4 on the outer face, d(v)-4 on vertices, and
//! |f|-4 on the remaining faces, so the total is zero on every connected
//! plane graph. Rules only ever move charge, so the total stays zero; the
//! ledger records every move with its rule id and exact amount.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::plane_graph::PlaneGraph;
use crate::rat::Rat;
use crate::structures::{adjacent_3faces, is_light_7face};

#[derive(Debug, Error)]
pub enum DischargeError {
    #[error("face {0} has a non-simple boundary; discharging needs simple face boundaries")]
    NonSimpleFace(usize),
}

/// A chargeable element: a vertex or a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChargeElement {
    Vertex(usize),
    Face(usize),
}

impl ChargeElement {
    /// Key form used in reports, 1-based: "v3", "f1".
    pub fn key(&self) -> String {
        match self {
            ChargeElement::Vertex(v) => format!("v{}", v + 1),
            ChargeElement::Face(f) => format!("f{}", f + 1),
        }
    }
}

impl fmt::Display for ChargeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for ChargeElement {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_at(1.min(s.len()));
        let id: usize = rest.parse().map_err(|_| format!("bad element '{s}'"))?;
        if id == 0 {
            return Err(format!("bad element '{s}'"));
        }
        match kind {
            "v" => Ok(ChargeElement::Vertex(id - 1)),
            "f" => Ok(ChargeElement::Face(id - 1)),
            _ => Err(format!("bad element '{s}'")),
        }
    }
}

impl Serialize for ChargeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.key())
    }
}

impl<'de> Deserialize<'de> for ChargeElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Rule identifiers, including sub-rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2_1,
    R2_2,
    R3_1,
    R3_2,
    R4_1,
    R4_2,
    R4_3,
    R5,
    R6_1,
    R6_2,
    R6_3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub rule: Rule,
    pub source: ChargeElement,
    pub sink: ChargeElement,
    pub amount: Rat,
    /// set for "through" transfers: the element the charge passes by
    pub via: Option<ChargeElement>,
}

/// A pattern close to a rule that transfers nothing; recorded instead of
/// guessing an amount.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleGap {
    pub rule: Rule,
    pub element: ChargeElement,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeLedger {
    pub initial: BTreeMap<ChargeElement, Rat>,
    pub transfers: Vec<Transfer>,
    pub diagnostics: Vec<RuleGap>,
    /// vertices on the outer boundary, for the positive-charge report
    pub boundary_vertices: BTreeSet<usize>,
}

impl ChargeLedger {
    pub fn final_charges(&self) -> BTreeMap<ChargeElement, Rat> {
        let mut out = self.initial.clone();
        for t in &self.transfers {
            if let Some(src) = out.get_mut(&t.source) {
                *src -= &t.amount;
            }
            if let Some(dst) = out.get_mut(&t.sink) {
                *dst += &t.amount;
            }
        }
        out
    }

    pub fn final_charge(&self, element: ChargeElement) -> Rat {
        let mut charge = self.initial.get(&element).cloned().unwrap_or_else(Rat::zero);
        for t in &self.transfers {
            if t.source == element {
                charge -= &t.amount;
            }
            if t.sink == element {
                charge += &t.amount;
            }
        }
        charge
    }

    pub fn initial_sum(&self) -> Rat {
        self.initial.values().cloned().sum()
    }

    pub fn final_sum(&self) -> Rat {
        self.final_charges().into_values().sum()
    }
}

/// The only amounts a rule may move.
pub fn allowed_amounts() -> [Rat; 10] {
    [
        Rat::new(1, 3),
        Rat::new(1, 4),
        Rat::new(2, 3),
        Rat::new(1, 2),
        Rat::new(3, 8),
        Rat::new(1, 6),
        Rat::new(1, 24),
        Rat::new(5, 24),
        Rat::new(4, 3),
        Rat::new(1, 12),
    ]
}

/// Assign the initial charges; no transfers yet.
pub fn initial_charges(g: &PlaneGraph) -> ChargeLedger {
    let mut initial = BTreeMap::new();
    for v in 0..g.n() {
        initial.insert(
            ChargeElement::Vertex(v),
            Rat::int(g.degree(v) as i64 - 4),
        );
    }
    for face in g.faces() {
        let charge = if face.id == g.outer_face_id() {
            Rat::int(face.size() as i64 + 4)
        } else {
            Rat::int(face.size() as i64 - 4)
        };
        initial.insert(ChargeElement::Face(face.id), charge);
    }
    ChargeLedger {
        initial,
        transfers: Vec::new(),
        diagnostics: Vec::new(),
        boundary_vertices: g.external_vertices(),
    }
}

/// Run rules R1–R6 once against the initial structure and log every
/// matching instance. Requires every face boundary to be a simple cycle.
pub fn apply_discharging(g: &PlaneGraph) -> Result<ChargeLedger, DischargeError> {
    if g.n() >= 3 {
        for face in g.faces() {
            if !face.is_simple_cycle() {
                return Err(DischargeError::NonSimpleFace(face.id));
            }
        }
    } else {
        // a one- or two-vertex graph has no simple face boundary at all
        return Err(DischargeError::NonSimpleFace(g.outer_face_id()));
    }

    let mut ledger = initial_charges(g);
    let f0 = g.outer_face_id();
    let vertex = ChargeElement::Vertex;
    let face = ChargeElement::Face;

    let push = |ledger: &mut ChargeLedger,
                    rule: Rule,
                    source: ChargeElement,
                    sink: ChargeElement,
                    num: i64,
                    den: i64,
                    via: Option<ChargeElement>| {
        ledger.transfers.push(Transfer {
            rule,
            source,
            sink,
            amount: Rat::new(num, den),
            via,
        });
    };

    // R1: every 3-face other than the outer face receives 1/3 from each
    // incident vertex.
    for f in g.faces() {
        if f.id == f0 || f.size() != 3 {
            continue;
        }
        for &v in &f.walk {
            push(&mut ledger, Rule::R1, vertex(v), face(f.id), 1, 3, None);
        }
    }

    // R2: internal 3-vertices draw from their incident faces.
    for v in 0..g.n() {
        if !g.is_internal(v) || g.degree(v) != 3 {
            continue;
        }
        let at: Vec<usize> = g.corner_faces(v);
        let distinct: BTreeSet<usize> = at.iter().copied().collect();
        if distinct.len() != 3 {
            ledger.diagnostics.push(RuleGap {
                rule: Rule::R2_2,
                element: vertex(v),
                detail: "incident faces of the 3-vertex are not distinct".into(),
            });
            continue;
        }
        for &fid in &distinct {
            let size = g.face(fid).size();
            let mut others: Vec<usize> = distinct
                .iter()
                .filter(|&&o| o != fid)
                .map(|&o| g.face(o).size())
                .collect();
            others.sort_unstable();
            let (a, b) = (others[0], others[1]);
            match size {
                3 => {} // handled by R1
                5 => push(&mut ledger, Rule::R2_1, face(fid), vertex(v), 1, 4, None),
                4 | 6 => ledger.diagnostics.push(RuleGap {
                    rule: Rule::R2_1,
                    element: face(fid),
                    detail: format!("no rule for a {size}-face at an internal 3-vertex"),
                }),
                _ => {
                    // size >= 7
                    if a == 3 {
                        push(&mut ledger, Rule::R2_2, face(fid), vertex(v), 2, 3, None);
                    } else if a == 5 && b == 5 {
                        push(&mut ledger, Rule::R2_2, face(fid), vertex(v), 1, 2, None);
                    } else if a == 5 && b >= 7 {
                        push(&mut ledger, Rule::R2_2, face(fid), vertex(v), 3, 8, None);
                    } else if a >= 7 {
                        push(&mut ledger, Rule::R2_2, face(fid), vertex(v), 1, 3, None);
                    } else {
                        ledger.diagnostics.push(RuleGap {
                            rule: Rule::R2_2,
                            element: vertex(v),
                            detail: format!("no table entry for companion sizes ({a}, {b})"),
                        });
                    }
                }
            }
        }
    }

    // R3: internal 4-vertices draw from their 7+-faces depending on the
    // incident 3-faces.
    for v in 0..g.n() {
        if !g.is_internal(v) || g.degree(v) != 4 {
            continue;
        }
        let distinct: BTreeSet<usize> = g.corner_faces(v).into_iter().collect();
        let three_faces: Vec<usize> = distinct
            .iter()
            .copied()
            .filter(|&fid| g.face(fid).size() == 3)
            .collect();
        for &fid in &distinct {
            if g.face(fid).size() < 7 {
                continue;
            }
            match three_faces.len() {
                2 => push(&mut ledger, Rule::R3_1, face(fid), vertex(v), 1, 3, None),
                1 => {
                    let t = three_faces[0];
                    let shares_edge = g
                        .face(t)
                        .edge_set()
                        .intersection(&g.face(fid).edge_set())
                        .next()
                        .is_some();
                    if shares_edge {
                        push(&mut ledger, Rule::R3_2, face(fid), vertex(v), 1, 6, None);
                    }
                }
                _ => {}
            }
        }
    }

    // R4: light 7-faces draw small amounts along their triangle.
    for f in g.faces() {
        if !is_light_7face(g, f) {
            continue;
        }
        for (t, (e0, e1)) in adjacent_3faces(g, f) {
            let tri = &g.face(t).walk;
            let z = *tri
                .iter()
                .find(|&&w| w != e0 && w != e1)
                .expect("triangle has a third vertex");
            // order the shared edge so x is the smaller-degree end
            let (x, y) = if g.degree(e0) <= g.degree(e1) {
                (e0, e1)
            } else {
                (e1, e0)
            };
            if g.degree(x) == 3 && g.degree(y) >= 5 {
                push(&mut ledger, Rule::R4_1, vertex(y), face(f.id), 1, 24, None);
            }
            if g.is_external(z) {
                push(
                    &mut ledger,
                    Rule::R4_2,
                    vertex(z),
                    face(f.id),
                    5,
                    24,
                    Some(face(t)),
                );
            }
            if g.degree(x) == 3 && g.degree(y) == 4 && g.is_internal(z) && g.degree(z) >= 4 {
                let (ha, hb) = g.faces_on_edge(y, z);
                let h = if ha == t { hb } else { ha };
                push(
                    &mut ledger,
                    Rule::R4_3,
                    face(h),
                    face(f.id),
                    5,
                    24,
                    Some(vertex(y)),
                );
            }
        }
    }

    // R5: the outer face pays 4/3 to each incident vertex.
    for &v in &g.face(f0).walk.clone() {
        push(&mut ledger, Rule::R5, face(f0), vertex(v), 4, 3, None);
    }

    // R6: external vertices settle with their other 5+-faces.
    for v in 0..g.n() {
        if !g.is_external(v) {
            continue;
        }
        let distinct: BTreeSet<usize> = g.corner_faces(v).into_iter().collect();
        for &fid in &distinct {
            if fid == f0 || g.face(fid).size() < 5 {
                continue;
            }
            match g.degree(v) {
                2 => push(&mut ledger, Rule::R6_1, face(fid), vertex(v), 2, 3, None),
                3 => {
                    if g.is_triangular_vertex(v) {
                        push(&mut ledger, Rule::R6_2, face(fid), vertex(v), 1, 12, None);
                    } else {
                        push(&mut ledger, Rule::R6_2, vertex(v), face(fid), 1, 12, None);
                    }
                }
                _ => push(&mut ledger, Rule::R6_3, vertex(v), face(fid), 1, 3, None),
            }
        }
    }

    Ok(ledger)
}

/// Exact conservation: both the initial and the final total are zero.
pub fn verify_conservation(ledger: &ChargeLedger) -> bool {
    ledger.initial_sum().is_zero() && ledger.final_sum().is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeReport {
    /// elements ending with negative charge
    pub negatives: Vec<(ChargeElement, Rat)>,
    /// boundary vertices ending with strictly positive charge
    pub positive_on_boundary: Vec<(usize, Rat)>,
}

/// Elements with negative final charge plus the boundary vertices with
/// strictly positive final charge. A graph shaped like a minimal
/// counterexample would show no negatives and at least one boundary
/// positive; that pair of facts is the contradiction the charge argument
/// runs on.
pub fn negative_report(ledger: &ChargeLedger) -> NegativeReport {
    let finals = ledger.final_charges();
    let negatives: Vec<(ChargeElement, Rat)> = finals
        .iter()
        .filter(|(_, charge)| charge.is_negative())
        .map(|(el, charge)| (*el, charge.clone()))
        .collect();
    let positive_on_boundary: Vec<(usize, Rat)> = finals
        .iter()
        .filter_map(|(el, charge)| match el {
            ChargeElement::Vertex(v)
                if ledger.boundary_vertices.contains(v) && charge.is_positive() =>
            {
                Some((*v, charge.clone()))
            }
            _ => None,
        })
        .collect();
    NegativeReport {
        negatives,
        positive_on_boundary,
    }
}

//! Command-line surface: single-graph analysis commands and corpus batch
//! runs, with human-readable or JSON output.
//!
//! Exit codes: 0 for success/member/holds, 1 when a non-member, violation,
//! uncolorable graph, or non-extendable coloring is found, 2 on input or
//! validation errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::class_membership::{check_class_g, check_theorem3_class, ClassReport};
use crate::coloring::{check_extension_property, solve_3coloring, Coloring, ExtensionReport};
use crate::configurations::{audit_lemma_configurations, AuditFinding};
use crate::discharging::{
    apply_discharging, negative_report, verify_conservation, ChargeLedger, NegativeReport,
};
use crate::exec;
use crate::plane_graph::{
    parse_planar_code_records, parse_rotation_text, GraphError, PlaneGraph,
};
use crate::rat::Rat;
use crate::structures::{enumerate_cycles, find_bad_partitions, BadPartition, CycleRecord};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Analyze,
    Class,
    Discharge,
    Color,
    Extend,
    Audit,
    Batch,
}

impl CommandKind {
    fn name(self) -> &'static str {
        match self {
            CommandKind::Analyze => "analyze",
            CommandKind::Class => "class",
            CommandKind::Discharge => "discharge",
            CommandKind::Color => "color",
            CommandKind::Extend => "extend",
            CommandKind::Audit => "audit",
            CommandKind::Batch => "batch",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Rot,
    Pcode,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub format: Option<Format>,
    pub json: bool,
    pub max_cycle_len: usize,
    pub limit: Option<usize>,
    /// 1-based outer boundary walk override
    pub outer: Option<Vec<usize>>,
}

#[derive(Debug)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub output: String,
}

fn fail(msg: String) -> RunOutcome {
    RunOutcome {
        exit_code: 2,
        output: format!("error: {msg}\n"),
    }
}

#[derive(Serialize, Deserialize)]
struct JsonReport<T> {
    schema_version: u32,
    command: String,
    report: T,
}

fn emit<T: Serialize>(command: CommandKind, report: &T, text: String, json: bool, code: i32) -> RunOutcome {
    if json {
        let wrapped = JsonReport {
            schema_version: SCHEMA_VERSION,
            command: command.name().to_string(),
            report,
        };
        RunOutcome {
            exit_code: code,
            output: format!("{}\n", serde_json::to_string_pretty(&wrapped).unwrap()),
        }
    } else {
        RunOutcome {
            exit_code: code,
            output: text,
        }
    }
}

fn detect_format(path: &Path, bytes: &[u8]) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("rot") | Some("txt") => Format::Rot,
        Some("pcode") | Some("plc") | Some("pc") => Format::Pcode,
        _ => {
            if bytes.starts_with(crate::plane_graph::PLANAR_CODE_HEADER)
                || std::str::from_utf8(bytes).is_err()
            {
                Format::Pcode
            } else {
                Format::Rot
            }
        }
    }
}

fn load_single(config: &RunConfig) -> Result<PlaneGraph, String> {
    let bytes = fs::read(&config.input)
        .map_err(|e| format!("{}: {e}", config.input.display()))?;
    let format = config
        .format
        .unwrap_or_else(|| detect_format(&config.input, &bytes));
    let g = match format {
        Format::Rot => {
            let text = String::from_utf8(bytes).map_err(|_| "input is not UTF-8".to_string())?;
            parse_rotation_text(&text).map_err(|e| e.to_string())?
        }
        Format::Pcode => {
            let graphs =
                crate::plane_graph::parse_planar_code(&bytes).map_err(|e| e.to_string())?;
            graphs
                .into_iter()
                .next()
                .ok_or_else(|| "planar_code stream holds no graph".to_string())?
        }
    };
    match &config.outer {
        None => Ok(g),
        Some(walk_1based) => {
            let walk: Vec<usize> = walk_1based
                .iter()
                .map(|&v| {
                    if v == 0 || v > g.n() {
                        Err(format!("outer walk vertex {v} out of range"))
                    } else {
                        Ok(v - 1)
                    }
                })
                .collect::<Result<_, _>>()?;
            PlaneGraph::from_rotation(g.rotation_system().to_vec(), Some(&walk))
                .map_err(|e| e.to_string())
        }
    }
}

fn ids1(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct CycleEntry {
    pub record: CycleRecord,
    pub partitions: Vec<BadPartition>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalyzeReport {
    pub n: usize,
    pub edge_count: usize,
    pub validation: crate::plane_graph::ValidationReport,
    pub face_sizes: Vec<usize>,
    pub outer_face: usize,
    pub cycles: Vec<CycleEntry>,
}

pub fn analyze(g: &PlaneGraph, max_cycle_len: usize) -> Result<AnalyzeReport, String> {
    let records = enumerate_cycles(g, max_cycle_len).map_err(|e| e.to_string())?;
    let cycles = records
        .into_iter()
        .map(|record| {
            let partitions =
                find_bad_partitions(g, &record.vertices).map_err(|e| e.to_string())?;
            Ok(CycleEntry { record, partitions })
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(AnalyzeReport {
        n: g.n(),
        edge_count: g.edge_count(),
        validation: g.validate(),
        face_sizes: g.face_size_multiset(),
        outer_face: g.outer_face_id(),
        cycles,
    })
}

fn analyze_text(r: &AnalyzeReport, g: &PlaneGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph: {} vertices, {} edges", r.n, r.edge_count);
    let _ = writeln!(
        out,
        "faces ({}): sizes {:?}, outer face f{} [{}]",
        r.face_sizes.len(),
        r.face_sizes,
        r.outer_face + 1,
        ids1(&g.outer_face().walk)
    );
    let _ = writeln!(
        out,
        "validation: two_connected={} all_faces_simple={}",
        r.validation.two_connected, r.validation.all_faces_simple
    );
    let _ = writeln!(out, "cycles ({}):", r.cycles.len());
    for entry in &r.cycles {
        let f = &entry.record.flags;
        let mut tags = Vec::new();
        for (on, name) in [
            (f.facial, "facial"),
            (f.separating, "separating"),
            (f.good, "good"),
            (f.bad, "bad"),
            (f.special9, "special9"),
            (f.triangular, "triangular"),
            (f.ext_triangular, "ext-triangular"),
        ] {
            if on {
                tags.push(name);
            }
        }
        let _ = writeln!(
            out,
            "  {}-cycle [{}] {}",
            entry.record.length,
            ids1(&entry.record.vertices),
            tags.join(",")
        );
        for p in &entry.partitions {
            let _ = writeln!(
                out,
                "    {:?} signature {:?} anchors [{}]",
                p.kind,
                p.signature,
                ids1(&p.anchors)
            );
        }
    }
    out
}

// ---------------------------------------------------------------------------
// class / discharge / color / extend / audit reports

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassCommandReport {
    pub class_g: ClassReport,
    pub theorem3: ClassReport,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct DischargeCommandReport {
    pub ledger: ChargeLedger,
    pub final_charges: BTreeMap<crate::discharging::ChargeElement, Rat>,
    pub conservation: bool,
    pub initial_sum: Rat,
    pub final_sum: Rat,
    pub negatives: NegativeReport,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ColorCommandReport {
    pub colorable: bool,
    pub coloring: Option<Coloring>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct AuditCommandReport {
    pub findings: Vec<AuditFinding>,
    pub catalog_included: bool,
}

// ---------------------------------------------------------------------------
// batch

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExtensionOutcome {
    pub boundary_is_good: bool,
    pub total_boundary_colorings: u64,
    pub non_extendable: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct GraphOutcome {
    pub index: usize,
    pub name: String,
    pub error: Option<String>,
    pub n: usize,
    pub class_g_member: bool,
    pub theorem3_member: bool,
    pub colorable: bool,
    pub audit_findings: usize,
    pub extension: Option<ExtensionOutcome>,
    pub contradiction: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
pub struct BatchSummary {
    pub total: usize,
    pub parse_errors: usize,
    pub class_g_members: usize,
    pub theorem3_members: usize,
    pub colorable: usize,
    pub uncolorable: usize,
    pub audit_clean: usize,
    pub extension_checked: usize,
    pub extension_failures: usize,
    pub contradictions: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct BatchReport {
    pub outcomes: Vec<GraphOutcome>,
    pub summary: BatchSummary,
}

/// Analyze one graph for the batch summary.
pub fn batch_graph_outcome(index: usize, name: String, g: &PlaneGraph) -> GraphOutcome {
    let class_g = check_class_g(g).map(|r| r.member).unwrap_or(false);
    let theorem3 = check_theorem3_class(g).map(|r| r.member).unwrap_or(false);
    let colorable = solve_3coloring(g, None)
        .map(|c| c.is_some())
        .unwrap_or(false);
    let audit_findings = audit_lemma_configurations(g).len();
    let extension = if g.outer_face().is_simple_cycle() {
        check_extension_property(g).ok().map(|r| ExtensionOutcome {
            boundary_is_good: r.boundary_is_good,
            total_boundary_colorings: r.total_boundary_colorings,
            non_extendable: r.non_extendable(),
        })
    } else {
        None
    };

    let mut contradiction = None;
    if theorem3 && !colorable {
        contradiction = Some("theorem3-class member is not 3-colorable".to_string());
    }
    if let Some(ext) = &extension {
        if class_g && ext.boundary_is_good && ext.non_extendable > 0 {
            contradiction = Some(
                "class member with good boundary has a non-extendable coloring".to_string(),
            );
        }
    }

    GraphOutcome {
        index,
        name,
        error: None,
        n: g.n(),
        class_g_member: class_g,
        theorem3_member: theorem3,
        colorable,
        audit_findings,
        extension,
        contradiction,
    }
}

fn summarize(outcomes: &[GraphOutcome]) -> BatchSummary {
    let mut s = BatchSummary {
        total: outcomes.len(),
        ..Default::default()
    };
    for o in outcomes {
        if o.error.is_some() {
            s.parse_errors += 1;
            continue;
        }
        if o.class_g_member {
            s.class_g_members += 1;
        }
        if o.theorem3_member {
            s.theorem3_members += 1;
        }
        if o.colorable {
            s.colorable += 1;
        } else {
            s.uncolorable += 1;
        }
        if o.audit_findings == 0 {
            s.audit_clean += 1;
        }
        if let Some(ext) = &o.extension {
            s.extension_checked += 1;
            if ext.non_extendable > 0 {
                s.extension_failures += 1;
            }
        }
        if o.contradiction.is_some() {
            s.contradictions += 1;
        }
    }
    s
}

enum BatchInput {
    Graphs(Vec<(String, Result<PlaneGraph, String>)>),
    Corrupt { last_good: Option<usize>, msg: String },
}

fn load_batch(config: &RunConfig) -> Result<BatchInput, String> {
    let path = &config.input;
    let mut items: Vec<(String, Result<PlaneGraph, String>)> = Vec::new();
    if path.is_dir() {
        let mut files: Vec<PathBuf> = fs::read_dir(path)
            .map_err(|e| format!("{}: {e}", path.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().and_then(|e| e.to_str()) == Some("rot"))
            .collect();
        files.sort();
        for file in files {
            let name = file
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let parsed = fs::read_to_string(&file)
                .map_err(|e| e.to_string())
                .and_then(|text| parse_rotation_text(&text).map_err(|e| e.to_string()));
            items.push((name, parsed));
        }
    } else {
        let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let (records, truncation) = parse_planar_code_records(&bytes);
        let parsed_count = records.len();
        for (i, record) in records.into_iter().enumerate() {
            items.push((format!("graph[{i}]"), record.map_err(|e| e.to_string())));
        }
        if let Some(err) = truncation {
            let last_good = parsed_count.checked_sub(1);
            return Ok(BatchInput::Corrupt {
                last_good,
                msg: match err {
                    GraphError::Truncated { index } => {
                        format!("stream truncated in record {index}")
                    }
                    other => other.to_string(),
                },
            });
        }
    }
    if let Some(limit) = config.limit {
        items.truncate(limit);
    }
    Ok(BatchInput::Graphs(items))
}

pub fn batch_process(config: &RunConfig) -> RunOutcome {
    let input = match load_batch(config) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    let items = match input {
        BatchInput::Corrupt { last_good, msg } => {
            let index_note = match last_good {
                Some(i) => format!("last good graph index: {i}"),
                None => "no graph parsed".to_string(),
            };
            return fail(format!("{msg}; {index_note}"));
        }
        BatchInput::Graphs(items) => items,
    };

    let indexed: Vec<(usize, String, Result<PlaneGraph, String>)> = items
        .into_iter()
        .enumerate()
        .map(|(i, (name, g))| (i, name, g))
        .collect();
    let outcomes: Vec<GraphOutcome> = exec::map_collect(indexed, |(index, name, parsed)| {
        match parsed {
            Ok(g) => batch_graph_outcome(index, name, &g),
            Err(e) => GraphOutcome {
                index,
                name,
                error: Some(e),
                n: 0,
                class_g_member: false,
                theorem3_member: false,
                colorable: false,
                audit_findings: 0,
                extension: None,
                contradiction: None,
            },
        }
    });
    let summary = summarize(&outcomes);
    let code = if summary.contradictions > 0 { 1 } else { 0 };

    let mut text = String::new();
    for o in &outcomes {
        match &o.error {
            Some(e) => {
                let _ = writeln!(text, "{}: parse error: {e}", o.name);
            }
            None => {
                let _ = writeln!(
                    text,
                    "{}: n={} class_g={} theorem3={} colorable={} audit_findings={}{}{}",
                    o.name,
                    o.n,
                    o.class_g_member,
                    o.theorem3_member,
                    o.colorable,
                    o.audit_findings,
                    match &o.extension {
                        Some(e) => format!(
                            " extension: good_boundary={} non_extendable={}",
                            e.boundary_is_good, e.non_extendable
                        ),
                        None => String::new(),
                    },
                    match &o.contradiction {
                        Some(c) => format!(" CONTRADICTION: {c}"),
                        None => String::new(),
                    }
                );
            }
        }
    }
    let _ = writeln!(
        text,
        "summary: total={} errors={} class_g={} theorem3={} colorable={} uncolorable={} audit_clean={} extension_checked={} extension_failures={} contradictions={}",
        summary.total,
        summary.parse_errors,
        summary.class_g_members,
        summary.theorem3_members,
        summary.colorable,
        summary.uncolorable,
        summary.audit_clean,
        summary.extension_checked,
        summary.extension_failures,
        summary.contradictions
    );

    let report = BatchReport { outcomes, summary };
    emit(CommandKind::Batch, &report, text, config.json, code)
}

// ---------------------------------------------------------------------------
// entry point

pub fn run(config: &RunConfig) -> RunOutcome {
    if config.command == CommandKind::Batch {
        return batch_process(config);
    }
    let g = match load_single(config) {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    match config.command {
        CommandKind::Analyze => match analyze(&g, config.max_cycle_len) {
            Ok(report) => {
                let text = analyze_text(&report, &g);
                emit(CommandKind::Analyze, &report, text, config.json, 0)
            }
            Err(e) => fail(e),
        },
        CommandKind::Class => {
            let class_g = match check_class_g(&g) {
                Ok(r) => r,
                Err(e) => return fail(e.to_string()),
            };
            let theorem3 = match check_theorem3_class(&g) {
                Ok(r) => r,
                Err(e) => return fail(e.to_string()),
            };
            let code = if class_g.member { 0 } else { 1 };
            let mut text = String::new();
            for r in [&class_g, &theorem3] {
                let _ = writeln!(
                    text,
                    "{:?}: member={}{}",
                    r.checked_class,
                    r.member,
                    if r.witnesses.is_empty() {
                        String::new()
                    } else {
                        format!(
                            " witnesses: {}",
                            r.witnesses
                                .iter()
                                .map(|w| format!(
                                    "{:?} [{}]",
                                    w.reason,
                                    ids1(&w.cycle.vertices)
                                ))
                                .collect::<Vec<_>>()
                                .join(", ")
                        )
                    }
                );
            }
            let report = ClassCommandReport { class_g, theorem3 };
            emit(CommandKind::Class, &report, text, config.json, code)
        }
        CommandKind::Discharge => {
            let ledger = match apply_discharging(&g) {
                Ok(l) => l,
                Err(e) => return fail(e.to_string()),
            };
            let conservation = verify_conservation(&ledger);
            let negatives = negative_report(&ledger);
            let report = DischargeCommandReport {
                final_charges: ledger.final_charges(),
                conservation,
                initial_sum: ledger.initial_sum(),
                final_sum: ledger.final_sum(),
                negatives,
                ledger,
            };
            let mut text = String::new();
            let _ = writeln!(
                text,
                "discharging: {} transfers, conservation={} (sum {})",
                report.ledger.transfers.len(),
                conservation,
                report.final_sum
            );
            for t in &report.ledger.transfers {
                let _ = writeln!(
                    text,
                    "  {:?}: {} -> {} amount {}{}",
                    t.rule,
                    t.source,
                    t.sink,
                    t.amount,
                    match &t.via {
                        Some(via) => format!(" via {via}"),
                        None => String::new(),
                    }
                );
            }
            let _ = writeln!(text, "final charges:");
            for (el, charge) in &report.final_charges {
                let _ = writeln!(text, "  {el}: {charge}");
            }
            emit(CommandKind::Discharge, &report, text, config.json, 0)
        }
        CommandKind::Color => {
            let coloring = match solve_3coloring(&g, None) {
                Ok(c) => c,
                Err(e) => return fail(e.to_string()),
            };
            let code = if coloring.is_some() { 0 } else { 1 };
            let text = match &coloring {
                Some(c) => {
                    let colors: Vec<String> = c
                        .assignment
                        .iter()
                        .map(|(v, col)| format!("v{}={}", v + 1, col))
                        .collect();
                    format!("3-colorable: {}\n", colors.join(" "))
                }
                None => "none\n".to_string(),
            };
            let report = ColorCommandReport {
                colorable: coloring.is_some(),
                coloring,
            };
            emit(CommandKind::Color, &report, text, config.json, code)
        }
        CommandKind::Extend => {
            let report: ExtensionReport = match check_extension_property(&g) {
                Ok(r) => r,
                Err(e) => return fail(e.to_string()),
            };
            let code = if report.non_extendable() == 0 { 0 } else { 1 };
            let text = format!(
                "boundary good={} colorings={} extendable={} non_extendable={}\n",
                report.boundary_is_good,
                report.total_boundary_colorings,
                report.extendable,
                report.non_extendable()
            );
            emit(CommandKind::Extend, &report, text, config.json, code)
        }
        CommandKind::Audit => {
            let findings = audit_lemma_configurations(&g);
            let catalog_included = check_class_g(&g).map(|r| r.member).unwrap_or(false);
            let code = if findings.is_empty() { 0 } else { 1 };
            let mut text = format!("audit: {} findings\n", findings.len());
            for f in &findings {
                let _ = writeln!(
                    text,
                    "  {:?}: {}{}",
                    f.lemma,
                    f.detail,
                    if f.vertices.is_empty() {
                        String::new()
                    } else {
                        format!(" [{}]", ids1(&f.vertices))
                    }
                );
            }
            let report = AuditCommandReport {
                findings,
                catalog_included,
            };
            emit(CommandKind::Audit, &report, text, config.json, code)
        }
        CommandKind::Batch => unreachable!(),
    }
}

//! File formats: rotation text and binary planar_code.
//!
//! Both formats use 1-based vertex ids on the wire; the in-memory graph is
//! 0-based throughout.

use super::{GraphError, PlaneGraph};

pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

/// Parse the rotation-text format:
///
/// ```text
/// # comment
/// n
/// v: a b c ...        (clockwise neighbors of v, 1-based, n lines)
/// outer: v1 v2 ... vk (optional outer boundary walk)
/// ```
pub fn parse_rotation_text(input: &str) -> Result<PlaneGraph, GraphError> {
    let mut n: Option<usize> = None;
    let mut rotation: Vec<Vec<usize>> = Vec::new();
    let mut given: Vec<bool> = Vec::new();
    let mut outer: Option<Vec<usize>> = None;

    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(count) = n else {
            let parsed = line.parse::<usize>().map_err(|_| GraphError::Syntax {
                line: lineno,
                msg: format!("expected vertex count, got '{line}'"),
            })?;
            n = Some(parsed);
            rotation = vec![Vec::new(); parsed];
            given = vec![false; parsed];
            continue;
        };
        if let Some(rest) = line.strip_prefix("outer:") {
            if outer.is_some() {
                return Err(GraphError::Syntax {
                    line: lineno,
                    msg: "duplicate outer line".into(),
                });
            }
            outer = Some(parse_ids(rest, count, lineno)?);
            continue;
        }
        let (head, rest) = line.split_once(':').ok_or_else(|| GraphError::Syntax {
            line: lineno,
            msg: "expected 'v: neighbors...'".into(),
        })?;
        let v = parse_id(head.trim(), count, lineno)?;
        if given[v] {
            return Err(GraphError::Syntax {
                line: lineno,
                msg: format!("duplicate rotation for vertex {}", v + 1),
            });
        }
        given[v] = true;
        rotation[v] = parse_ids(rest, count, lineno)?;
    }

    let n = n.ok_or(GraphError::Syntax {
        line: 1,
        msg: "empty input".into(),
    })?;
    if let Some(missing) = given.iter().position(|g| !g) {
        if n > 0 {
            return Err(GraphError::Syntax {
                line: 0,
                msg: format!("no rotation line for vertex {}", missing + 1),
            });
        }
    }
    PlaneGraph::from_rotation(rotation, outer.as_deref())
}

fn parse_id(token: &str, n: usize, line: usize) -> Result<usize, GraphError> {
    let id = token.parse::<usize>().map_err(|_| GraphError::Syntax {
        line,
        msg: format!("bad vertex id '{token}'"),
    })?;
    if id == 0 || id > n {
        return Err(GraphError::VertexOutOfRange { id, n });
    }
    Ok(id - 1)
}

fn parse_ids(text: &str, n: usize, line: usize) -> Result<Vec<usize>, GraphError> {
    text.split_whitespace()
        .map(|tok| parse_id(tok, n, line))
        .collect()
}

/// Serialize to rotation text. The outer face is always written out so a
/// round trip preserves the designation.
pub fn emit_rotation_text(g: &PlaneGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", g.n()));
    for v in 0..g.n() {
        let nbrs: Vec<String> = g.rotation(v).iter().map(|w| (w + 1).to_string()).collect();
        out.push_str(&format!("{}: {}\n", v + 1, nbrs.join(" ")));
    }
    let walk: Vec<String> = g
        .outer_face()
        .walk
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    if !walk.is_empty() {
        out.push_str(&format!("outer: {}\n", walk.join(" ")));
    }
    out
}

/// Parse a planar_code stream record by record. Per-graph validation
/// failures land in the corresponding slot; a truncated tail stops the scan
/// and is reported separately so earlier records stay usable.
pub fn parse_planar_code_records(
    bytes: &[u8],
) -> (Vec<Result<PlaneGraph, GraphError>>, Option<GraphError>) {
    let mut data = bytes;
    if data.starts_with(PLANAR_CODE_HEADER) {
        data = &data[PLANAR_CODE_HEADER.len()..];
    }
    let mut records = Vec::new();
    let mut pos = 0usize;
    let mut index = 0usize;
    while pos < data.len() {
        let n = data[pos] as usize;
        pos += 1;
        if n == 0 {
            return (records, Some(GraphError::InStream {
                index,
                source: Box::new(GraphError::Syntax {
                    line: 0,
                    msg: "vertex count byte is zero".into(),
                }),
            }));
        }
        let mut rotation: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut record_err: Option<GraphError> = None;
        for _ in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let Some(&b) = data.get(pos) else {
                    return (records, Some(GraphError::Truncated { index }));
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                let id = b as usize;
                if id > n && record_err.is_none() {
                    record_err = Some(GraphError::InStream {
                        index,
                        source: Box::new(GraphError::VertexOutOfRange { id, n }),
                    });
                }
                nbrs.push(id.saturating_sub(1).min(n.saturating_sub(1)));
            }
            rotation.push(nbrs);
        }
        let record = match record_err {
            Some(e) => Err(e),
            None => PlaneGraph::from_rotation(rotation, None).map_err(|e| GraphError::InStream {
                index,
                source: Box::new(e),
            }),
        };
        records.push(record);
        index += 1;
    }
    (records, None)
}

/// Parse a planar_code stream: optional ASCII header, then per graph one
/// byte n followed by n zero-terminated clockwise neighbor lists. The
/// first failure of any kind is an error.
pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlaneGraph>, GraphError> {
    let (records, truncation) = parse_planar_code_records(bytes);
    let mut graphs = Vec::with_capacity(records.len());
    for record in records {
        graphs.push(record?);
    }
    if let Some(err) = truncation {
        return Err(err);
    }
    Ok(graphs)
}

/// Serialize graphs as one planar_code stream with header.
pub fn emit_planar_code(graphs: &[&PlaneGraph]) -> Result<Vec<u8>, GraphError> {
    let mut out = Vec::from(PLANAR_CODE_HEADER);
    for g in graphs {
        if g.n() > 255 {
            return Err(GraphError::TooLargeForPlanarCode(g.n()));
        }
        out.push(g.n() as u8);
        for v in 0..g.n() {
            for &w in g.rotation(v) {
                out.push((w + 1) as u8);
            }
            out.push(0);
        }
    }
    Ok(out)
}

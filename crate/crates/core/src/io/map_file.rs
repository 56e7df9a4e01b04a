//! Line-oriented map files.
//!
//! ```text
//! edges 3
//! vertex: 1 -2 3
//! vertex: -1 2 -3
//! root 1
//! ```
//!
//! Each `vertex:` line lists the darts leaving one vertex in
//! counterclockwise order. Blank lines and lines starting with `#` are
//! ignored. The edgeless map is `edges 0` followed by `root none`.

use thiserror::Error;

use crate::maps::{canonicalize, Dart, MapError, RootedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapFileError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] MapError),
}

fn format_err(line: usize, message: impl Into<String>) -> MapFileError {
    MapFileError::Format {
        line,
        message: message.into(),
    }
}

pub fn parse_map(text: &str) -> Result<RootedMap, MapFileError> {
    let mut edges: Option<usize> = None;
    let mut vertices: Vec<Vec<Dart>> = Vec::new();
    let mut root: Option<Option<Dart>> = None;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if root.is_some() {
            return Err(format_err(line_no, "content after the root line"));
        }
        if let Some(rest) = line.strip_prefix("vertex:") {
            if edges.is_none() {
                return Err(format_err(line_no, "expected `edges <E>` first"));
            }
            let darts = rest
                .split_whitespace()
                .map(|w| {
                    w.parse::<Dart>()
                        .map_err(|_| format_err(line_no, format!("bad dart `{w}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if !darts.is_empty() {
                vertices.push(darts);
            }
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap_or_default();
        let value = words.next();
        if words.next().is_some() {
            return Err(format_err(line_no, "trailing tokens"));
        }
        match (keyword, value) {
            ("edges", Some(v)) if edges.is_none() => {
                let e = v
                    .parse::<usize>()
                    .map_err(|_| format_err(line_no, format!("bad edge count `{v}`")))?;
                if e > (Dart::MAX as usize) {
                    return Err(format_err(line_no, "edge count too large"));
                }
                edges = Some(e);
            }
            ("edges", _) if edges.is_some() => {
                return Err(format_err(line_no, "duplicate `edges` line"));
            }
            ("root", Some(v)) => {
                if edges.is_none() {
                    return Err(format_err(line_no, "expected `edges <E>` first"));
                }
                root = Some(if v == "none" {
                    None
                } else {
                    Some(
                        v.parse::<Dart>()
                            .map_err(|_| format_err(line_no, format!("bad root `{v}`")))?,
                    )
                });
            }
            _ => return Err(format_err(line_no, format!("unrecognized line `{line}`"))),
        }
    }
    let edges = edges.ok_or_else(|| format_err(last.max(1), "missing `edges` line"))?;
    let root = root.ok_or_else(|| format_err(last.max(1), "missing `root` line"))?;
    if edges == 0 {
        return match root {
            None => Ok(RootedMap::vertex()),
            Some(r) => Err(MapError::BadRoot(format!("root {r} in a map without edges")).into()),
        };
    }
    Ok(RootedMap::from_rotation(edges, &vertices, root)?)
}

/// Prints the canonical form of `m`: vertices in order of their
/// smallest dart label (`+1, -1, +2, …`), each rotation starting there.
pub fn print_map(m: &RootedMap) -> String {
    let canon = canonicalize(m);
    let mut out = format!("edges {}\n", canon.edge_count());
    if !canon.is_vertex_map() {
        for cycle in canon.vertices() {
            let darts: Vec<String> = cycle.iter().map(|d| d.to_string()).collect();
            out.push_str("vertex: ");
            out.push_str(&darts.join(" "));
            out.push('\n');
        }
    }
    match canon.root() {
        Some(r) => out.push_str(&format!("root {r}\n")),
        None => out.push_str("root none\n"),
    }
    out
}

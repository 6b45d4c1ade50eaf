//! Graphviz output for dual graphs, and a reader for the same subset.
//!
//! A `(-1)`-curve is an unfilled circle with no label, a `(-2)`-curve is a
//! filled circle, and any other curve is a circle labelled `n` for
//! self-intersection `-n`. Each node carries the curve name as its tooltip.

use std::collections::BTreeMap;
use std::fmt::Write;

use delpezzo_core::DualGraph;
use thiserror::Error;

/// A DOT file that is not in the shape written by [`to_dot`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("edge refers to undeclared node `{0}`")]
    UnknownNode(String),
}

fn quote(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders `graph` with `title` as the graph label.
pub fn to_dot(graph: &DualGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph dual {{").unwrap();
    writeln!(out, "  label=\"{}\";", quote(title)).unwrap();
    writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true];").unwrap();
    for (i, v) in graph.vertices().iter().enumerate() {
        let style = match v.self_intersection {
            -1 => "label=\"\"".to_string(),
            -2 => "label=\"\", style=filled, fillcolor=black".to_string(),
            w => format!("label=\"{}\"", -w),
        };
        writeln!(out, "  v{i} [{style}, tooltip=\"{}\"];", quote(&v.label)).unwrap();
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn attributes(body: &str) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut rest = body;
    while let Some(eq) = rest.find('=') {
        let key = rest[..eq].trim().trim_start_matches(',').trim().to_string();
        let after = rest[eq + 1..].trim_start();
        let (value, tail) = if let Some(stripped) = after.strip_prefix('"') {
            let mut end = 0;
            let bytes = stripped.as_bytes();
            while end < bytes.len()
                && !(bytes[end] == b'"' && (end == 0 || bytes[end - 1] != b'\\'))
            {
                end += 1;
            }
            (
                stripped[..end].replace("\\\"", "\""),
                &stripped[(end + 1).min(stripped.len())..],
            )
        } else {
            let end = after.find(',').unwrap_or(after.len());
            (after[..end].trim().to_string(), &after[end..])
        };
        out.insert(key, value);
        rest = tail;
    }
    out
}

/// Reads back a graph written by [`to_dot`]. Vertex labels are the
/// tooltips; the self-intersections are recovered from the node styles.
pub fn parse_dot(text: &str) -> Result<DualGraph, DotError> {
    let mut names: BTreeMap<String, usize> = BTreeMap::new();
    let mut weights = Vec::new();
    let mut edges = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_end_matches(';').trim();
        let syntax = |message: &str| DotError::Syntax {
            line: n + 1,
            message: message.to_string(),
        };
        if line.is_empty()
            || line.starts_with("graph")
            || line == "}"
            || line.starts_with("label=")
            || line.starts_with("node ")
        {
            continue;
        }
        if let Some((a, b)) = line.split_once("--") {
            let (a, b) = (a.trim(), b.trim());
            let ia = *names
                .get(a)
                .ok_or_else(|| DotError::UnknownNode(a.to_string()))?;
            let ib = *names
                .get(b)
                .ok_or_else(|| DotError::UnknownNode(b.to_string()))?;
            edges.push((ia, ib));
            continue;
        }
        let open = line
            .find('[')
            .ok_or_else(|| syntax("expected a node or an edge"))?;
        let body = line[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| syntax("unterminated attribute list"))?;
        let attrs = attributes(body);
        let label = attrs.get("label").map(String::as_str).unwrap_or("");
        let filled = attrs.get("style").is_some_and(|s| s == "filled");
        let weight = match (label, filled) {
            ("", false) => -1,
            ("", true) => -2,
            (n, _) => -n
                .parse::<i64>()
                .map_err(|_| syntax("node label is not an integer"))?,
        };
        names.insert(line[..open].trim().to_string(), weights.len());
        weights.push(weight);
    }
    Ok(DualGraph::from_parts(&weights, &edges))
}

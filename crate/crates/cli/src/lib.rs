//! Commands of the `delpezzo` binary.
//!
//! Every command returns the text to print on standard output together with
//! an exit code. Exit code 0 means success, 1 a domain failure (an invalid
//! triplet, a failed elimination, an unclassified enumeration result) and 2
//! an input error (unreadable or malformed documents, bad arguments).

pub mod document;
pub mod dot;

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use delpezzo_core::{
    dual_graph_of, enumerate_all, enumerate_index, fractional_index_set, table_rows, validate,
    ClassifyError, Enumeration, GraphSelection, MultiIndex, Pruning, SearchBounds, TypeRecord,
};
use serde::Serialize;
use thiserror::Error;

use crate::document::{format_rational, DocumentError, TripletDocument};

/// Failures that stop a command before it produces a report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("`{0}` is not a multi-index a/b with 1/2 <= b/a < 1")]
    BadIndex(String),
    #[error("{0}")]
    Elimination(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Elimination(_) | CliError::Classify(_) => 1,
            CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Document(_)
            | CliError::BadIndex(_) => 2,
        }
    }
}

/// Standard output of a command and its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn read_document(path: &Path) -> Result<TripletDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(TripletDocument::parse(&text)?)
}

/// Parses `a/b` into a multi-index.
pub fn parse_index(text: &str) -> Result<MultiIndex, CliError> {
    let bad = || CliError::BadIndex(text.to_string());
    let (a, b) = text.split_once('/').ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    MultiIndex::new(a, b).map_err(|_| bad())
}

#[derive(Debug, Serialize)]
struct ConditionLine {
    condition: &'static str,
    passed: bool,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference: Option<&'static str>,
}

#[derive(Debug, Serialize)]
struct ValidationLine {
    valid: bool,
    conditions: Vec<ConditionLine>,
}

/// Checks every condition on the triplet in `path`.
pub fn cmd_validate(path: &Path) -> Result<Output, CliError> {
    let triplet = read_document(path)?.to_triplet()?;
    let report = validate(&triplet);
    let line = ValidationLine {
        valid: report.is_valid(),
        conditions: report
            .results
            .iter()
            .map(|r| ConditionLine {
                condition: r.condition.id(),
                passed: r.passed,
                detail: r.detail.clone(),
                reference: (!r.passed).then(|| r.condition.reference()),
            })
            .collect(),
    };
    let stdout = serde_json::to_string_pretty(&line).expect("report serializes") + "\n";
    Ok(Output {
        stdout,
        code: if report.is_valid() { 0 } else { 1 },
    })
}

/// Output format of [`cmd_eliminate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, Serialize)]
struct CurveLine {
    id: String,
    self_intersection: i64,
    em_coeff: String,
    kmx_coeff: i64,
    lm_intersection: String,
}

#[derive(Debug, Serialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Serialize)]
struct VertexJson {
    curve: String,
    self_intersection: i64,
}

fn graph_json(g: &delpezzo_core::DualGraph) -> GraphJson {
    GraphJson {
        vertices: g
            .vertices()
            .iter()
            .map(|v| VertexJson {
                curve: v.label.clone(),
                self_intersection: v.self_intersection,
            })
            .collect(),
        edges: g.edges().iter().copied().collect(),
    }
}

#[derive(Debug, Serialize)]
struct EliminationJson {
    weight: i64,
    fundamental: Vec<String>,
    curves: Vec<CurveLine>,
    graph: GraphJson,
}

/// Eliminates the subscheme of the triplet in `path` with weight `a - b`.
pub fn cmd_eliminate(
    path: &Path,
    format: GraphFormat,
    which: GraphSelection,
) -> Result<Output, CliError> {
    let triplet = read_document(path)?.to_triplet()?;
    let model = triplet
        .eliminate()
        .map_err(|e| CliError::Elimination(e.to_string()))?;
    let graph = dual_graph_of(&model, which);
    let stdout = match format {
        GraphFormat::Dot => {
            let title = delpezzo_core::match_type(&triplet).map_or_else(
                || format!("({},{})", triplet.index().a(), triplet.index().b()),
                |l| l.instance,
            );
            dot::to_dot(&graph, &title)
        }
        GraphFormat::Json => {
            let doc = EliminationJson {
                weight: triplet.index().s(),
                fundamental: model
                    .fundamental()
                    .coeffs()
                    .iter()
                    .map(format_rational)
                    .collect(),
                curves: model
                    .curves()
                    .iter()
                    .map(|c| CurveLine {
                        id: c.id.to_string(),
                        self_intersection: c.self_intersection,
                        em_coeff: format_rational(&c.em_coeff),
                        kmx_coeff: c.kmx_coeff,
                        lm_intersection: format_rational(&c.lm_intersection),
                    })
                    .collect(),
                graph: graph_json(&graph),
            };
            serde_json::to_string_pretty(&doc).expect("model serializes") + "\n"
        }
    };
    Ok(Output::ok(stdout))
}

/// One line of [`cmd_enumerate`] output.
#[derive(Debug, Serialize)]
struct RecordLine<'a> {
    label: &'a str,
    instance: &'a str,
    index: String,
    surface: String,
    params: &'a BTreeMap<String, i64>,
    table_row: &'a str,
    realizations: usize,
    cartier_multiplier: Option<u32>,
    triplet: TripletDocument,
    graph: GraphJson,
}

/// The JSON line describing one record.
pub fn record_json(r: &TypeRecord) -> String {
    let line = RecordLine {
        label: &r.label,
        instance: &r.instance,
        index: format!("{}/{}", r.index.a(), r.index.b()),
        surface: r.triplet.surface().to_string(),
        params: &r.params,
        table_row: r.table_row,
        realizations: r.realizations,
        cartier_multiplier: delpezzo_core::cartier_multiplier(&r.triplet).ok(),
        triplet: TripletDocument::from_triplet(&r.triplet),
        graph: graph_json(&r.graph),
    };
    serde_json::to_string(&line).expect("record serializes")
}

/// Options of [`cmd_enumerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateArgs {
    pub a_max: u32,
    pub n_max: u32,
    pub index: Option<String>,
    pub no_prune: bool,
}

/// Runs the enumeration described by `args`.
pub fn run_enumeration(args: &EnumerateArgs) -> Result<Enumeration, CliError> {
    let pruning = if args.no_prune {
        Pruning::Raw
    } else {
        Pruning::Claims
    };
    Ok(match &args.index {
        Some(text) => enumerate_index(parse_index(text)?, args.n_max, pruning)?,
        None => enumerate_all(&SearchBounds::new(args.n_max, args.a_max, pruning))?,
    })
}

/// Prints every type within the bounds as one JSON line. Validated
/// triplets that match no type are printed as `{"unclassified": ...}` and
/// make the exit code 1.
pub fn cmd_enumerate(args: &EnumerateArgs) -> Result<Output, CliError> {
    let e = run_enumeration(args)?;
    let mut stdout = String::new();
    for r in &e.records {
        stdout.push_str(&record_json(r));
        stdout.push('\n');
    }
    for t in &e.unclassified {
        let line = serde_json::json!({ "unclassified": TripletDocument::from_triplet(t) });
        stdout.push_str(&line.to_string());
        stdout.push('\n');
    }
    Ok(Output {
        stdout,
        code: if e.unclassified.is_empty() { 0 } else { 1 },
    })
}

/// File name of the atlas entry for a table row at 1-based `position`.
pub fn atlas_file_name(position: usize, row: &str) -> String {
    let mut slug = String::new();
    for ch in row.chars() {
        let mapped = match ch {
            c if c.is_ascii_alphanumeric() => c,
            '∞' => 'i',
            '×' => 'x',
            _ => '_',
        };
        if !(mapped == '_' && slug.ends_with('_')) {
            slug.push(mapped);
        }
    }
    format!("{position:02}_{}.dot", slug.trim_matches('_'))
}

/// Writes one DOT file per table row realized within the bounds, using the
/// first record of that row. Returns the list of files written.
pub fn cmd_atlas(n_max: u32, a_max: u32, out: &Path) -> Result<Output, CliError> {
    let write_err = |source| CliError::Write {
        path: out.to_path_buf(),
        source,
    };
    fs::create_dir_all(out).map_err(write_err)?;
    let e = enumerate_all(&SearchBounds::new(n_max, a_max, Pruning::Claims))?;
    let mut stdout = String::new();
    for (i, row) in table_rows().into_iter().enumerate() {
        let Some(r) = e.records.iter().find(|r| r.table_row == row) else {
            continue;
        };
        let name = atlas_file_name(i + 1, row);
        let path = out.join(&name);
        let text = dot::to_dot(&r.graph, &format!("{row}: {}", r.instance));
        fs::write(&path, text).map_err(|source| CliError::Write { path, source })?;
        stdout.push_str(&name);
        stdout.push('\n');
    }
    Ok(Output {
        stdout,
        code: if e.unclassified.is_empty() { 0 } else { 1 },
    })
}

/// The fractional indices `b/a > 1/2` with denominator at most `cap`, one
/// per line in increasing order.
pub fn cmd_indices(cap: u32) -> Output {
    let stdout = fractional_index_set(cap)
        .iter()
        .map(|r| format!("{}\n", format_rational(r)))
        .collect();
    Output::ok(stdout)
}

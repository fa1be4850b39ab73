//! Plain-text input formats.
//!
//! Graph files start with a line `n m` followed by `m` lines `u v` (0-based).
//! A weighted file appends one line of `n` vertex weights and one line of `m`
//! edge weights. Partition files list one class per line as edge ids. Cell
//! files list one axial `q r` pair per line. Blank lines and `#` comments are
//! ignored everywhere.

use std::fmt::Write;

use thiserror::Error;

use crate::benzenoid::{Axial, BenzenoidError, BenzenoidSpec};
use crate::graph::{EdgeId, Graph, GraphError, WeightedGraph};
use crate::theta::{EdgePartition, PartitionError};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Benzenoid(#[from] BenzenoidError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_fields<T: std::str::FromStr>(
    line_no: usize,
    line: &str,
    what: &str,
) -> Result<Vec<T>, FormatError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| parse_err(line_no, format!("invalid {what} `{tok}`")))
        })
        .collect()
}

/// A parsed graph file. Unweighted files and files whose weights are all
/// integers load exactly; any fractional weight switches to `f64`.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphInput {
    Integer(WeightedGraph<u64>),
    Real(WeightedGraph<f64>),
}

impl GraphInput {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphInput::Integer(wg) => wg.graph(),
            GraphInput::Real(wg) => wg.graph(),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphInput, FormatError> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let header: Vec<usize> = parse_fields(line_no, header, "count")?;
    let [n, m] = header[..] else {
        return Err(parse_err(line_no, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(line_no, format!("expected {m} edges, found {i}")))?;
        let pair: Vec<usize> = parse_fields(line_no, line, "vertex id")?;
        let [u, v] = pair[..] else {
            return Err(parse_err(line_no, "edge line must be `u v`"));
        };
        edges.push((u, v));
    }
    let graph = Graph::new(n, edges)?;

    let Some((vline_no, vline)) = lines.next() else {
        return Ok(GraphInput::Integer(WeightedGraph::unit(graph)));
    };
    let (eline_no, eline) = lines.next().ok_or_else(|| {
        parse_err(
            vline_no,
            "vertex weights must be followed by a line of edge weights",
        )
    })?;
    if let Some((extra, _)) = lines.next() {
        return Err(parse_err(extra, "unexpected content after edge weights"));
    }
    let check_len = |line_no: usize, found: usize, expected: usize, what: &str| {
        if found == expected {
            Ok(())
        } else {
            Err(parse_err(
                line_no,
                format!("expected {expected} {what} weights, found {found}"),
            ))
        }
    };
    let ints: Result<(Vec<u64>, Vec<u64>), FormatError> = parse_fields(vline_no, vline, "weight")
        .and_then(|vw| Ok((vw, parse_fields(eline_no, eline, "weight")?)));
    match ints {
        Ok((vw, ew)) => {
            check_len(vline_no, vw.len(), n, "vertex")?;
            check_len(eline_no, ew.len(), m, "edge")?;
            Ok(GraphInput::Integer(WeightedGraph::new(graph, vw, ew)?))
        }
        Err(_) => {
            let vw: Vec<f64> = parse_fields(vline_no, vline, "weight")?;
            let ew: Vec<f64> = parse_fields(eline_no, eline, "weight")?;
            check_len(vline_no, vw.len(), n, "vertex")?;
            check_len(eline_no, ew.len(), m, "edge")?;
            Ok(GraphInput::Real(WeightedGraph::new(graph, vw, ew)?))
        }
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_weighted_graph<W: Weight>(wg: &WeightedGraph<W>) -> String {
    let join = |ws: &[W]| {
        ws.iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = write_graph(wg.graph());
    writeln!(out, "{}", join(wg.vertex_weights())).unwrap();
    writeln!(out, "{}", join(wg.edge_weights())).unwrap();
    out
}

pub fn parse_partition(text: &str, edge_count: usize) -> Result<EdgePartition, FormatError> {
    let classes = content_lines(text)
        .map(|(line_no, line)| parse_fields::<EdgeId>(line_no, line, "edge id"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EdgePartition::new(edge_count, classes)?)
}

pub fn write_partition(p: &EdgePartition) -> String {
    let mut out = String::new();
    for class in p.classes() {
        let ids: Vec<String> = class.iter().map(|e| e.to_string()).collect();
        writeln!(out, "{}", ids.join(" ")).unwrap();
    }
    out
}

pub fn parse_cells(text: &str) -> Result<BenzenoidSpec, FormatError> {
    let cells = content_lines(text)
        .map(|(line_no, line)| {
            let qr: Vec<i32> = parse_fields(line_no, line, "coordinate")?;
            match qr[..] {
                [q, r] => Ok(Axial::new(q, r)),
                _ => Err(parse_err(line_no, "cell line must be `q r`")),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BenzenoidSpec::new(cells)?)
}

pub fn write_cells(spec: &BenzenoidSpec) -> String {
    spec.cells().map(|c| format!("{} {}\n", c.q, c.r)).collect()
}

//! Line-based graph files.
//!
//! ```text
//! # comment
//! graph 4
//! e 0 1
//! e 1 2
//! part 0: 0 2
//! part 1: 1 3
//! row 0: 0 1
//! row 1: 2 3
//! ```
//!
//! `graph <n>` must be the first non-comment line; `e`, `part` and `row`
//! lines may follow in any order. Vertex tokens are either all 0-based
//! indices or all symbolic names (`y1`, `a4`, ...); names are bound to
//! indices in order of first appearance.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::partition::{RPartition, StarShapeError, StarStructure};

/// A parsed graph file. Declared parts and rows are not validated against
/// the graph here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub partition: Option<RPartition>,
    pub star: Option<StarStructure>,
    /// Non-fatal findings, e.g. duplicate edges that were dropped.
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Naming {
    Unknown,
    Indices,
    Names,
}

struct VertexNamer {
    vertex_count: usize,
    naming: Naming,
    names: HashMap<String, Vertex>,
    order: Vec<String>,
}

impl VertexNamer {
    fn resolve(&mut self, token: &str, line: usize) -> Result<Vertex, ParseError> {
        let numeric = token.chars().all(|c| c.is_ascii_digit());
        let style = if numeric {
            Naming::Indices
        } else {
            Naming::Names
        };
        if self.naming == Naming::Unknown {
            self.naming = style;
        } else if self.naming != style {
            return Err(err(
                line,
                format!("vertex `{token}`: cannot mix indices and names"),
            ));
        }
        if numeric {
            let v: Vertex = token
                .parse()
                .map_err(|_| err(line, format!("vertex index `{token}` is too large")))?;
            if v >= self.vertex_count {
                return Err(err(
                    line,
                    format!("vertex {v} out of range for {} vertices", self.vertex_count),
                ));
            }
            return Ok(v);
        }
        if let Some(&v) = self.names.get(token) {
            return Ok(v);
        }
        let v = self.order.len();
        if v >= self.vertex_count {
            return Err(err(
                line,
                format!(
                    "name `{token}` exceeds the declared {} vertices",
                    self.vertex_count
                ),
            ));
        }
        self.names.insert(token.to_string(), v);
        self.order.push(token.to_string());
        Ok(v)
    }

    fn labels(&self) -> Vec<String> {
        (0..self.vertex_count)
            .map(|v| self.order.get(v).cloned().unwrap_or_else(|| v.to_string()))
            .collect()
    }
}

/// Splits `part 3: a b` / `part 3 : a b` / `part 3 a b` into index and
/// member tokens.
fn indexed_members<'a>(
    keyword: &str,
    tokens: &[&'a str],
    line: usize,
) -> Result<(usize, Vec<&'a str>), ParseError> {
    let first = tokens
        .first()
        .ok_or_else(|| err(line, format!("`{keyword}` needs an index")))?;
    let mut rest = &tokens[1..];
    let index_token = match first.strip_suffix(':') {
        Some(stripped) => stripped,
        None => {
            if rest.first() == Some(&":") {
                rest = &rest[1..];
            }
            first
        }
    };
    let index = index_token.parse().map_err(|_| {
        err(
            line,
            format!("`{keyword}` index `{index_token}` is not a number"),
        )
    })?;
    Ok((index, rest.to_vec()))
}

/// Collects `part`/`row` declarations keyed by index; indices must be
/// `0..k` without gaps once the file is read.
fn contiguous<T>(
    keyword: &str,
    declared: BTreeMap<usize, (usize, T)>,
) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::with_capacity(declared.len());
    for (expected, (index, (line, item))) in declared.into_iter().enumerate() {
        if index != expected {
            return Err(err(
                line,
                format!("{keyword} {index} declared but {keyword} {expected} is missing"),
            ));
        }
        out.push(item);
    }
    Ok(out)
}

/// Parses the line-based graph format.
pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut namer: Option<VertexNamer> = None;
    let mut parts: BTreeMap<usize, (usize, VertexSet)> = BTreeMap::new();
    let mut rows: BTreeMap<usize, (usize, Vec<Vertex>)> = BTreeMap::new();
    let mut warnings = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&keyword, args)) = tokens.split_first() else {
            continue;
        };

        let (Some(g), Some(names)) = (graph.as_mut(), namer.as_mut()) else {
            if keyword != "graph" {
                return Err(err(line, "expected `graph <n>` as the first line"));
            }
            let [count] = args else {
                return Err(err(line, "`graph` takes exactly one vertex count"));
            };
            let n: usize = count
                .parse()
                .map_err(|_| err(line, format!("vertex count `{count}` is not a number")))?;
            graph = Some(Graph::empty(n));
            namer = Some(VertexNamer {
                vertex_count: n,
                naming: Naming::Unknown,
                names: HashMap::new(),
                order: Vec::new(),
            });
            continue;
        };

        match keyword {
            "graph" => return Err(err(line, "duplicate `graph` line")),
            "e" => {
                let [a, b] = args else {
                    return Err(err(line, "`e` takes exactly two vertices"));
                };
                let u = names.resolve(a, line)?;
                let v = names.resolve(b, line)?;
                match g.add_edge(u, v) {
                    Ok(true) => {}
                    Ok(false) => {
                        warnings.push(format!("line {line}: duplicate edge {{{a}, {b}}} ignored"))
                    }
                    Err(GraphError::SelfLoop(_)) => {
                        return Err(err(line, format!("self-loop on `{a}`")))
                    }
                    Err(e) => return Err(err(line, e.to_string())),
                }
            }
            "part" | "row" => {
                let (index, members) = indexed_members(keyword, args, line)?;
                let vertices = members
                    .iter()
                    .map(|t| names.resolve(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                let duplicate = if keyword == "part" {
                    parts
                        .insert(index, (line, vertices.into_iter().collect()))
                        .is_some()
                } else {
                    rows.insert(index, (line, vertices)).is_some()
                };
                if duplicate {
                    return Err(err(line, format!("{keyword} {index} declared twice")));
                }
            }
            other => return Err(err(line, format!("unknown line kind `{other}`"))),
        }
    }

    let (Some(graph), Some(namer)) = (graph, namer) else {
        return Err(err(text.lines().count().max(1), "missing `graph <n>` line"));
    };
    let graph = graph.with_labels(namer.labels());

    let partition = if parts.is_empty() {
        None
    } else {
        Some(RPartition::new(contiguous("part", parts)?))
    };

    let star = if rows.is_empty() {
        None
    } else {
        let first_line = rows.values().next().map(|(l, _)| *l).unwrap_or(1);
        let rows = contiguous("row", rows)?;
        Some(StarStructure::new(rows).map_err(|e| match e {
            StarShapeError::Ragged { row, .. } => {
                err(first_line, format!("rows are ragged: {e} (row {row})"))
            }
            other => err(first_line, other.to_string()),
        })?)
    };

    Ok(GraphFile {
        graph,
        partition,
        star,
        warnings,
    })
}

/// Serializes a graph (and optional declarations) in the same format.
///
/// Labels are written when reading the result back would bind them to the
/// same indices; otherwise plain indices are used and the labels are kept
/// in a comment.
pub fn write_graph(
    graph: &Graph,
    partition: Option<&RPartition>,
    star: Option<&StarStructure>,
) -> String {
    let mut lines: Vec<Vec<Vertex>> = Vec::new();
    let mut kinds: Vec<String> = Vec::new();
    if let Some(s) = star {
        for (j, row) in s.rows().iter().enumerate() {
            kinds.push(format!("row {j}:"));
            lines.push(row.clone());
        }
    }
    if let Some(p) = partition {
        for (i, part) in p.parts().iter().enumerate() {
            kinds.push(format!("part {i}:"));
            lines.push(part.as_slice().to_vec());
        }
    }
    for (u, v) in graph.edges() {
        kinds.push("e".to_string());
        lines.push(vec![u, v]);
    }

    let use_labels = graph.has_custom_labels() && {
        let mut seen = vec![false; graph.vertex_count()];
        let mut next = 0;
        let mut ok = true;
        for &v in lines.iter().flatten() {
            if !seen[v] {
                seen[v] = true;
                ok &= v == next;
                next += 1;
            }
        }
        ok && next == graph.vertex_count()
    };

    let mut out = String::new();
    if graph.has_custom_labels() && !use_labels {
        let _ = writeln!(out, "# labels: {}", graph.labels().join(" "));
    }
    let _ = writeln!(out, "graph {}", graph.vertex_count());
    for (kind, vertices) in kinds.iter().zip(&lines) {
        out.push_str(kind);
        for &v in vertices {
            out.push(' ');
            if use_labels {
                out.push_str(graph.label(v));
            } else {
                let _ = write!(out, "{v}");
            }
        }
        out.push('\n');
    }
    out
}

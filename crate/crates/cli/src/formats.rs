//! Graph file formats: edge lists and augmented adjacency matrix text.

use std::fmt::Write as _;

use tupledom::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    /// `graph <n>` header followed by `<u> <v>` lines; `#` starts a comment.
    Edges,
    /// `n` lines of `n` characters from {0, 1}, read as the augmented
    /// adjacency matrix (all-ones diagonal, symmetric).
    Matrix,
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse_graph(text: &str, format: FileFormat) -> Result<Graph, ParseError> {
    match format {
        FileFormat::Edges => parse_edges(text),
        FileFormat::Matrix => parse_matrix(text),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_edges(text: &str) -> Result<Graph, ParseError> {
    let mut lines = significant_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["graph", count] => count
            .parse()
            .map_err(|_| err(line_no, format!("bad vertex count {count:?}")))?,
        _ => return Err(err(line_no, "expected header `graph <n>`")),
    };
    if n == 0 {
        return Err(err(line_no, "vertex count must be positive"));
    }
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line_no, "expected `<u> <v>`"));
        };
        let u: usize = u.parse().map_err(|_| err(line_no, format!("bad vertex {u:?}")))?;
        let v: usize = v.parse().map_err(|_| err(line_no, format!("bad vertex {v:?}")))?;
        if u == 0 || u > n || v == 0 || v > n {
            return Err(err(line_no, format!("edge {u} {v} out of range 1..={n}")));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))
}

fn parse_matrix(text: &str) -> Result<Graph, ParseError> {
    let rows: Vec<(usize, &str)> = significant_lines(text).collect();
    if rows.is_empty() {
        return Err(err(1, "empty file"));
    }
    let n = rows.len();
    let mut bits = vec![vec![false; n]; n];
    for (i, &(line_no, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(err(
                line_no,
                format!("row has {} characters, expected {n}", row.len()),
            ));
        }
        for (j, ch) in row.chars().enumerate() {
            bits[i][j] = match ch {
                '0' => false,
                '1' => true,
                other => return Err(err(line_no, format!("invalid character {other:?}"))),
            };
        }
    }
    for i in 0..n {
        if !bits[i][i] {
            return Err(err(rows[i].0, format!("diagonal entry ({},{}) must be 1", i + 1, i + 1)));
        }
        for j in 0..i {
            if bits[i][j] != bits[j][i] {
                return Err(err(
                    rows[i].0,
                    format!("matrix not symmetric at ({},{})", i + 1, j + 1),
                ));
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if bits[i][j] {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn emit_edges(g: &Graph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(comment) = comment {
        writeln!(out, "# {comment}").unwrap();
    }
    writeln!(out, "graph {}", g.vertex_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn emit_matrix(g: &Graph) -> String {
    g.augmented_adjacency().to_string()
}

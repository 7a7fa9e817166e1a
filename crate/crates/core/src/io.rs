//! Text formats for complexes and graphs.
//!
//! Complex format: a line `n <N>`, then one facet per line as space-separated
//! vertex labels, with `-` alone denoting the empty face. Graph format: a
//! line `n <N>`, then one edge `u v` per line. `#` starts a comment in both;
//! blank lines are ignored. Emission is canonical, so parse-emit round-trips
//! are byte-exact.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::Graph;

fn significant_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((idx + 1, line))
        }
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<usize> {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid ground-set size `{count}`"),
        }),
        _ => Err(Error::Parse {
            line: line_no,
            message: format!("expected header `n <N>`, got `{line}`"),
        }),
    }
}

pub fn parse_complex(input: &str) -> Result<SimplicialComplex> {
    let mut lines = significant_lines(input);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let n = parse_header(line_no, header)?;
    let mut facets = Vec::new();
    for (line_no, line) in lines {
        if line == "-" {
            facets.push(Face::EMPTY);
            continue;
        }
        let mut labels = Vec::new();
        for token in line.split_whitespace() {
            let label: usize = token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex label `{token}`"),
            })?;
            labels.push(label);
        }
        facets.push(Face::from_vertices(labels).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?);
    }
    SimplicialComplex::from_facets(n, facets).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })
}

pub fn emit_complex(delta: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", delta.n());
    for facet in delta.facets() {
        if facet.is_empty() {
            out.push_str("-\n");
        } else {
            let labels: Vec<String> = facet.vertices().iter().map(usize::to_string).collect();
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_graph(input: &str) -> Result<Graph> {
    let mut lines = significant_lines(input);
    let (line_no, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let n = parse_header(line_no, header)?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens.as_slice() else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected an edge `u v`, got `{line}`"),
            });
        };
        let parse = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex label `{t}`"),
            })
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::new(n, &edges).map_err(|e| Error::Parse {
        line: 0,
        message: e.to_string(),
    })
}

pub fn emit_graph(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.n());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

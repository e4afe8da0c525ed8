//! Line-oriented text format.
//!
//! ```text
//! # comment
//! p multigraph <n> <m>
//! e <u> <v>            one line per edge, 1-based endpoints, u = v is a loop
//! f <v> <g(v)> <f(v)>  optional function values
//! ```
//!
//! Edge ids follow the order of the `e` lines. Serialization writes the header,
//! then the edges in id order, then the function lines in vertex order, each
//! terminated by `\n`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Edge, EdgeId, GraphError, MultiGraph, Vertex, VertexIntMap};

/// A parsed graph file: the graph plus any `f` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: MultiGraph,
    pub functions: BTreeMap<Vertex, (i64, i64)>,
}

impl GraphFile {
    pub fn new(graph: MultiGraph) -> Self {
        GraphFile {
            graph,
            functions: BTreeMap::new(),
        }
    }

    pub fn with_functions(graph: MultiGraph, g: &VertexIntMap, f: &VertexIntMap) -> Self {
        let functions = (0..graph.vertex_count()).map(|v| (v, (g[v], f[v]))).collect();
        GraphFile { graph, functions }
    }

    /// `(g, f)` when every vertex has an `f` line.
    pub fn gf(&self) -> Option<(VertexIntMap, VertexIntMap)> {
        let n = self.graph.vertex_count();
        if self.functions.len() != n {
            return None;
        }
        let g = VertexIntMap::from_fn(n, |v| self.functions[&v].0);
        let f = VertexIntMap::from_fn(n, |v| self.functions[&v].1);
        Some((g, f))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        let _ = writeln!(out, "p multigraph {} {}", g.vertex_count(), g.edge_count());
        for e in g.edges() {
            let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
        }
        for (v, (lo, hi)) in &self.functions {
            let _ = writeln!(out, "f {} {} {}", v + 1, lo, hi);
        }
        out
    }
}

impl MultiGraph {
    pub fn to_text(&self) -> String {
        GraphFile::new(self.clone()).to_text()
    }

    pub fn parse(text: &str) -> Result<MultiGraph, GraphError> {
        parse_graph_file(text).map(|f| f.graph)
    }
}

pub fn parse_graph_file(text: &str) -> Result<GraphFile, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut functions = BTreeMap::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        let mut tok = line.split_whitespace();
        let tag = tok.next().unwrap_or("");
        let fields: Vec<&str> = tok.collect();
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(err("second header line".into()));
                }
                if fields.len() != 3 || fields[0] != "multigraph" {
                    return Err(err("malformed header, expected `p multigraph <n> <m>`".into()));
                }
                let n = parse_count(fields[1]).map_err(err)?;
                let m = parse_count(fields[2]).map_err(err)?;
                header = Some((n, m));
            }
            "e" => {
                let (n, m) = header.ok_or_else(|| err("edge before header".into()))?;
                if fields.len() != 2 {
                    return Err(err("expected `e <u> <v>`".into()));
                }
                let u = parse_vertex(fields[0], n).map_err(err)?;
                let v = parse_vertex(fields[1], n).map_err(err)?;
                if edges.len() == m {
                    return Err(err(format!("more than the {m} edges declared in the header")));
                }
                edges.push(Edge {
                    id: EdgeId(edges.len()),
                    u,
                    v,
                });
            }
            "f" => {
                let (n, _) = header.ok_or_else(|| err("function line before header".into()))?;
                if fields.len() != 3 {
                    return Err(err("expected `f <v> <g> <f>`".into()));
                }
                let v = parse_vertex(fields[0], n).map_err(err)?;
                let lo: i64 = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad integer `{}`", fields[1])))?;
                let hi: i64 = fields[2]
                    .parse()
                    .map_err(|_| err(format!("bad integer `{}`", fields[2])))?;
                if functions.insert(v, (lo, hi)).is_some() {
                    return Err(err(format!("second function line for vertex {}", v + 1)));
                }
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let (n, m) = header.ok_or(GraphError::Parse {
        line: last_line.max(1),
        msg: "missing `p multigraph` header".into(),
    })?;
    if edges.len() != m {
        return Err(GraphError::Parse {
            line: last_line.max(1),
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(GraphFile {
        graph: MultiGraph::from_edges(n, edges)?,
        functions,
    })
}

fn parse_count(s: &str) -> Result<usize, String> {
    s.parse().map_err(|_| format!("bad count `{s}`"))
}

fn parse_vertex(s: &str, n: usize) -> Result<Vertex, String> {
    let v: usize = s.parse().map_err(|_| format!("bad vertex `{s}`"))?;
    if v == 0 || v > n {
        return Err(format!("dangling endpoint {v} (vertices are 1..={n})"));
    }
    Ok(v - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path_and_loop() {
        let g = MultiGraph::parse("p multigraph 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(0).unwrap(), 1);
        let g = MultiGraph::parse("p multigraph 1 1\ne 1 1\n").unwrap();
        assert!(g.edges()[0].is_loop());
        assert_eq!(g.degree(0).unwrap(), 2);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = MultiGraph::parse("# c\np graph 2 1\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 2, .. }));
        let e = MultiGraph::parse("p multigraph 2 1\n\ne 1 3\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }), "{e}");
        let e = MultiGraph::parse("p multigraph 2 1\ne 1 2\ne 2 1\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }));
        let e = MultiGraph::parse("p multigraph 2 2\ne 1 2\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { .. }));
        let e = parse_graph_file("p multigraph 2 0\nf 1 0 1\nf 1 0 1\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 3, .. }));
        let e = MultiGraph::parse("e 1 2\n").unwrap_err();
        assert!(matches!(e, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn functions_round_trip() {
        let text = "p multigraph 3 2\ne 1 2\ne 3 3\nf 1 0 1\nf 2 1 1\nf 3 2 2\n";
        let file = parse_graph_file(text).unwrap();
        let (g, f) = file.gf().unwrap();
        assert_eq!(g.values(), &[0, 1, 2]);
        assert_eq!(f.values(), &[1, 1, 2]);
        assert_eq!(file.to_text(), text);
    }
}

//! Multigraph storage and the counting primitives every hypothesis is phrased in.
//!
//! Vertices are dense indices `0..n`. The text format and all reports number
//! them from 1, so vertex `v` is written as `v + 1`. Edges carry an [`EdgeId`]
//! fixed at construction; sub-multigraphs and factors keep the ids of their
//! host so results can always be traced back to the input file.

mod io;
mod maps;

pub use io::{parse_graph_file, GraphFile};
pub use maps::{Bipartition, DisjointPair, PairSide, VertexIntMap, VertexListMap};

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Dense vertex index.
pub type Vertex = usize;

/// Stable edge identifier. Written 1-based in every serialized form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.0 as u64 + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite to `w`. For a loop this is `w` itself.
    pub fn other(&self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(EdgeId),
    #[error("vertex sets overlap at vertex {}", .0 + 1)]
    Overlap(Vertex),
    #[error("not a bipartition: {0}")]
    InvalidBipartition(String),
    #[error("function defined on {got} vertices, graph has {expected}")]
    MapSize { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Undirected multigraph with loops and parallel edges.
///
/// Immutable once built apart from [`MultiGraph::add_edge`]; edges are kept in
/// increasing id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph { n, edges: Vec::new() }
    }

    /// Builds a graph whose edge ids are the positions in `pairs`.
    pub fn from_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from explicit edges, which must have distinct ids.
    pub fn from_edges(n: usize, mut edges: Vec<Edge>) -> Result<Self, GraphError> {
        edges.sort_by_key(|e| e.id);
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(GraphError::DuplicateEdge(w[0].id));
            }
        }
        for e in &edges {
            if e.u >= n {
                return Err(GraphError::UnknownVertex(e.u));
            }
            if e.v >= n {
                return Err(GraphError::UnknownVertex(e.v));
            }
        }
        Ok(MultiGraph { n, edges })
    }

    /// Appends an edge with id one past the largest existing id.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId, GraphError> {
        if u >= self.n {
            return Err(GraphError::UnknownVertex(u));
        }
        if v >= self.n {
            return Err(GraphError::UnknownVertex(v));
        }
        let id = EdgeId(self.edges.last().map_or(0, |e| e.id.0 + 1));
        self.edges.push(Edge { id, u, v });
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of an edge id in [`MultiGraph::edges`].
    pub fn position(&self, id: EdgeId) -> Option<usize> {
        self.edges.binary_search_by_key(&id, |e| e.id).ok()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.position(id).map(|p| &self.edges[p])
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self
            .edges
            .iter()
            .map(|e| (e.u == v) as usize + (e.v == v) as usize)
            .sum())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn loop_counts(&self) -> Vec<usize> {
        let mut l = vec![0; self.n];
        for e in self.edges.iter().filter(|e| e.is_loop()) {
            l[e.u] += 1;
        }
        l
    }

    /// Incidence lists: for each vertex, `(edge position, other endpoint)`.
    /// A loop appears twice in its vertex's list.
    pub fn incidence(&self) -> Vec<Vec<(usize, Vertex)>> {
        let mut inc = vec![Vec::new(); self.n];
        for (p, e) in self.edges.iter().enumerate() {
            inc[e.u].push((p, e.v));
            inc[e.v].push((p, e.u));
        }
        inc
    }

    pub fn all_edges(&self) -> Factor {
        Factor::from_sorted_unchecked(self.edges.iter().map(|e| e.id).collect())
    }

    pub fn check_factor(&self, f: &Factor) -> Result<(), GraphError> {
        for &id in f.ids() {
            if self.position(id).is_none() {
                return Err(GraphError::UnknownEdge(id));
            }
        }
        Ok(())
    }

    /// The spanning sub-multigraph on the edges of `f`, ids preserved.
    pub fn spanning_subgraph(&self, f: &Factor) -> Result<MultiGraph, GraphError> {
        let mut edges = Vec::with_capacity(f.len());
        for &id in f.ids() {
            edges.push(*self.edge(id).ok_or(GraphError::UnknownEdge(id))?);
        }
        Ok(MultiGraph { n: self.n, edges })
    }

    /// Degree vector of a factor of this graph.
    pub fn factor_degrees(&self, f: &Factor) -> Result<Vec<usize>, GraphError> {
        let mut d = vec![0; self.n];
        for &id in f.ids() {
            let e = self.edge(id).ok_or(GraphError::UnknownEdge(id))?;
            d[e.u] += 1;
            d[e.v] += 1;
        }
        Ok(d)
    }

    /// Complement of `f` inside this graph.
    pub fn complement(&self, f: &Factor) -> Factor {
        Factor::from_sorted_unchecked(
            self.edges
                .iter()
                .map(|e| e.id)
                .filter(|id| !f.contains(*id))
                .collect(),
        )
    }

    pub fn is_eulerian(&self) -> bool {
        self.degrees().iter().all(|d| d % 2 == 0)
    }

    /// Vertices with `d_G(v)` odd.
    pub fn odd_vertices(&self) -> Vec<Vertex> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, d)| *d % 2 == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        components_with(self.n, self.edges.iter().map(|e| (e.u, e.v)))
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// `(d_G(X), e_G(X), d_G(X, Y))`; the last entry only when `y` is given.
    pub fn partition_stats(
        &self,
        x: &[Vertex],
        y: Option<&[Vertex]>,
    ) -> Result<PartitionStats, GraphError> {
        let in_x = self.mask(x)?;
        let in_y = match y {
            Some(y) => {
                let m = self.mask(y)?;
                if let Some(v) = (0..self.n).find(|&v| m[v] && in_x[v]) {
                    return Err(GraphError::Overlap(v));
                }
                Some(m)
            }
            None => None,
        };
        let mut stats = PartitionStats {
            boundary: 0,
            inside: 0,
            cross: in_y.as_ref().map(|_| 0),
        };
        for e in &self.edges {
            match (in_x[e.u], in_x[e.v]) {
                (true, true) => stats.inside += 1,
                (true, false) | (false, true) => stats.boundary += 1,
                _ => {}
            }
            if let (Some(m), Some(c)) = (&in_y, stats.cross.as_mut()) {
                if (in_x[e.u] && m[e.v]) || (in_x[e.v] && m[e.u]) {
                    *c += 1;
                }
            }
        }
        Ok(stats)
    }

    /// `e_G(X)` for a membership mask; loops inside `X` count once.
    pub fn inside_count(&self, in_x: &[bool]) -> usize {
        self.edges.iter().filter(|e| in_x[e.u] && in_x[e.v]).count()
    }

    /// Number of edges with both ends on the same side of `p`, loops included.
    pub fn intra_part_count(&self, p: &Bipartition) -> usize {
        self.edges
            .iter()
            .filter(|e| p.in_x(e.u) == p.in_x(e.v))
            .count()
    }

    /// `G[X, Y]`: the edges with one end on each side. Loops never qualify.
    pub fn induced_bipartite_factor(&self, p: &Bipartition) -> Result<Factor, GraphError> {
        p.check(self)?;
        Ok(Factor::from_sorted_unchecked(
            self.edges
                .iter()
                .filter(|e| p.in_x(e.u) != p.in_x(e.v))
                .map(|e| e.id)
                .collect(),
        ))
    }

    /// Whether every edge crosses `p` (so no loops and no intra-part edges).
    pub fn is_bipartite_with(&self, p: &Bipartition) -> bool {
        p.len() == self.n && self.edges.iter().all(|e| p.in_x(e.u) != p.in_x(e.v))
    }

    fn mask(&self, set: &[Vertex]) -> Result<Vec<bool>, GraphError> {
        let mut m = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            m[v] = true;
        }
        Ok(m)
    }
}

/// Boundary, interior and cross counts of a vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    /// `d_G(X)`
    pub boundary: usize,
    /// `e_G(X)`
    pub inside: usize,
    /// `d_G(X, Y)`
    pub cross: Option<usize>,
}

pub(crate) fn components_with(
    n: usize,
    pairs: impl Iterator<Item = (Vertex, Vertex)>,
) -> Vec<Vec<Vertex>> {
    let mut uf = UnionFind::new(n);
    for (u, v) in pairs {
        uf.union(u, v);
    }
    uf.groups()
}

/// Disjoint-set forest with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}

/// A spanning subgraph, stored as a sorted set of host edge ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Factor {
    ids: Vec<EdgeId>,
}

impl fmt::Display for Factor {
    /// `{e1, e4, e7}`, with 1-based ids.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.ids.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

impl Factor {
    pub fn empty() -> Self {
        Factor::default()
    }

    pub fn from_ids(ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut ids: Vec<EdgeId> = ids.into_iter().collect();
        ids.sort();
        ids.dedup();
        Factor { ids }
    }

    pub(crate) fn from_sorted_unchecked(ids: Vec<EdgeId>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        Factor { ids }
    }

    pub fn ids(&self) -> &[EdgeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn union(&self, other: &Factor) -> Factor {
        Factor::from_ids(self.ids.iter().chain(other.ids.iter()).copied())
    }

    pub fn difference(&self, other: &Factor) -> Factor {
        Factor::from_sorted_unchecked(
            self.ids
                .iter()
                .copied()
                .filter(|id| !other.contains(*id))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &Factor) -> bool {
        self.ids.iter().all(|id| !other.contains(*id))
    }
}

impl FromIterator<EdgeId> for Factor {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        Factor::from_ids(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn degree_conventions() {
        let lp = MultiGraph::from_pairs(1, &[(0, 0)]).unwrap();
        assert_eq!(lp.degree(0).unwrap(), 2);
        let g = k4();
        for v in g.vertices() {
            assert_eq!(g.degree(v).unwrap(), 3);
        }
        let par = MultiGraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(par.degree(0).unwrap(), 2);
        assert_eq!(g.degree(7), Err(GraphError::UnknownVertex(7)));
    }

    #[test]
    fn partition_stats_examples() {
        let g = k4();
        let s = g.partition_stats(&[0, 1], Some(&[2, 3])).unwrap();
        assert_eq!((s.boundary, s.inside, s.cross), (4, 1, Some(4)));
        let all: Vec<_> = g.vertices().collect();
        let s = g.partition_stats(&all, None).unwrap();
        assert_eq!((s.boundary, s.inside), (0, 6));
        let lp = MultiGraph::from_pairs(2, &[(0, 0), (0, 1)]).unwrap();
        let s = lp.partition_stats(&[0], None).unwrap();
        assert_eq!((s.boundary, s.inside), (1, 1));
        let only_loop = MultiGraph::from_pairs(1, &[(0, 0)]).unwrap();
        let s = only_loop.partition_stats(&[0], None).unwrap();
        assert_eq!((s.boundary, s.inside), (0, 1));
        assert_eq!(
            g.partition_stats(&[0, 1], Some(&[1, 2])),
            Err(GraphError::Overlap(1))
        );
    }

    #[test]
    fn induced_bipartite_factor_examples() {
        let g = k4();
        let p = Bipartition::from_x(4, &[0, 1]).unwrap();
        let f = g.induced_bipartite_factor(&p).unwrap();
        assert_eq!(f.len(), 4);
        assert!(!f.contains(EdgeId(0)) && !f.contains(EdgeId(5)));

        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = Bipartition::from_x(4, &[0, 2]).unwrap();
        assert_eq!(c4.induced_bipartite_factor(&p).unwrap(), c4.all_edges());

        let lp = MultiGraph::from_pairs(1, &[(0, 0)]).unwrap();
        let p = Bipartition::from_x(1, &[0]).unwrap();
        assert!(lp.induced_bipartite_factor(&p).unwrap().is_empty());
    }

    #[test]
    fn component_examples() {
        let two_triangles =
            MultiGraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two_triangles.component_count(), 2);
        assert_eq!(k4().component_count(), 1);
        assert_eq!(MultiGraph::new(5).component_count(), 5);
    }

    #[test]
    fn subgraph_keeps_ids() {
        let g = k4();
        let f = Factor::from_ids([EdgeId(5), EdgeId(1)]);
        let h = g.spanning_subgraph(&f).unwrap();
        assert_eq!(h.edges()[0].id, EdgeId(1));
        assert_eq!(h.edges()[1].id, EdgeId(5));
        assert_eq!(h.vertex_count(), 4);
        assert!(g.spanning_subgraph(&Factor::from_ids([EdgeId(9)])).is_err());
    }
}

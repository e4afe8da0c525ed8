use std::ops::{Index, IndexMut};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{GraphError, MultiGraph, Vertex};

/// Integer function on the vertices of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexIntMap(Vec<i64>);

impl VertexIntMap {
    pub fn new(values: Vec<i64>) -> Self {
        VertexIntMap(values)
    }

    pub fn constant(n: usize, c: i64) -> Self {
        VertexIntMap(vec![c; n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(Vertex) -> i64) -> Self {
        VertexIntMap((0..n).map(f).collect())
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn check(&self, g: &MultiGraph) -> Result<(), GraphError> {
        if self.0.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::MapSize {
                expected: g.vertex_count(),
                got: self.0.len(),
            })
        }
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &VertexIntMap) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Index<Vertex> for VertexIntMap {
    type Output = i64;
    fn index(&self, v: Vertex) -> &i64 {
        &self.0[v]
    }
}

impl IndexMut<Vertex> for VertexIntMap {
    fn index_mut(&mut self, v: Vertex) -> &mut i64 {
        &mut self.0[v]
    }
}

/// Finite nonempty set of admissible integers per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexListMap(Vec<Vec<i64>>);

impl VertexListMap {
    /// Sorts and dedups each list. Panics on an empty list.
    pub fn new(mut lists: Vec<Vec<i64>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
            assert!(!l.is_empty(), "degree lists must be nonempty");
        }
        VertexListMap(lists)
    }

    /// `{g(v), f(v)}` at every vertex.
    pub fn two_point(g: &VertexIntMap, f: &VertexIntMap) -> Self {
        VertexListMap::new(
            g.values()
                .iter()
                .zip(f.values())
                .map(|(&a, &b)| vec![a, b])
                .collect(),
        )
    }

    pub fn lists(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn allows(&self, v: Vertex, value: i64) -> bool {
        self.0[v].binary_search(&value).is_ok()
    }
}

impl Index<Vertex> for VertexListMap {
    type Output = Vec<i64>;
    fn index(&self, v: Vertex) -> &Vec<i64> {
        &self.0[v]
    }
}

/// Ordered pair `(X, Y)` of complementary vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    in_x: Vec<bool>,
}

impl Bipartition {
    pub fn from_mask(in_x: Vec<bool>) -> Self {
        Bipartition { in_x }
    }

    /// `X` as given, `Y` the rest of `0..n`.
    pub fn from_x(n: usize, x: &[Vertex]) -> Result<Self, GraphError> {
        let mut in_x = vec![false; n];
        for &v in x {
            if v >= n {
                return Err(GraphError::UnknownVertex(v));
            }
            in_x[v] = true;
        }
        Ok(Bipartition { in_x })
    }

    /// Validates that `x` and `y` are disjoint and cover `0..n`.
    pub fn from_sides(n: usize, x: &[Vertex], y: &[Vertex]) -> Result<Self, GraphError> {
        let mut seen = vec![0u8; n];
        for (side, set) in [(1u8, x), (2u8, y)] {
            for &v in set {
                if v >= n {
                    return Err(GraphError::UnknownVertex(v));
                }
                if seen[v] != 0 {
                    return Err(GraphError::Overlap(v));
                }
                seen[v] = side;
            }
        }
        if let Some(v) = seen.iter().position(|&s| s == 0) {
            return Err(GraphError::InvalidBipartition(format!(
                "vertex {} is in neither side",
                v + 1
            )));
        }
        Ok(Bipartition {
            in_x: seen.iter().map(|&s| s == 1).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.in_x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_x.is_empty()
    }

    pub fn in_x(&self, v: Vertex) -> bool {
        self.in_x[v]
    }

    pub fn mask(&self) -> &[bool] {
        &self.in_x
    }

    pub fn x(&self) -> Vec<Vertex> {
        (0..self.in_x.len()).filter(|&v| self.in_x[v]).collect()
    }

    pub fn y(&self) -> Vec<Vertex> {
        (0..self.in_x.len()).filter(|&v| !self.in_x[v]).collect()
    }

    /// `(Y, X)`.
    pub fn swapped(&self) -> Self {
        Bipartition {
            in_x: self.in_x.iter().map(|b| !b).collect(),
        }
    }

    pub fn check(&self, g: &MultiGraph) -> Result<(), GraphError> {
        if self.in_x.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::InvalidBipartition(format!(
                "covers {} vertices, graph has {}",
                self.in_x.len(),
                g.vertex_count()
            )))
        }
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let one_based = |vs: Vec<Vertex>| vs.into_iter().map(|v| v + 1).collect::<Vec<_>>();
        let mut st = s.serialize_struct("Bipartition", 2)?;
        st.serialize_field("x", &one_based(self.x()))?;
        st.serialize_field("y", &one_based(self.y()))?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairSide {
    A,
    B,
}

/// Disjoint vertex sets `A` and `B`; everything else is unassigned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPair {
    side: Vec<Option<PairSide>>,
}

impl DisjointPair {
    pub fn empty(n: usize) -> Self {
        DisjointPair {
            side: vec![None; n],
        }
    }

    pub fn new(n: usize, a: &[Vertex], b: &[Vertex]) -> Result<Self, GraphError> {
        let mut side = vec![None; n];
        for (tag, set) in [(PairSide::A, a), (PairSide::B, b)] {
            for &v in set {
                if v >= n {
                    return Err(GraphError::UnknownVertex(v));
                }
                if side[v].is_some() {
                    return Err(GraphError::Overlap(v));
                }
                side[v] = Some(tag);
            }
        }
        Ok(DisjointPair { side })
    }

    pub(crate) fn from_sides(side: Vec<Option<PairSide>>) -> Self {
        DisjointPair { side }
    }

    pub fn side(&self, v: Vertex) -> Option<PairSide> {
        self.side[v]
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn a(&self) -> Vec<Vertex> {
        self.members(PairSide::A)
    }

    pub fn b(&self) -> Vec<Vertex> {
        self.members(PairSide::B)
    }

    /// Whether `A ∪ B` is empty.
    pub fn is_trivial(&self) -> bool {
        self.side.iter().all(Option::is_none)
    }

    fn members(&self, tag: PairSide) -> Vec<Vertex> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == Some(tag))
            .collect()
    }
}

impl Serialize for DisjointPair {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let one_based = |vs: Vec<Vertex>| vs.into_iter().map(|v| v + 1).collect::<Vec<_>>();
        let mut st = s.serialize_struct("DisjointPair", 2)?;
        st.serialize_field("a", &one_based(self.a()))?;
        st.serialize_field("b", &one_based(self.b()))?;
        st.end()
    }
}

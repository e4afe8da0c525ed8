//! Orientations with constrained out-degrees and the correspondence between
//! orientations and factors of a bipartite graph.
//!
//! A loop contributes exactly one to the out-degree of its vertex, which
//! keeps `Σ d⁺ = |E|` and `d⁺ = d/2` for balanced orientations.

use num_rational::Ratio;
use serde::ser::SerializeSeq;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::spanning_tree_packing;
use crate::flow::BoundedCirculation;
use crate::graph::{Bipartition, Factor, GraphError, MultiGraph, Vertex, VertexIntMap, VertexListMap};
use crate::search::{list_search, Search};

/// Largest edge count for [`enumerate_orientations`], and below which list
/// searches run without a budget.
pub const ORIENTATION_CAP: usize = 16;

/// Oracle-call budget for list searches above [`ORIENTATION_CAP`].
pub const ORIENTATION_BUDGET: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("vertex {} has odd degree", .0 + 1)]
    OddVertex(Vertex),
    #[error("graph is not bipartite with the given parts: {0}")]
    NotBipartite(String),
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("{what} is exhaustive only up to {cap} edges, graph has {size}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Direction of every edge of a host graph, by edge position: `true` means
/// the edge runs from its first endpoint `u` to `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    forward: Vec<bool>,
    tails: Vec<(Vertex, Vertex)>,
    ids: Vec<usize>,
}

impl Orientation {
    pub fn from_forward(g: &MultiGraph, forward: Vec<bool>) -> Result<Self, OrientationError> {
        if forward.len() != g.edge_count() {
            return Err(GraphError::MapSize {
                expected: g.edge_count(),
                got: forward.len(),
            }
            .into());
        }
        let tails = g
            .edges()
            .iter()
            .zip(&forward)
            .map(|(e, &fw)| if fw { (e.u, e.v) } else { (e.v, e.u) })
            .collect();
        let ids = g.edges().iter().map(|e| e.id.0).collect();
        Ok(Orientation {
            forward,
            tails,
            ids,
        })
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// `(tail, head)` per edge position.
    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.tails
    }

    pub fn out_degrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(t, _) in &self.tails {
            out[t] += 1;
        }
        out
    }

    /// Whether this orientation belongs to `g` and `Σ d⁺ = |E|`.
    pub fn verify(&self, g: &MultiGraph) -> bool {
        self.forward.len() == g.edge_count()
            && g.edges().iter().zip(&self.tails).all(|(e, &(t, h))| {
                (t, h) == (e.u, e.v) || (t, h) == (e.v, e.u)
            })
            && self.out_degrees(g.vertex_count()).iter().sum::<usize>() == g.edge_count()
    }
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Arc {
            edge: usize,
            tail: usize,
            head: usize,
        }
        let mut seq = s.serialize_seq(Some(self.tails.len()))?;
        for (&id, &(t, h)) in self.ids.iter().zip(&self.tails) {
            seq.serialize_element(&Arc {
                edge: id + 1,
                tail: t + 1,
                head: h + 1,
            })?;
        }
        seq.end()
    }
}

/// `d⁺(v) = d(v)/2` everywhere, by orienting closed trails.
pub fn eulerian_orientation(g: &MultiGraph) -> Result<Orientation, OrientationError> {
    if let Some(&v) = g.odd_vertices().first() {
        return Err(OrientationError::OddVertex(v));
    }
    let inc = g.incidence();
    let mut used = vec![false; g.edge_count()];
    let mut forward = vec![true; g.edge_count()];
    let mut next = vec![0usize; g.vertex_count()];
    for start in g.vertices() {
        loop {
            while next[start] < inc[start].len() && used[inc[start][next[start]].0] {
                next[start] += 1;
            }
            if next[start] == inc[start].len() {
                break;
            }
            // even degrees force the walk to close at `start`
            let mut cur = start;
            loop {
                while next[cur] < inc[cur].len() && used[inc[cur][next[cur]].0] {
                    next[cur] += 1;
                }
                let Some(&(pos, other)) = inc[cur].get(next[cur]) else {
                    break;
                };
                used[pos] = true;
                forward[pos] = g.edges()[pos].u == cur;
                cur = other;
            }
            debug_assert_eq!(cur, start);
        }
    }
    let o = Orientation::from_forward(g, forward)?;
    debug_assert!(o
        .out_degrees(g.vertex_count())
        .iter()
        .zip(g.degrees())
        .all(|(&a, d)| 2 * a == d));
    Ok(o)
}

/// An orientation with `p(v) <= d⁺(v) <= q(v)`, or `None` when there is
/// none. Exact: a feasible circulation assigns each non-loop edge to the
/// endpoint that becomes its tail.
pub fn interval_orientation(
    g: &MultiGraph,
    p: &VertexIntMap,
    q: &VertexIntMap,
) -> Result<Option<Orientation>, OrientationError> {
    check_bounds(g, p, q)?;
    Ok(interval_forward(g, p.values(), q.values())
        .map(|fw| Orientation::from_forward(g, fw).expect("sized to g")))
}

fn interval_forward(g: &MultiGraph, p: &[i64], q: &[i64]) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let loops = g.loop_counts();
    let real: Vec<usize> = (0..g.edge_count())
        .filter(|&i| !g.edges()[i].is_loop())
        .collect();
    let (s, t) = (0, 1);
    let vertex_node = |v: usize| 2 + v;
    let edge_node = |j: usize| 2 + n + j;
    let mut c = BoundedCirculation::new(2 + n + real.len());
    let mut to_u = Vec::with_capacity(real.len());
    for (j, &i) in real.iter().enumerate() {
        let e = g.edges()[i];
        c.add_arc(s, edge_node(j), 1, 1);
        to_u.push(c.add_arc(edge_node(j), vertex_node(e.u), 0, 1));
        c.add_arc(edge_node(j), vertex_node(e.v), 0, 1);
    }
    for v in 0..n {
        let lo = (p[v] - loops[v] as i64).max(0);
        let hi = q[v] - loops[v] as i64;
        if hi < lo {
            return None;
        }
        c.add_arc(vertex_node(v), t, lo, hi);
    }
    c.add_arc(t, s, real.len() as i64, real.len() as i64);
    let flow = c.solve()?;
    let mut forward = vec![true; g.edge_count()];
    for (j, &i) in real.iter().enumerate() {
        forward[i] = flow[to_u[j]] == 1;
    }
    Some(forward)
}

/// An orientation with `d⁺(v) ∈ lists(v)` for every vertex. Complete when
/// `budget` is `None`.
pub fn list_orientation(
    g: &MultiGraph,
    lists: &VertexListMap,
    budget: Option<usize>,
) -> Result<Search<Orientation>, OrientationError> {
    if lists.len() != g.vertex_count() {
        return Err(GraphError::MapSize {
            expected: g.vertex_count(),
            got: lists.len(),
        }
        .into());
    }
    let n = g.vertex_count();
    let result = list_search(lists.lists(), budget, |lo, hi| {
        let fw = interval_forward(g, lo, hi)?;
        let o = Orientation::from_forward(g, fw).expect("sized to g");
        let d = o.out_degrees(n).into_iter().map(|x| x as i64).collect();
        Some((o, d))
    });
    if let Search::Found(o) = &result {
        let d = o.out_degrees(n);
        assert!(o.verify(g) && (0..n).all(|v| lists.allows(v, d[v] as i64)));
    }
    Ok(result)
}

fn budget_for(g: &MultiGraph) -> Option<usize> {
    (g.edge_count() > ORIENTATION_CAP).then_some(ORIENTATION_BUDGET)
}

/// An orientation with `d⁺(v) ∈ {p(v), q(v)}`, and `d⁺(z) = pin` when a pin
/// `(z, pin)` is given.
pub fn two_point_orientation(
    g: &MultiGraph,
    p: &VertexIntMap,
    q: &VertexIntMap,
    pin: Option<(Vertex, i64)>,
) -> Result<Search<Orientation>, OrientationError> {
    check_bounds(g, p, q)?;
    let mut lists = VertexListMap::two_point(p, q).lists().to_vec();
    if let Some((z, value)) = pin {
        g.check_vertex(z)?;
        if value != p[z] && value != q[z] {
            return Err(OrientationError::InvalidBounds(format!(
                "pinned value {value} at vertex {} is neither p nor q",
                z + 1
            )));
        }
        lists[z] = vec![value];
    }
    list_orientation(g, &VertexListMap::new(lists), budget_for(g))
}

/// The integers `d` with `d(z)/2 - x <= d < d(z)/2 + k - x`.
pub fn defect_window(degree: usize, x: Ratio<i64>, k: i64) -> Vec<i64> {
    let half = Ratio::new(degree as i64, 2);
    let lo = (half - x).ceil().to_integer();
    let hi = (half + Ratio::from_integer(k) - x).ceil().to_integer() - 1;
    (lo..=hi).collect()
}

/// Hypotheses of the defective orientation theorem: `x ∈ [0, k)`,
/// `p <= d/2 <= q`, `q - p <= k`, and `(3k/2 + 1)(k - 1)` edge-disjoint
/// spanning trees.
pub fn z_defective_hypotheses(
    g: &MultiGraph,
    p: &VertexIntMap,
    q: &VertexIntMap,
    x: Ratio<i64>,
    k: usize,
) -> Result<(), String> {
    if k == 0 {
        return Err("k must be positive".into());
    }
    if x < Ratio::from_integer(0) || x >= Ratio::from_integer(k as i64) {
        return Err(format!("x = {x} is outside [0, {k})"));
    }
    let d = g.degrees();
    for v in g.vertices() {
        if 2 * p[v] > d[v] as i64 || 2 * q[v] < d[v] as i64 {
            return Err(format!("p({0}) <= d({0})/2 <= q({0}) fails", v + 1));
        }
        if q[v] - p[v] > k as i64 {
            return Err(format!("q({0}) - p({0}) exceeds {k}", v + 1));
        }
    }
    let trees = (3 * k + 2) * (k - 1) / 2;
    spanning_tree_packing(g, trees)
        .map(|_| ())
        .map_err(|r| format!("not {trees}-tree-connected: {r}"))
}

/// An orientation with `d⁺(v) ∈ {p(v), q(v)}` for `v ≠ z` and `d⁺(z)` in
/// the window of [`defect_window`]. Hypotheses are checked separately by
/// [`z_defective_hypotheses`].
pub fn z_defective_orientation(
    g: &MultiGraph,
    p: &VertexIntMap,
    q: &VertexIntMap,
    z: Vertex,
    x: Ratio<i64>,
    k: usize,
) -> Result<Search<Orientation>, OrientationError> {
    check_bounds(g, p, q)?;
    g.check_vertex(z)?;
    let d = g.degree(z)?;
    let window = defect_window(d, x, k as i64);
    if window.is_empty() {
        return Ok(Search::NotFound);
    }
    let mut lists = VertexListMap::two_point(p, q).lists().to_vec();
    lists[z] = window;
    list_orientation(g, &VertexListMap::new(lists), budget_for(g))
}

/// Every orientation whose out-degree vector satisfies `pred`. Loops have a
/// single direction, so only non-loop edges are branched on.
pub fn enumerate_orientations(
    g: &MultiGraph,
    mut pred: impl FnMut(&[usize]) -> bool,
) -> Result<Vec<Orientation>, OrientationError> {
    let real: Vec<usize> = (0..g.edge_count())
        .filter(|&i| !g.edges()[i].is_loop())
        .collect();
    if real.len() > ORIENTATION_CAP {
        return Err(OrientationError::TooLarge {
            what: "orientation enumeration",
            size: real.len(),
            cap: ORIENTATION_CAP,
        });
    }
    let mut forward = vec![true; g.edge_count()];
    let mut out = vec![0usize; g.vertex_count()];
    for e in g.edges() {
        out[e.u] += 1;
    }
    let mut found = Vec::new();
    if pred(&out) {
        found.push(Orientation::from_forward(g, forward.clone())?);
    }
    for step in 1u32..(1u32 << real.len()) {
        let i = real[step.trailing_zeros() as usize];
        let e = g.edges()[i];
        if forward[i] {
            out[e.u] -= 1;
            out[e.v] += 1;
        } else {
            out[e.v] -= 1;
            out[e.u] += 1;
        }
        forward[i] = !forward[i];
        if pred(&out) {
            found.push(Orientation::from_forward(g, forward.clone())?);
        }
    }
    Ok(found)
}

fn check_bounds(g: &MultiGraph, p: &VertexIntMap, q: &VertexIntMap) -> Result<(), OrientationError> {
    p.check(g)?;
    q.check(g)?;
    if let Some(v) = g.vertices().find(|&v| p[v] > q[v]) {
        return Err(OrientationError::InvalidBounds(format!(
            "p({0}) = {1} exceeds q({0}) = {2}",
            v + 1,
            p[v],
            q[v]
        )));
    }
    Ok(())
}

fn check_bipartite(g: &MultiGraph, parts: &Bipartition) -> Result<(), OrientationError> {
    parts.check(g)?;
    match g.edges().iter().find(|e| parts.in_x(e.u) == parts.in_x(e.v)) {
        Some(e) => Err(OrientationError::NotBipartite(format!(
            "edge {} joins {} and {} on the same side",
            e.id,
            e.u + 1,
            e.v + 1
        ))),
        None => Ok(()),
    }
}

/// Directs the edges of `f` from `X` to `Y` and all others from `Y` to `X`.
pub fn orientation_from_factor(
    g: &MultiGraph,
    parts: &Bipartition,
    f: &Factor,
) -> Result<Orientation, OrientationError> {
    check_bipartite(g, parts)?;
    g.check_factor(f)?;
    let forward = g
        .edges()
        .iter()
        .map(|e| f.contains(e.id) == parts.in_x(e.u))
        .collect();
    Orientation::from_forward(g, forward)
}

/// The edges directed from `X` to `Y`.
pub fn factor_from_orientation(
    g: &MultiGraph,
    parts: &Bipartition,
    o: &Orientation,
) -> Result<Factor, OrientationError> {
    check_bipartite(g, parts)?;
    if !o.verify(g) {
        return Err(OrientationError::InvalidBounds("orientation of another graph".into()));
    }
    Ok(Factor::from_sorted_unchecked(
        g.edges()
            .iter()
            .zip(o.arcs())
            .filter(|(_, &(t, _))| parts.in_x(t))
            .map(|(e, _)| e.id)
            .collect(),
    ))
}

/// Moves degree lists between the two sides of the correspondence: lists on
/// `X` are kept and each `i` on `Y` becomes `d(v) - i`. The map is an
/// involution, so it converts in either direction.
pub fn transform_lists(g: &MultiGraph, parts: &Bipartition, lists: &VertexListMap) -> VertexListMap {
    let d = g.degrees();
    VertexListMap::new(
        g.vertices()
            .map(|v| {
                if parts.in_x(v) {
                    lists[v].to_vec()
                } else {
                    lists[v].iter().map(|&i| d[v] as i64 - i).collect()
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c4() -> MultiGraph {
        MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn eulerian_examples() {
        let o = eulerian_orientation(&c4()).unwrap();
        assert_eq!(o.out_degrees(4), vec![1; 4]);
        let doubled = MultiGraph::from_pairs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(eulerian_orientation(&doubled).unwrap().out_degrees(2), vec![1, 1]);
        let lp = MultiGraph::from_pairs(1, &[(0, 0)]).unwrap();
        assert_eq!(eulerian_orientation(&lp).unwrap().out_degrees(1), vec![1]);
        let path = MultiGraph::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(eulerian_orientation(&path), Err(OrientationError::OddVertex(0)));
    }

    #[test]
    fn interval_examples() {
        let ones = VertexIntMap::constant(4, 1);
        let o = interval_orientation(&c4(), &ones, &ones).unwrap().unwrap();
        assert_eq!(o.out_degrees(4), vec![1; 4]);
        let path = MultiGraph::from_pairs(2, &[(0, 1)]).unwrap();
        let ones = VertexIntMap::constant(2, 1);
        assert!(interval_orientation(&path, &ones, &ones).unwrap().is_none());
    }

    #[test]
    fn interval_matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(0..=9);
            let pairs: Vec<_> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let g = MultiGraph::from_pairs(n, &pairs).unwrap();
            let d = g.degrees();
            let p = VertexIntMap::from_fn(n, |v| rng.gen_range(0..=d[v] as i64));
            let q = VertexIntMap::from_fn(n, |v| p[v] + rng.gen_range(0..=2));
            let ok = |x: &[usize]| (0..n).all(|v| p[v] <= x[v] as i64 && x[v] as i64 <= q[v]);
            let oracle = !enumerate_orientations(&g, ok).unwrap().is_empty();
            let got = interval_orientation(&g, &p, &q).unwrap();
            assert_eq!(got.is_some(), oracle);
            if let Some(o) = got {
                assert!(o.verify(&g));
                assert!(ok(&o.out_degrees(n)));
            }
        }
    }

    #[test]
    fn two_point_on_c4() {
        let g = c4();
        let p = VertexIntMap::constant(4, 0);
        let q = VertexIntMap::constant(4, 2);
        let o = two_point_orientation(&g, &p, &q, None).unwrap().found().unwrap();
        let d = o.out_degrees(4);
        assert!(d.iter().all(|&x| x == 0 || x == 2));
        assert_eq!(d.iter().sum::<usize>(), 4);
    }

    #[test]
    fn windows() {
        assert_eq!(defect_window(4, Ratio::from_integer(0), 1), vec![2]);
        assert_eq!(defect_window(4, Ratio::new(1, 2), 2), vec![2, 3]);
        assert_eq!(defect_window(3, Ratio::new(1, 2), 1), vec![1]);
    }

    #[test]
    fn bijection_round_trip() {
        let g = MultiGraph::from_pairs(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 2)]).unwrap();
        let parts = Bipartition::from_x(4, &[0, 1]).unwrap();
        let none = orientation_from_factor(&g, &parts, &Factor::empty()).unwrap();
        assert!(none.arcs().iter().all(|&(t, _)| !parts.in_x(t)));
        let all = orientation_from_factor(&g, &parts, &g.all_edges()).unwrap();
        assert!(all.arcs().iter().all(|&(t, _)| parts.in_x(t)));
        let f = Factor::from_ids([crate::graph::EdgeId(1), crate::graph::EdgeId(4)]);
        let o = orientation_from_factor(&g, &parts, &f).unwrap();
        assert_eq!(factor_from_orientation(&g, &parts, &o).unwrap(), f);
        let bad = MultiGraph::from_pairs(2, &[(0, 0)]).unwrap();
        let p2 = Bipartition::from_x(2, &[0]).unwrap();
        assert!(orientation_from_factor(&bad, &p2, &Factor::empty()).is_err());
    }
}

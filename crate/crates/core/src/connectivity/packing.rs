//! Edge-disjoint spanning tree packing by matroid-union augmentation.
//!
//! `m` forests are grown one edge at a time. An edge that closes a cycle in
//! every forest starts a breadth-first search over the exchange graph: edge
//! `x` points to each edge `y` on the cycle `x` would close in a forest `F_i`
//! (meaning "`x` enters `F_i`, `y` leaves"). Reaching an edge that joins two
//! components of some forest yields a shortest augmenting path, which keeps
//! every forest acyclic after the swaps.
//!
//! When the forests cannot reach `m(n - 1)` edges, the edges reachable from
//! the unused ones span every forest inside each component of the subgraph
//! they form. Those components give a partition `P` with fewer than
//! `m(|P| - 1)` crossing edges, which rules out `m` disjoint spanning trees.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::graph::{components_with, EdgeId, Factor, MultiGraph, UnionFind, Vertex};

/// `m` pairwise edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TreePacking {
    pub trees: Vec<Factor>,
}

impl TreePacking {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn union(&self) -> Factor {
        Factor::from_ids(self.trees.iter().flat_map(|t| t.ids().iter().copied()))
    }

    /// Re-checks every tree against `g`: spanning, acyclic, loop-free, and
    /// disjoint from the others.
    pub fn verify(&self, g: &MultiGraph) -> Result<(), String> {
        let n = g.vertex_count();
        let mut used = std::collections::HashSet::new();
        for (i, t) in self.trees.iter().enumerate() {
            if n > 0 && t.len() != n - 1 {
                return Err(format!("tree {i} has {} edges, expected {}", t.len(), n - 1));
            }
            let mut uf = UnionFind::new(n);
            for &id in t.ids() {
                let e = g.edge(id).ok_or_else(|| format!("tree {i}: unknown edge {id}"))?;
                if !uf.union(e.u, e.v) {
                    return Err(format!("tree {i} has a cycle through {id}"));
                }
                if !used.insert(id) {
                    return Err(format!("edge {id} appears in two trees"));
                }
            }
        }
        Ok(())
    }
}

/// Partition with too few crossing edges for `required / (parts - 1)` trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingRefusal {
    #[serde(serialize_with = "one_based_parts")]
    pub partition: Vec<Vec<Vertex>>,
    pub cross_edges: usize,
    /// `m (|P| - 1)`
    pub required: usize,
}

fn one_based_parts<S: serde::Serializer>(parts: &[Vec<Vertex>], s: S) -> Result<S::Ok, S::Error> {
    let shifted: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| p.iter().map(|v| v + 1).collect())
        .collect();
    shifted.serialize(s)
}

impl PackingRefusal {
    /// Recounts the crossing edges of the partition in `g`.
    pub fn verify(&self, g: &MultiGraph, m: usize) -> bool {
        let mut part = vec![usize::MAX; g.vertex_count()];
        for (i, p) in self.partition.iter().enumerate() {
            for &v in p {
                if v >= part.len() || part[v] != usize::MAX {
                    return false;
                }
                part[v] = i;
            }
        }
        if part.contains(&usize::MAX) {
            return false;
        }
        let cross = g.edges().iter().filter(|e| part[e.u] != part[e.v]).count();
        cross == self.cross_edges
            && self.required == m * (self.partition.len().saturating_sub(1))
            && cross < self.required
    }
}

impl fmt::Display for PackingRefusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "partition into {} parts has {} crossing edges, fewer than {}",
            self.partition.len(),
            self.cross_edges,
            self.required
        )
    }
}

impl std::error::Error for PackingRefusal {}

pub fn spanning_tree_packing(g: &MultiGraph, m: usize) -> Result<TreePacking, PackingRefusal> {
    let order: Vec<usize> = (0..g.edge_count()).collect();
    spanning_tree_packing_ordered(g, m, &order)
}

/// Same as [`spanning_tree_packing`], inserting edges in the given order of
/// edge positions. Different orders give different packings.
pub fn spanning_tree_packing_ordered(
    g: &MultiGraph,
    m: usize,
    order: &[usize],
) -> Result<TreePacking, PackingRefusal> {
    let n = g.vertex_count();
    if m == 0 || n <= 1 {
        return Ok(TreePacking {
            trees: vec![Factor::empty(); m],
        });
    }
    let mut packer = ForestPacker::new(g, m);
    let target = m * (n - 1);
    for &p in order {
        if packer.total == target {
            break;
        }
        if !packer.is_loop(p) && packer.owner[p].is_none() {
            // an edge that cannot be inserted stays unused
            let _ = packer.augment(&[p]);
        }
    }
    if packer.total == target {
        return Ok(packer.into_packing(g));
    }
    Err(packer.refusal(g))
}

pub fn is_tree_connected(g: &MultiGraph, m: usize) -> bool {
    spanning_tree_packing(g, m).is_ok()
}

/// Largest `m` such that `g` is `m`-tree-connected. `None` for graphs with at
/// most one vertex, which hold every packing.
pub fn tree_connectivity(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n <= 1 {
        return None;
    }
    let upper = g.edges().iter().filter(|e| !e.is_loop()).count() / (n - 1);
    let (mut lo, mut hi) = (0, upper);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if is_tree_connected(g, mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(lo)
}

struct ForestPacker {
    n: usize,
    m: usize,
    ends: Vec<(Vertex, Vertex)>,
    owner: Vec<Option<usize>>,
    /// forest -> vertex -> incident edge positions
    adj: Vec<Vec<Vec<usize>>>,
    total: usize,
}

impl ForestPacker {
    fn new(g: &MultiGraph, m: usize) -> Self {
        let n = g.vertex_count();
        ForestPacker {
            n,
            m,
            ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            owner: vec![None; g.edge_count()],
            adj: vec![vec![Vec::new(); n]; m],
            total: 0,
        }
    }

    fn is_loop(&self, p: usize) -> bool {
        self.ends[p].0 == self.ends[p].1
    }

    /// Edge positions on the path from `s` to `t` in forest `i`, or `None`
    /// when they lie in different trees.
    fn forest_path(&self, i: usize, s: Vertex, t: Vertex) -> Option<Vec<usize>> {
        let mut via = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &p in &self.adj[i][x] {
                let (a, b) = self.ends[p];
                let y = if a == x { b } else { a };
                if !seen[y] {
                    seen[y] = true;
                    via[y] = p;
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = t;
        while cur != s {
            let p = via[cur];
            path.push(p);
            let (a, b) = self.ends[p];
            cur = if a == cur { b } else { a };
        }
        Some(path)
    }

    fn insert(&mut self, p: usize, i: usize) {
        let (a, b) = self.ends[p];
        self.adj[i][a].push(p);
        self.adj[i][b].push(p);
        self.owner[p] = Some(i);
    }

    fn remove(&mut self, p: usize) {
        if let Some(i) = self.owner[p].take() {
            let (a, b) = self.ends[p];
            self.adj[i][a].retain(|&q| q != p);
            self.adj[i][b].retain(|&q| q != p);
        }
    }

    /// Breadth-first search for an augmenting path from any of `sources`.
    /// Returns the reached edges (as a mask) when no augmentation exists.
    fn augment(&mut self, sources: &[usize]) -> Result<(), Vec<bool>> {
        let mut seen = vec![false; self.ends.len()];
        let mut pred: Vec<Option<(usize, usize)>> = vec![None; self.ends.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            let (a, b) = self.ends[x];
            for i in 0..self.m {
                if self.owner[x] == Some(i) {
                    continue;
                }
                match self.forest_path(i, a, b) {
                    None => {
                        self.apply(x, i, &pred);
                        return Ok(());
                    }
                    Some(path) => {
                        for y in path {
                            if !seen[y] {
                                seen[y] = true;
                                pred[y] = Some((x, i));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        Err(seen)
    }

    fn apply(&mut self, last: usize, forest: usize, pred: &[Option<(usize, usize)>]) {
        let mut cur = last;
        let mut target = forest;
        loop {
            let was_free = self.owner[cur].is_none();
            self.remove(cur);
            self.insert(cur, target);
            match pred[cur] {
                Some((parent, vacated)) => {
                    cur = parent;
                    target = vacated;
                }
                None => {
                    debug_assert!(was_free);
                    break;
                }
            }
        }
        self.total += 1;
    }

    fn into_packing(self, g: &MultiGraph) -> TreePacking {
        let mut trees = vec![Vec::<EdgeId>::new(); self.m];
        for (p, o) in self.owner.iter().enumerate() {
            if let Some(i) = o {
                trees[*i].push(g.edges()[p].id);
            }
        }
        TreePacking {
            trees: trees.into_iter().map(Factor::from_ids).collect(),
        }
    }

    fn refusal(&mut self, g: &MultiGraph) -> PackingRefusal {
        let reached = loop {
            let free: Vec<usize> = (0..self.ends.len())
                .filter(|&p| !self.is_loop(p) && self.owner[p].is_none())
                .collect();
            if free.is_empty() {
                break vec![false; self.ends.len()];
            }
            match self.augment(&free) {
                Ok(()) => continue,
                Err(seen) => break seen,
            }
        };
        let partition = components_with(
            self.n,
            (0..self.ends.len())
                .filter(|&p| reached[p])
                .map(|p| self.ends[p]),
        );
        let mut part = vec![0; self.n];
        for (i, p) in partition.iter().enumerate() {
            for &v in p {
                part[v] = i;
            }
        }
        let cross_edges = g.edges().iter().filter(|e| part[e.u] != part[e.v]).count();
        let required = self.m * (partition.len() - 1);
        debug_assert!(cross_edges < required);
        PackingRefusal {
            partition,
            cross_edges,
            required,
        }
    }
}

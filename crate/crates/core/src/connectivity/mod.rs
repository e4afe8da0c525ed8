//! Connectivity-type hypotheses: edge connectivity, tree packings, bipartite
//! index, spanning Eulerian subgraphs and toughness.

mod bipartite_index;
mod eulerian;
mod packing;
mod toughness;

pub use bipartite_index::{
    bipartite_index, bipartite_index_bounds, odd_cycle_packing_bound, BiBounds, BipartiteIndex,
    OddCyclePacking, BI_EXACT_CAP,
};
pub use eulerian::spanning_eulerian_subgraph;
pub use packing::{
    is_tree_connected, spanning_tree_packing, spanning_tree_packing_ordered, tree_connectivity,
    PackingRefusal, TreePacking,
};
pub use toughness::{toughness, Toughness, ToughnessValue, TOUGHNESS_CAP};

use thiserror::Error;

use crate::graph::{GraphError, MultiGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("{what} is exhaustive only up to {cap} vertices, graph has {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("not {m}-tree-connected: {refusal}")]
    NotTreeConnected { m: usize, refusal: PackingRefusal },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Global edge connectivity by Stoer–Wagner on multiplicities.
///
/// Loops never cross a cut. Returns `None` (infinite) for graphs with fewer
/// than two vertices; a disconnected graph has connectivity 0.
pub fn edge_connectivity(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let mut w = vec![vec![0usize; n]; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    while active.len() > 1 {
        let mut weight = vec![0usize; n];
        let mut added = vec![false; n];
        let mut prev = active[0];
        for step in 0..active.len() {
            let sel = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unadded vertex remains");
            added[sel] = true;
            if step + 1 == active.len() {
                best = best.min(weight[sel]);
                #[allow(clippy::needless_range_loop)]
                for x in 0..n {
                    w[prev][x] += w[sel][x];
                    w[x][prev] = w[prev][x];
                }
                w[prev][prev] = 0;
                active.retain(|&v| v != sel);
            } else {
                for &x in &active {
                    if !added[x] {
                        weight[x] += w[sel][x];
                    }
                }
                prev = sel;
            }
        }
    }
    Some(best)
}

/// `edge_connectivity(g) >= k`, with the single-vertex graph counting as
/// infinitely connected.
pub fn is_edge_connected(g: &MultiGraph, k: usize) -> bool {
    edge_connectivity(g).is_none_or(|c| c >= k)
}

//! Random instance generation and verification campaigns.

mod campaign;
mod report;

pub use campaign::{replay_trial, trial_seed, verify_theorem, CampaignParams, TheoremId};
pub use report::{Report, TrialFailure, TrialOutcome, TrialRow};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bipartition, MultiGraph, Vertex, VertexIntMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("empty degree window at vertex {}: d = {degree}", .vertex + 1)]
    EmptyWindow { vertex: Vertex, degree: usize },
    #[error("invalid generator input: {0}")]
    Input(String),
}

/// Instance shape: the union of `trees` uniform random spanning trees plus
/// `extra_edges` random edges, optionally all across a balanced bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenSpec {
    pub n: usize,
    pub trees: usize,
    pub extra_edges: usize,
    pub bipartite: bool,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: MultiGraph,
    /// The bipartition every edge crosses, for bipartite specs.
    pub partition: Option<Bipartition>,
}

/// Union of uniform random spanning trees of `K_n`, or of `K_{a,b}` over a
/// random balanced bipartition, by the Aldous–Broder random walk.
pub fn gen_tree_connected(spec: &GenSpec) -> Result<Generated, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    gen_with(spec, &mut rng)
}

pub(crate) fn gen_with(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Generated, HarnessError> {
    let n = spec.n;
    if n < 2 && (spec.trees > 0 || spec.extra_edges > 0) {
        return Err(HarnessError::Input("at least two vertices are needed for edges".into()));
    }
    let partition = spec.bipartite.then(|| {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut mask = vec![false; n];
        for &v in &order[..n.div_ceil(2)] {
            mask[v] = true;
        }
        Bipartition::from_mask(mask)
    });
    let side = |v: usize| partition.as_ref().map(|p| p.in_x(v));
    let mut pairs = Vec::new();
    for _ in 0..spec.trees {
        // random walk: each first visit contributes the edge it arrived by
        let mut seen = vec![false; n];
        let mut cur = rng.gen_range(0..n);
        seen[cur] = true;
        let mut left = n - 1;
        while left > 0 {
            let next = loop {
                let w = rng.gen_range(0..n);
                if w != cur && (side(w).is_none() || side(w) != side(cur)) {
                    break w;
                }
            };
            if !seen[next] {
                seen[next] = true;
                left -= 1;
                pairs.push((cur, next));
            }
            cur = next;
        }
    }
    for _ in 0..spec.extra_edges {
        pairs.push(random_pair(rng, n, &side));
    }
    let graph = MultiGraph::from_pairs(n, &pairs).expect("endpoints in range");
    Ok(Generated { graph, partition })
}

fn random_pair(
    rng: &mut ChaCha8Rng,
    n: usize,
    side: &impl Fn(usize) -> Option<bool>,
) -> (Vertex, Vertex) {
    loop {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && (side(u).is_none() || side(u) != side(v)) {
            return (u, v);
        }
    }
}

/// Samples `g ≤ f` with `g + m0 <= d/2 <= f - m` and `f - g <= k` at every
/// vertex, uniformly per vertex: `g` first, then `f` given `g`.
pub fn gen_functions(
    g: &MultiGraph,
    k: usize,
    m: usize,
    m0: usize,
    seed: u64,
) -> Result<(VertexIntMap, VertexIntMap), HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    functions_with(g, k, m, m0, &mut rng)
}

pub(crate) fn functions_with(
    g: &MultiGraph,
    k: usize,
    m: usize,
    m0: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(VertexIntMap, VertexIntMap), HarnessError> {
    let (k, m, m0) = (k as i64, m as i64, m0 as i64);
    let n = g.vertex_count();
    let d = g.degrees();
    let mut lo = VertexIntMap::constant(n, 0);
    let mut hi = VertexIntMap::constant(n, 0);
    for v in 0..n {
        let (floor, ceil) = (d[v] as i64 / 2, (d[v] as i64 + 1) / 2);
        let g_min = (ceil + m - k).max(0);
        let g_max = floor - m0;
        if g_min > g_max {
            return Err(HarnessError::EmptyWindow {
                vertex: v,
                degree: d[v],
            });
        }
        lo[v] = rng.gen_range(g_min..=g_max);
        let f_min = lo[v].max(ceil + m);
        hi[v] = rng.gen_range(f_min..=lo[v] + k);
    }
    Ok((lo, hi))
}

/// Adds edges until every degree is even: odd vertices are paired directly,
/// or, in the bipartite case, across the parts when possible and through a
/// path via the other part otherwise.
pub fn evenize(g: &mut MultiGraph, partition: Option<&Bipartition>, rng: &mut impl Rng) {
    let mut odd = g.odd_vertices();
    odd.shuffle(rng);
    match partition {
        None => {
            for pair in odd.chunks(2) {
                g.add_edge(pair[0], pair[1]).expect("valid vertices");
            }
        }
        Some(p) => {
            let (mut xs, mut ys): (Vec<_>, Vec<_>) = odd.into_iter().partition(|&v| p.in_x(v));
            while let (Some(&x), Some(&y)) = (xs.last(), ys.last()) {
                g.add_edge(x, y).expect("valid vertices");
                xs.pop();
                ys.pop();
            }
            for (same, other_side) in [(xs, false), (ys, true)] {
                for pair in same.chunks(2) {
                    let mids: Vec<_> = g.vertices().filter(|&v| p.in_x(v) == other_side).collect();
                    let mid = *mids.choose(rng).expect("the other part is nonempty");
                    g.add_edge(pair[0], mid).expect("valid vertices");
                    g.add_edge(mid, pair[1]).expect("valid vertices");
                }
            }
        }
    }
    debug_assert!(g.is_eulerian());
}

/// Counter-based seed splitting (SplitMix64).
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::packing::spanning_tree_packing;
use super::ConnectivityError;
use crate::graph::{Bipartition, EdgeId, MultiGraph};

/// Largest vertex count for the exhaustive bipartite index.
pub const BI_EXACT_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteIndex {
    pub value: usize,
    pub witness: Bipartition,
}

/// Bracket on the bipartite index for graphs above [`BI_EXACT_CAP`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiBounds {
    /// Loops plus the largest odd-cycle packing certified on `witness`.
    pub lower: usize,
    /// `e_G(X) + e_G(Y)` of the best local-search bipartition.
    pub upper: usize,
    pub witness: Bipartition,
}

/// Edge-disjoint odd cycles, each listed as edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddCyclePacking {
    pub cycles: Vec<Vec<EdgeId>>,
}

/// Exact `bi(G)`: the minimum of `e_G(X) + e_G(Y)` over all bipartitions.
/// Loops always count. Walks the bipartitions in Gray-code order so each step
/// moves one vertex.
pub fn bipartite_index(g: &MultiGraph) -> Result<BipartiteIndex, ConnectivityError> {
    let n = g.vertex_count();
    if n > BI_EXACT_CAP {
        return Err(ConnectivityError::TooLarge {
            what: "bipartite index",
            n,
            cap: BI_EXACT_CAP,
        });
    }
    let loops = g.edges().iter().filter(|e| e.is_loop()).count();
    if n <= 1 {
        return Ok(BipartiteIndex {
            value: loops,
            witness: Bipartition::from_mask(vec![true; n]),
        });
    }
    let w = weights(g);
    // vertex n-1 stays in Y
    let mut side = vec![false; n];
    let mut cut: i64 = 0;
    let mut best_cut = 0;
    let mut best_side = side.clone();
    for step in 1u64..(1u64 << (n - 1)) {
        let j = step.trailing_zeros() as usize;
        let mut delta = 0i64;
        for u in 0..n {
            if u != j {
                if side[u] == side[j] {
                    delta += w[j][u];
                } else {
                    delta -= w[j][u];
                }
            }
        }
        cut += delta;
        side[j] = !side[j];
        if cut > best_cut {
            best_cut = cut;
            best_side.clone_from(&side);
        }
    }
    Ok(BipartiteIndex {
        value: g.edge_count() - best_cut as usize,
        witness: Bipartition::from_mask(best_side),
    })
}

/// Local-search upper bound and certified lower bound, for any size.
pub fn bipartite_index_bounds(g: &MultiGraph, seed: u64, restarts: usize) -> BiBounds {
    let n = g.vertex_count();
    let loops = g.edges().iter().filter(|e| e.is_loop()).count();
    let w = weights(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<bool>)> = None;
    for _ in 0..restarts.max(1) {
        let mut side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        loop {
            let mut improved = false;
            for v in 0..n {
                let gain: i64 = (0..n)
                    .filter(|&u| u != v)
                    .map(|u| if side[u] == side[v] { w[v][u] } else { -w[v][u] })
                    .sum();
                if gain > 0 {
                    side[v] = !side[v];
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        let p = Bipartition::from_mask(side);
        let intra = g.intra_part_count(&p);
        if best.as_ref().is_none_or(|(b, _)| intra < *b) {
            best = Some((intra, p.mask().to_vec()));
        }
    }
    let (upper, mask) = best.unwrap_or((loops, Vec::new()));
    let witness = Bipartition::from_mask(mask);
    let mut lower = loops;
    for k in (loops + 1)..=upper {
        if odd_cycle_packing_bound(g, &witness, k).is_some() {
            lower = k;
        } else {
            break;
        }
    }
    BiBounds {
        lower,
        upper,
        witness,
    }
}

/// Certifies `bi(G) >= k` from `k` spanning trees of `G[X, Y]` and `k`
/// intra-part edges: each tree plus one such edge closes an odd cycle.
/// `None` when either ingredient is missing.
pub fn odd_cycle_packing_bound(
    g: &MultiGraph,
    p: &Bipartition,
    k: usize,
) -> Option<OddCyclePacking> {
    if p.len() != g.vertex_count() {
        return None;
    }
    let intra: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| p.in_x(e.u) == p.in_x(e.v))
        .copied()
        .collect();
    if intra.len() < k {
        return None;
    }
    let cross = g
        .spanning_subgraph(&g.induced_bipartite_factor(p).ok()?)
        .ok()?;
    let packing = spanning_tree_packing(&cross, k).ok()?;
    let mut cycles = Vec::with_capacity(k);
    for (tree, extra) in packing.trees.iter().zip(&intra) {
        let mut cycle = if extra.is_loop() {
            Vec::new()
        } else {
            let t = g.spanning_subgraph(tree).ok()?;
            tree_path(&t, extra.u, extra.v)?
        };
        cycle.push(extra.id);
        debug_assert!(cycle.len() % 2 == 1);
        cycles.push(cycle);
    }
    Some(OddCyclePacking { cycles })
}

fn tree_path(t: &MultiGraph, s: usize, target: usize) -> Option<Vec<EdgeId>> {
    let inc = t.incidence();
    let mut via: Vec<Option<(usize, usize)>> = vec![None; t.vertex_count()];
    let mut seen = vec![false; t.vertex_count()];
    seen[s] = true;
    let mut stack = vec![s];
    while let Some(x) = stack.pop() {
        for &(pos, y) in &inc[x] {
            if !seen[y] {
                seen[y] = true;
                via[y] = Some((pos, x));
                stack.push(y);
            }
        }
    }
    if !seen[target] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = target;
    while let Some((pos, prev)) = via[cur] {
        path.push(t.edges()[pos].id);
        cur = prev;
    }
    Some(path)
}

fn weights(g: &MultiGraph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let mut w = vec![vec![0i64; n]; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    w
}

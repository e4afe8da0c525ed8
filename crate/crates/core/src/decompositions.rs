//! Splitting a graph into an Eulerian part and a tree-connected (bipartite)
//! part, with every postcondition re-checked before a result is returned.
//!
//! [`decompose_eulerian`] follows its constructive proof directly. The other
//! splits rely on existence results with no usable algorithm, so they run a
//! seeded randomized search over candidates shaped like those proofs and
//! report `Unknown` when the attempt budget runs out.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{
    bipartite_index, bipartite_index_bounds, edge_connectivity, spanning_tree_packing,
    spanning_tree_packing_ordered, PackingRefusal, TreePacking, BI_EXACT_CAP,
};
use crate::factors::find_interval_factor;
use crate::graph::{Bipartition, EdgeId, Factor, GraphError, MultiGraph, VertexIntMap};

/// Attempts made by the randomized splits before giving up.
pub const SPLIT_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("edge set is not a spanning tree: {0}")]
    NotATree(String),
    #[error("parity targets have an odd sum")]
    OddParity,
    #[error("not {m}-tree-connected: {refusal}")]
    NotTreeConnected { m: usize, refusal: PackingRefusal },
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("{what}: no valid candidate within {attempts} attempts")]
    Unknown { what: &'static str, attempts: usize },
    /// A constructed split failed its own re-check; always a bug.
    #[error("postcondition failed: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The unique subforest `F` of the spanning tree `tree` with
/// `d_F(v) ≡ targets(v) (mod 2)` for every vertex.
pub fn parity_forest(
    g: &MultiGraph,
    tree: &Factor,
    targets: &VertexIntMap,
) -> Result<Factor, DecompositionError> {
    targets.check(g)?;
    g.check_factor(tree)?;
    let n = g.vertex_count();
    if targets.sum().rem_euclid(2) == 1 {
        return Err(DecompositionError::OddParity);
    }
    if n == 0 {
        return Ok(Factor::empty());
    }
    if tree.len() != n - 1 {
        return Err(DecompositionError::NotATree(format!(
            "{} edges on {} vertices",
            tree.len(),
            n
        )));
    }
    let t = g.spanning_subgraph(tree)?;
    if let Some(e) = t.edges().iter().find(|e| e.is_loop()) {
        return Err(DecompositionError::NotATree(format!("loop {}", e.id)));
    }
    if !t.is_connected() {
        return Err(DecompositionError::NotATree("disconnected".into()));
    }
    let inc = t.incidence();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    order.push(0);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &(pos, w) in &inc[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((pos, v));
                order.push(w);
            }
        }
    }
    let mut want: Vec<bool> = (0..n).map(|v| targets[v].rem_euclid(2) == 1).collect();
    let mut chosen = Vec::new();
    for &v in order.iter().rev() {
        if let Some((pos, p)) = parent[v] {
            if want[v] {
                chosen.push(t.edges()[pos].id);
                want[v] = false;
                want[p] = !want[p];
            }
        }
    }
    debug_assert!(!want[0]);
    Ok(Factor::from_ids(chosen))
}

/// `G1` bipartite and `m1`-tree-connected, `G2` Eulerian and
/// `m2`-tree-connected, partitioning the edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianSplit {
    pub g1: Factor,
    pub g2: Factor,
    /// `m1` trees inside `G1`.
    pub g1_trees: TreePacking,
    /// `m2` trees inside `G2`.
    pub g2_trees: TreePacking,
}

/// Packs a tree `T` and packings `H1`, `H2` of sizes `m1`, `m2` in
/// `G[X, Y]`, then sets `G2 = H2 ∪ F ∪ (intra-part edges)` where `F ⊆ T`
/// fixes the parity of `H2` plus the intra-part edges, and `G1` = the rest.
pub fn decompose_eulerian(
    g: &MultiGraph,
    p: &Bipartition,
    m1: usize,
    m2: usize,
) -> Result<EulerianSplit, DecompositionError> {
    let cross = g.induced_bipartite_factor(p)?;
    let cross_graph = g.spanning_subgraph(&cross)?;
    let need = m1 + m2 + 1;
    let packing = spanning_tree_packing(&cross_graph, need)
        .map_err(|refusal| DecompositionError::NotTreeConnected { m: need, refusal })?;
    let tree = &packing.trees[0];
    let h1 = TreePacking {
        trees: packing.trees[1..=m1].to_vec(),
    };
    let h2 = TreePacking {
        trees: packing.trees[m1 + 1..].to_vec(),
    };
    let intra = g.complement(&cross);
    let base = h2.union().union(&intra);
    let d = g.factor_degrees(&base)?;
    let targets = VertexIntMap::from_fn(g.vertex_count(), |v| d[v] as i64);
    let fix = parity_forest(g, tree, &targets)?;
    let g2 = base.union(&fix);
    let g1 = g.complement(&g2);
    let split = EulerianSplit {
        g1,
        g2,
        g1_trees: h1,
        g2_trees: h2,
    };
    verify_eulerian_split(g, p, m1, m2, &split).map_err(DecompositionError::Postcondition)?;
    Ok(split)
}

/// Independent re-check of every [`decompose_eulerian`] postcondition.
pub fn verify_eulerian_split(
    g: &MultiGraph,
    p: &Bipartition,
    m1: usize,
    m2: usize,
    s: &EulerianSplit,
) -> Result<(), String> {
    check_partition(g, &[&s.g1, &s.g2])?;
    let g1 = g.spanning_subgraph(&s.g1).map_err(|e| e.to_string())?;
    let g2 = g.spanning_subgraph(&s.g2).map_err(|e| e.to_string())?;
    if !g1.is_bipartite_with(p) {
        return Err("G1 has an edge inside a part".into());
    }
    if !g2.is_eulerian() {
        return Err("G2 has an odd vertex".into());
    }
    if spanning_tree_packing(&g1, m1).is_err() {
        return Err(format!("G1 is not {m1}-tree-connected"));
    }
    if spanning_tree_packing(&g2, m2).is_err() {
        return Err(format!("G2 is not {m2}-tree-connected"));
    }
    Ok(())
}

/// `G1` Eulerian and `2 m1`-edge-connected; `G2[X, Y]` `m2`-tree-connected
/// and `G2` keeping at least `min(k0, bi(G))` intra-part edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeepBiSplit {
    pub g1: Factor,
    pub g2: Factor,
    pub partition: Bipartition,
    /// `m2` trees of `G2[X, Y]`.
    pub g2_trees: TreePacking,
    /// `min(k0, bi(G))` as used for the check.
    pub kept_required: usize,
}

/// The algorithm chooses the bipartition: a minimizer of `e(X) + e(Y)`
/// (exact up to 20 vertices, local search above), so that the intra-part
/// edges it reserves for `G2` are as few as `bi(G)` allows.
pub fn decompose_keep_bi(
    g: &MultiGraph,
    m1: usize,
    m2: usize,
    k0: usize,
    seed: u64,
) -> Result<KeepBiSplit, DecompositionError> {
    if k0 > m2 {
        return Err(DecompositionError::Hypothesis(format!("k0 = {k0} exceeds m2 = {m2}")));
    }
    let need = 2 * m1 + 2 * m2;
    spanning_tree_packing(g, need)
        .map_err(|refusal| DecompositionError::NotTreeConnected { m: need, refusal })?;
    let n = g.vertex_count();
    let (bi, witness) = if n <= BI_EXACT_CAP {
        let b = bipartite_index(g).expect("below cap");
        (b.value, b.witness)
    } else {
        let b = bipartite_index_bounds(g, seed, 16);
        (b.upper, b.witness)
    };
    let required = k0.min(bi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..SPLIT_ATTEMPTS {
        let p = if attempt % 2 == 0 {
            witness.clone()
        } else {
            witness.swapped()
        };
        if let Some(split) = keep_bi_candidate(g, &p, m1, m2, required, &mut rng) {
            return Ok(split);
        }
    }
    Err(DecompositionError::Unknown {
        what: "decompose_keep_bi",
        attempts: SPLIT_ATTEMPTS,
    })
}

fn keep_bi_candidate(
    g: &MultiGraph,
    p: &Bipartition,
    m1: usize,
    m2: usize,
    required: usize,
    rng: &mut ChaCha8Rng,
) -> Option<KeepBiSplit> {
    let cross = g.induced_bipartite_factor(p).ok()?;
    let mut intra: Vec<EdgeId> = g.complement(&cross).ids().to_vec();
    intra.shuffle(rng);
    let reserved = Factor::from_ids(intra.into_iter().take(required));
    let a = pack_within(g, &cross, m2, rng)?;
    let rest = g.complement(&a.union().union(&reserved));
    let g1 = if m1 == 0 {
        Factor::empty()
    } else {
        let b = pack_within(g, &rest, 2 * m1, rng)?;
        let others = Factor::from_ids(b.trees[1..].iter().flat_map(|t| t.ids().iter().copied()));
        let d = g.factor_degrees(&others).ok()?;
        let targets = VertexIntMap::from_fn(g.vertex_count(), |v| d[v] as i64);
        others.union(&parity_forest(g, &b.trees[0], &targets).ok()?)
    };
    let g2 = g.complement(&g1);
    let split = KeepBiSplit {
        g1,
        g2,
        partition: p.clone(),
        g2_trees: a,
        kept_required: required,
    };
    verify_keep_bi(g, m1, m2, &split).ok()?;
    Some(split)
}

pub fn verify_keep_bi(g: &MultiGraph, m1: usize, m2: usize, s: &KeepBiSplit) -> Result<(), String> {
    check_partition(g, &[&s.g1, &s.g2])?;
    let g1 = g.spanning_subgraph(&s.g1).map_err(|e| e.to_string())?;
    if !g1.is_eulerian() {
        return Err("G1 has an odd vertex".into());
    }
    if edge_connectivity(&g1).is_some_and(|c| c < 2 * m1) {
        return Err(format!("G1 is not {}-edge-connected", 2 * m1));
    }
    let g2 = g.spanning_subgraph(&s.g2).map_err(|e| e.to_string())?;
    let cross = g2
        .spanning_subgraph(&g2.induced_bipartite_factor(&s.partition).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if spanning_tree_packing(&cross, m2).is_err() {
        return Err(format!("G2[X, Y] is not {m2}-tree-connected"));
    }
    let kept = g2.intra_part_count(&s.partition);
    if kept < s.kept_required {
        return Err(format!("G2 keeps {kept} intra-part edges, needs {}", s.kept_required));
    }
    Ok(())
}

/// `H` with `m` trees, its complement with `m0` trees, and degrees within
/// one half of `d_G` up to the slack `m0` below and `m` above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementSplit {
    pub h: Factor,
    pub h_trees: TreePacking,
    pub complement_trees: TreePacking,
}

/// Packs `m + m0` trees, gives the first `m` to `H` and the next `m0` to the
/// complement, and distributes the remaining edges with an interval factor
/// so that `⌊d/2⌋ - m0 <= d_H <= ⌈d/2⌉ + m`. Packings are reshuffled
/// between attempts.
pub fn split_tree_connected_complement(
    g: &MultiGraph,
    m: usize,
    m0: usize,
    seed: u64,
) -> Result<ComplementSplit, DecompositionError> {
    if m + m0 == 0 {
        return Err(DecompositionError::Hypothesis("m + m0 must be positive".into()));
    }
    let need = 2 * m + 2 * m0;
    if let Some(c) = edge_connectivity(g).filter(|&c| c < need) {
        return Err(DecompositionError::Hypothesis(format!(
            "edge connectivity {c} is below {need}"
        )));
    }
    let n = g.vertex_count();
    let d = g.degrees();
    let all = g.all_edges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SPLIT_ATTEMPTS {
        let Some(packing) = pack_within(g, &all, m + m0, &mut rng) else {
            continue;
        };
        let a = TreePacking {
            trees: packing.trees[..m].to_vec(),
        };
        let b = TreePacking {
            trees: packing.trees[m..].to_vec(),
        };
        let (fa, fb) = (a.union(), b.union());
        let rest = g.complement(&fa.union(&fb));
        let rest_graph = g.spanning_subgraph(&rest)?;
        let da = g.factor_degrees(&fa)?;
        let lo = VertexIntMap::from_fn(n, |v| (d[v] / 2) as i64 - m0 as i64 - da[v] as i64);
        let hi = VertexIntMap::from_fn(n, |v| d[v].div_ceil(2) as i64 + m as i64 - da[v] as i64);
        if (0..n).any(|v| lo[v] > hi[v]) {
            continue;
        }
        let Ok(Some(s)) = find_interval_factor(&rest_graph, &lo, &hi) else {
            continue;
        };
        let split = ComplementSplit {
            h: fa.union(&s),
            h_trees: a,
            complement_trees: b,
        };
        if verify_complement_split(g, m, m0, &split).is_ok() {
            return Ok(split);
        }
    }
    Err(DecompositionError::Unknown {
        what: "split_tree_connected_complement",
        attempts: SPLIT_ATTEMPTS,
    })
}

pub fn verify_complement_split(
    g: &MultiGraph,
    m: usize,
    m0: usize,
    s: &ComplementSplit,
) -> Result<(), String> {
    g.check_factor(&s.h).map_err(|e| e.to_string())?;
    let d = g.degrees();
    let dh = g.factor_degrees(&s.h).map_err(|e| e.to_string())?;
    for v in g.vertices() {
        let lo = (d[v] / 2) as i64 - m0 as i64;
        let hi = d[v].div_ceil(2) as i64 + m as i64;
        if (dh[v] as i64) < lo || dh[v] as i64 > hi {
            return Err(format!("d_H({}) = {} outside [{lo}, {hi}]", v + 1, dh[v]));
        }
    }
    let h = g.spanning_subgraph(&s.h).map_err(|e| e.to_string())?;
    let rest = g.spanning_subgraph(&g.complement(&s.h)).map_err(|e| e.to_string())?;
    if spanning_tree_packing(&h, m).is_err() {
        return Err(format!("H is not {m}-tree-connected"));
    }
    if spanning_tree_packing(&rest, m0).is_err() {
        return Err(format!("complement is not {m0}-tree-connected"));
    }
    Ok(())
}

/// A matching `M` of `k - 1` edges outside `F` with `bi(F ∪ M) >= k - 1`.
/// Intra-part edges of an optimal bipartition of `F` are tried greedily
/// first, then all matchings of that size while the count stays small.
pub fn matching_raising_bi(
    g: &MultiGraph,
    f: &Factor,
    k: usize,
) -> Result<Factor, DecompositionError> {
    g.check_factor(f)?;
    if k <= 1 {
        return Ok(Factor::empty());
    }
    let need = k - 1;
    let fg = g.spanning_subgraph(f)?;
    let trees = 2 * k - 2;
    spanning_tree_packing(&fg, trees)
        .map_err(|refusal| DecompositionError::NotTreeConnected { m: trees, refusal })?;
    if g.vertex_count() > BI_EXACT_CAP {
        return Err(DecompositionError::Hypothesis(format!(
            "bipartite index check needs at most {BI_EXACT_CAP} vertices"
        )));
    }
    let outside: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| !e.is_loop() && !f.contains(e.id))
        .copied()
        .collect();
    let raises = |m: &[EdgeId]| -> bool {
        let u = f.union(&Factor::from_ids(m.iter().copied()));
        let sub = g.spanning_subgraph(&u).expect("ids from g");
        bipartite_index(&sub).expect("below cap").value >= need
    };
    let witness = bipartite_index(&fg).expect("below cap").witness;
    let mut used = vec![false; g.vertex_count()];
    let mut greedy = Vec::new();
    for e in outside.iter().filter(|e| witness.in_x(e.u) == witness.in_x(e.v)) {
        if greedy.len() < need && !used[e.u] && !used[e.v] {
            used[e.u] = true;
            used[e.v] = true;
            greedy.push(e.id);
        }
    }
    if greedy.len() == need && raises(&greedy) {
        return Ok(Factor::from_ids(greedy));
    }
    const MATCHING_CANDIDATES: usize = 200_000;
    let mut checked = 0usize;
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((start, chosen)) = stack.pop() {
        if chosen.len() == need {
            checked += 1;
            let ids: Vec<EdgeId> = chosen.iter().map(|&i| outside[i].id).collect();
            if raises(&ids) {
                return Ok(Factor::from_ids(ids));
            }
            if checked >= MATCHING_CANDIDATES {
                return Err(DecompositionError::Unknown {
                    what: "matching_raising_bi",
                    attempts: checked,
                });
            }
            continue;
        }
        for i in (start..outside.len()).rev() {
            let e = outside[i];
            if chosen
                .iter()
                .all(|&j| ![outside[j].u, outside[j].v].iter().any(|&x| x == e.u || x == e.v))
            {
                let mut next = chosen.clone();
                next.push(i);
                stack.push((i + 1, next));
            }
        }
    }
    Err(DecompositionError::Unknown {
        what: "matching_raising_bi",
        attempts: checked,
    })
}

/// `m` edge-disjoint spanning trees using only edges of `within`, with a
/// random insertion order.
fn pack_within(
    g: &MultiGraph,
    within: &Factor,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Option<TreePacking> {
    let sub = g.spanning_subgraph(within).ok()?;
    let mut order: Vec<usize> = (0..sub.edge_count()).collect();
    order.shuffle(rng);
    spanning_tree_packing_ordered(&sub, m, &order).ok()
}

fn check_partition(g: &MultiGraph, parts: &[&Factor]) -> Result<(), String> {
    let mut total = 0;
    for (i, a) in parts.iter().enumerate() {
        g.check_factor(a).map_err(|e| e.to_string())?;
        total += a.len();
        for b in &parts[i + 1..] {
            if !a.is_disjoint(b) {
                return Err("parts share an edge".into());
            }
        }
    }
    if total != g.edge_count() {
        return Err(format!("parts cover {total} of {} edges", g.edge_count()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_factors;
    use rand::Rng;

    fn random_tree(rng: &mut impl Rng, n: usize) -> MultiGraph {
        let pairs: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn path_and_even_targets() {
        let path = MultiGraph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let all = path.all_edges();
        let f = parity_forest(&path, &all, &VertexIntMap::new(vec![1, 0, 1])).unwrap();
        assert_eq!(f, all);
        let f = parity_forest(&path, &all, &VertexIntMap::new(vec![2, 0, 4])).unwrap();
        assert!(f.is_empty());
        assert_eq!(
            parity_forest(&path, &all, &VertexIntMap::new(vec![1, 0, 0])),
            Err(DecompositionError::OddParity)
        );
    }

    #[test]
    fn parity_forest_unique_against_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(1..=9);
            let t = random_tree(&mut rng, n);
            let mut targets: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..4)).collect();
            if targets.iter().sum::<i64>().rem_euclid(2) == 1 {
                targets[0] += 1;
            }
            let want: Vec<bool> = targets.iter().map(|x| x.rem_euclid(2) == 1).collect();
            let all = enumerate_factors(&t, |d| d.iter().zip(&want).all(|(&x, &w)| (x % 2 == 1) == w))
                .unwrap();
            assert_eq!(all.len(), 1);
            let f = parity_forest(&t, &t.all_edges(), &VertexIntMap::new(targets)).unwrap();
            assert_eq!(f, all[0]);
        }
    }

    fn doubled_k33_plus(extra: &[(usize, usize)]) -> (MultiGraph, Bipartition) {
        let mut pairs = Vec::new();
        for _ in 0..3 {
            for x in 0..3 {
                for y in 3..6 {
                    pairs.push((x, y));
                }
            }
        }
        pairs.extend_from_slice(extra);
        let g = MultiGraph::from_pairs(6, &pairs).unwrap();
        (g, Bipartition::from_x(6, &[0, 1, 2]).unwrap())
    }

    #[test]
    fn eulerian_split_sends_intra_edges_to_g2() {
        let (g, p) = doubled_k33_plus(&[(0, 1), (3, 3)]);
        let s = decompose_eulerian(&g, &p, 2, 2).unwrap();
        let g2 = g.spanning_subgraph(&s.g2).unwrap();
        assert_eq!(g2.intra_part_count(&p), 2);
        assert!(verify_eulerian_split(&g, &p, 2, 2, &s).is_ok());
    }

    #[test]
    fn eulerian_split_refuses() {
        let (g, p) = doubled_k33_plus(&[]);
        // 27 cross edges hold at most 5 trees on 6 vertices
        assert!(matches!(
            decompose_eulerian(&g, &p, 3, 2),
            Err(DecompositionError::NotTreeConnected { m: 6, .. })
        ));
    }

    #[test]
    fn keep_bi_and_complement() {
        let (g, _) = doubled_k33_plus(&[(0, 1), (4, 5)]);
        let s = decompose_keep_bi(&g, 1, 1, 1, 3).unwrap();
        assert!(verify_keep_bi(&g, 1, 1, &s).is_ok());
        assert_eq!(s.kept_required, 1);

        let c = split_tree_connected_complement(&g, 1, 1, 4).unwrap();
        assert!(verify_complement_split(&g, 1, 1, &c).is_ok());
    }

    #[test]
    fn complement_of_doubled_tree() {
        let g = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (1, 3), (0, 1), (1, 2), (1, 3)]).unwrap();
        let c = split_tree_connected_complement(&g, 1, 0, 0).unwrap();
        assert_eq!(c.h.len(), 3);
    }

    #[test]
    fn matching_for_k2() {
        let (g, p) = doubled_k33_plus(&[(0, 1)]);
        let f = g.induced_bipartite_factor(&p).unwrap();
        let m = matching_raising_bi(&g, &f, 2).unwrap();
        assert_eq!(m.len(), 1);
        assert!(matching_raising_bi(&g, &f, 1).unwrap().is_empty());
    }
}

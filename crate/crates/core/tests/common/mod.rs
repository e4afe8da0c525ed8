//! Brute-force oracles written independently of the library.

#![allow(dead_code)]

use factorkit::graph::{Bipartition, MultiGraph};
use rand::Rng;

/// Degrees of the edge subset `mask` (bit `i` = edge position `i`); loops count 2.
pub fn mask_degrees(g: &MultiGraph, mask: u64) -> Vec<i64> {
    let mut d = vec![0; g.vertex_count()];
    for (i, e) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            d[e.u] += 1;
            d[e.v] += 1;
        }
    }
    d
}

/// First edge subset whose degree vector satisfies `pred`.
pub fn brute_factor(g: &MultiGraph, pred: impl Fn(&[i64]) -> bool) -> Option<u64> {
    let m = g.edge_count();
    assert!(m <= 24, "brute force over {m} edges");
    (0..1u64 << m).find(|&mask| pred(&mask_degrees(g, mask)))
}

/// Whether `edges` (positions) connect all vertices.
pub fn spans(g: &MultiGraph, edges: impl IntoIterator<Item = usize>) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = n;
    for i in edges {
        let e = g.edges()[i];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps <= 1
}

/// `min over bipartitions of e(X) + e(Y)`, via maximum cut; loops never cut.
pub fn brute_bi(g: &MultiGraph) -> usize {
    let n = g.vertex_count();
    let mut best_cut = 0;
    for side in 0..1u32 << n {
        let cut = g
            .edges()
            .iter()
            .filter(|e| (side >> e.u & 1) != (side >> e.v & 1))
            .count();
        best_cut = best_cut.max(cut);
    }
    g.edge_count() - best_cut
}

/// Minimum number of edges crossing a nonempty proper vertex subset.
pub fn brute_edge_connectivity(g: &MultiGraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    (1..(1u32 << n) - 1)
        .map(|s| {
            g.edges()
                .iter()
                .filter(|e| (s >> e.u & 1) != (s >> e.v & 1))
                .count()
        })
        .min()
}

/// Whether some orientation has out-degrees within `[p, q]`. Loops add one
/// to the out-degree of their vertex.
pub fn brute_orientation(g: &MultiGraph, p: &[i64], q: &[i64]) -> bool {
    let n = g.vertex_count();
    let mut base = vec![0i64; n];
    let mut real = Vec::new();
    for e in g.edges() {
        if e.u == e.v {
            base[e.u] += 1;
        } else {
            real.push((e.u, e.v));
        }
    }
    (0..1u64 << real.len()).any(|mask| {
        let mut out = base.clone();
        for (i, &(u, v)) in real.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out[u] += 1;
            } else {
                out[v] += 1;
            }
        }
        (0..n).all(|v| p[v] <= out[v] && out[v] <= q[v])
    })
}

/// A random multigraph on `n` vertices with `m` edges, loops allowed.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for _ in 0..m {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        g.add_edge(u, v).unwrap();
    }
    g
}

/// A random connected multigraph: a random tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).unwrap();
    }
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        g.add_edge(u, v).unwrap();
    }
    g
}

/// A random bipartite multigraph with `X` = even vertices.
pub fn random_bipartite(rng: &mut impl Rng, n: usize, m: usize) -> (MultiGraph, Bipartition) {
    let p = Bipartition::from_mask((0..n).map(|v| v % 2 == 0).collect());
    let (xs, ys) = (p.x(), p.y());
    let mut g = MultiGraph::new(n);
    for _ in 0..m {
        let x = xs[rng.gen_range(0..xs.len())];
        let y = ys[rng.gen_range(0..ys.len())];
        g.add_edge(x, y).unwrap();
    }
    (g, p)
}

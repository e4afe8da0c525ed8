use super::{check_pair, FactorError};
use crate::graph::{Factor, MultiGraph, Vertex, VertexIntMap, VertexListMap};
use crate::matching::perfect_matching;
use crate::search::{list_search, Search};

use super::ENUMERATION_CAP;

/// Oracle-call budget for list searches on graphs too large to search
/// without one.
pub const TWO_POINT_BUDGET: usize = 4096;

/// An `f`-factor, via the vertex-splitting gadget and a perfect matching.
pub fn find_f_factor(g: &MultiGraph, f: &VertexIntMap) -> Result<Option<Factor>, FactorError> {
    f.check(g)?;
    let pairs: Vec<(Vertex, Vertex)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mask = f_factor_positions(g.vertex_count(), &pairs, f.values());
    Ok(mask.map(|mask| positions_to_factor(g, &mask)))
}

/// A factor with `lo(v) <= d_F(v) <= hi(v)`.
pub fn find_interval_factor(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> Result<Option<Factor>, FactorError> {
    check_pair(g, lo, hi)?;
    let found = interval_positions(g, lo.values(), hi.values());
    let factor = found.map(|mask| positions_to_factor(g, &mask));
    if let Some(f) = &factor {
        let d = g.factor_degrees(f)?;
        debug_assert!(g.vertices().all(|v| lo[v] <= d[v] as i64 && d[v] as i64 <= hi[v]));
    }
    Ok(factor)
}

/// A factor whose degree at every vertex lies in its list. Complete when
/// `budget` is `None`.
pub fn find_list_factor(
    g: &MultiGraph,
    lists: &VertexListMap,
    budget: Option<usize>,
) -> Result<Search<Factor>, FactorError> {
    if lists.len() != g.vertex_count() {
        return Err(crate::graph::GraphError::MapSize {
            expected: g.vertex_count(),
            got: lists.len(),
        }
        .into());
    }
    let degrees = g.degrees();
    let clipped: Vec<Vec<i64>> = lists
        .lists()
        .iter()
        .zip(&degrees)
        .map(|(l, &d)| l.iter().copied().filter(|&x| x >= 0 && x <= d as i64).collect())
        .collect();
    if clipped.iter().any(|l: &Vec<i64>| l.is_empty()) {
        return Ok(Search::NotFound);
    }
    let result = list_search(&clipped, budget, |lo, hi| {
        let mask = interval_positions(g, lo, hi)?;
        let f = positions_to_factor(g, &mask);
        let d = g
            .factor_degrees(&f)
            .expect("factor drawn from the graph")
            .into_iter()
            .map(|x| x as i64)
            .collect();
        Some((f, d))
    });
    if let Search::Found(f) = &result {
        assert!(super::satisfies_lists(g, f, lists), "list factor failed verification");
    }
    Ok(result)
}

/// A factor with `d_F(v) ∈ {g(v), f(v)}` for every vertex, and
/// `d_F(z) = pin` when a pin `(z, pin)` is given. Searches exhaustively on
/// graphs with at most 20 edges; larger inputs run under a budget and may
/// return `Unknown`.
pub fn find_two_point_factor(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    pin: Option<(Vertex, i64)>,
) -> Result<Search<Factor>, FactorError> {
    check_pair(g, lo, hi)?;
    let mut lists = VertexListMap::two_point(lo, hi).lists().to_vec();
    if let Some((z, value)) = pin {
        g.check_vertex(z)?;
        if value != lo[z] && value != hi[z] {
            return Err(FactorError::InvalidFunctions(format!(
                "pinned value {value} at vertex {} is neither g nor f",
                z + 1
            )));
        }
        lists[z] = vec![value];
    }
    let budget = (g.edge_count() > ENUMERATION_CAP).then_some(TWO_POINT_BUDGET);
    find_list_factor(g, &VertexListMap::new(lists), budget)
}

fn positions_to_factor(g: &MultiGraph, mask: &[bool]) -> Factor {
    Factor::from_sorted_unchecked(
        g.edges()
            .iter()
            .zip(mask)
            .filter(|(_, &b)| b)
            .map(|(e, _)| e.id)
            .collect(),
    )
}

/// Interval factor by adding a hub joined to each vertex by `hi - lo` slack
/// edges and carrying enough loops to absorb the remaining parity.
fn interval_positions(g: &MultiGraph, lo: &[i64], hi: &[i64]) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let degrees = g.degrees();
    let mut a = vec![0i64; n];
    let mut b = vec![0i64; n];
    for v in 0..n {
        a[v] = lo[v].max(0);
        b[v] = hi[v].min(degrees[v] as i64);
        if a[v] > b[v] {
            return None;
        }
    }
    let mut pairs: Vec<(Vertex, Vertex)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let m = pairs.len();
    let slack: i64 = (0..n).map(|v| b[v] - a[v]).sum();
    if slack == 0 {
        return f_factor_positions(n, &pairs, &b);
    }
    let sum_b: i64 = b.iter().sum();
    let hub = n;
    let hub_target = if (slack - sum_b).rem_euclid(2) == 0 {
        slack
    } else {
        slack - 1
    };
    for v in 0..n {
        for _ in 0..(b[v] - a[v]) {
            pairs.push((v, hub));
        }
    }
    for _ in 0..(slack + 1) / 2 {
        pairs.push((hub, hub));
    }
    let mut target = b;
    target.push(hub_target);
    let mut mask = f_factor_positions(n + 1, &pairs, &target)?;
    mask.truncate(m);
    Some(mask)
}

/// Vertex-splitting gadget: every vertex `v` becomes `d(v)` outer copies (one per
/// incidence) and `d(v) - f(v)` inner copies joined to all outer copies;
/// every edge becomes a path `outer - a - b - outer`. Perfect matchings
/// correspond to `f`-factors, with edge `e` chosen iff `a_e` matches outward.
fn f_factor_positions(n: usize, pairs: &[(Vertex, Vertex)], f: &[i64]) -> Option<Vec<bool>> {
    let mut degree = vec![0i64; n];
    for &(u, v) in pairs {
        degree[u] += 1;
        degree[v] += 1;
    }
    if (0..n).any(|v| f[v] < 0 || f[v] > degree[v]) || f.iter().sum::<i64>() % 2 != 0 {
        return None;
    }
    let mut outer: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next = 0usize;
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut fresh = |adj: &mut Vec<Vec<usize>>| {
        adj.push(Vec::new());
        next += 1;
        next - 1
    };
    let mut edge_nodes = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        let ou = fresh(&mut adj);
        let ov = fresh(&mut adj);
        let a = fresh(&mut adj);
        let b = fresh(&mut adj);
        outer[u].push(ou);
        outer[v].push(ov);
        for (x, y) in [(ou, a), (a, b), (b, ov)] {
            adj[x].push(y);
            adj[y].push(x);
        }
        edge_nodes.push((a, ou));
    }
    for v in 0..n {
        for _ in 0..(degree[v] - f[v]) {
            let inner = fresh(&mut adj);
            for &o in &outer[v] {
                adj[inner].push(o);
                adj[o].push(inner);
            }
        }
    }
    let mate = perfect_matching(&adj)?;
    Some(edge_nodes.iter().map(|&(a, ou)| mate[a] == ou).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_factors;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> MultiGraph {
        let pairs: Vec<_> = (0..m)
            .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
            .collect();
        MultiGraph::from_pairs(n, &pairs).unwrap()
    }

    #[test]
    fn triangle_and_square() {
        let t = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(find_f_factor(&t, &VertexIntMap::constant(3, 1)).unwrap(), None);
        let f = find_f_factor(&t, &VertexIntMap::constant(3, 2)).unwrap().unwrap();
        assert_eq!(f.len(), 3);
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = find_f_factor(&c4, &VertexIntMap::constant(4, 1)).unwrap().unwrap();
        assert_eq!(c4.factor_degrees(&f).unwrap(), vec![1; 4]);
    }

    #[test]
    fn loops_count_twice() {
        let g = MultiGraph::from_pairs(1, &[(0, 0), (0, 0)]).unwrap();
        let f = find_f_factor(&g, &VertexIntMap::new(vec![2])).unwrap().unwrap();
        assert_eq!(f.len(), 1);
        let f = find_interval_factor(&g, &VertexIntMap::new(vec![1]), &VertexIntMap::new(vec![3]))
            .unwrap()
            .unwrap();
        assert_eq!(g.factor_degrees(&f).unwrap(), vec![2]);
    }

    #[test]
    fn f_factor_matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(0..=9);
            let g = random_graph(&mut rng, n, m);
            let d = g.degrees();
            let f = VertexIntMap::from_fn(n, |v| rng.gen_range(0..=d[v] as i64));
            let want = f.values().to_vec();
            let oracle = !enumerate_factors(&g, |x| x.iter().zip(&want).all(|(&a, &b)| a as i64 == b))
                .unwrap()
                .is_empty();
            let got = find_f_factor(&g, &f).unwrap();
            assert_eq!(got.is_some(), oracle);
            if let Some(fac) = got {
                let deg = g.factor_degrees(&fac).unwrap();
                assert!(deg.iter().zip(&want).all(|(&a, &b)| a as i64 == b));
            }
        }
    }

    #[test]
    fn interval_matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
        for _ in 0..150 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(0..=9);
            let g = random_graph(&mut rng, n, m);
            let d = g.degrees();
            let lo = VertexIntMap::from_fn(n, |v| rng.gen_range(-1..=d[v] as i64));
            let hi = VertexIntMap::from_fn(n, |v| lo[v] + rng.gen_range(0..=2));
            let ok = |x: &[usize]| (0..n).all(|v| lo[v] <= x[v] as i64 && x[v] as i64 <= hi[v]);
            let oracle = !enumerate_factors(&g, ok).unwrap().is_empty();
            let got = find_interval_factor(&g, &lo, &hi).unwrap();
            assert_eq!(got.is_some(), oracle);
            if let Some(fac) = got {
                assert!(ok(&g.factor_degrees(&fac).unwrap()));
            }
        }
    }

    #[test]
    fn two_point_matches_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..150 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(0..=10);
            let g = random_graph(&mut rng, n, m);
            let d = g.degrees();
            let lo = VertexIntMap::from_fn(n, |v| rng.gen_range(0..=d[v] as i64));
            let hi = VertexIntMap::from_fn(n, |v| lo[v] + rng.gen_range(0..=3));
            let ok = |x: &[usize]| (0..n).all(|v| x[v] as i64 == lo[v] || x[v] as i64 == hi[v]);
            let oracle = !enumerate_factors(&g, ok).unwrap().is_empty();
            let got = find_two_point_factor(&g, &lo, &hi, None).unwrap();
            assert_eq!(got.is_found(), oracle);
            assert_ne!(got, Search::Unknown);
        }
    }

    #[test]
    fn pin_is_respected() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let lo = VertexIntMap::constant(4, 0);
        let hi = VertexIntMap::constant(4, 2);
        let f = find_two_point_factor(&c4, &lo, &hi, Some((0, 2)))
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(c4.factor_degrees(&f).unwrap()[0], 2);
        assert!(find_two_point_factor(&c4, &lo, &hi, Some((0, 1))).is_err());
    }
}

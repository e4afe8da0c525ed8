use crate::graph::{Bipartition, MultiGraph, VertexIntMap};

/// `h(v) ∈ {g(v), f(v)}` with `Σ_X h = Σ_Y h`, or `None` when no choice
/// balances. Exact, by subset sum over the gaps.
pub fn balanced_selector(
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> Option<VertexIntMap> {
    selector_with_difference(g, p, lo, hi, |d| d == 0)
}

/// `h(v) ∈ {g(v), f(v)}` whose difference `Σ_X h - Σ_Y h` satisfies
/// `accept`. Among accepted differences the one closest to zero is used,
/// preferring the non-negative one on ties.
pub fn selector_with_difference(
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    accept: impl Fn(i64) -> bool,
) -> Option<VertexIntMap> {
    let n = g.vertex_count();
    if p.len() != n || lo.len() != n || hi.len() != n {
        return None;
    }
    let sign = |v: usize| if p.in_x(v) { 1 } else { -1 };
    let base: i64 = (0..n).map(|v| sign(v) * lo[v]).sum();
    let gaps: Vec<i64> = (0..n).map(|v| (hi[v] - lo[v]).max(0)).collect();
    let neg: i64 = (0..n).filter(|&v| !p.in_x(v)).map(|v| gaps[v]).sum();
    let width = gaps.iter().sum::<i64>() as usize;
    // reach[i][s]: offset s (difference base - neg + s) reachable using the
    // first i vertices; the stored flag says whether vertex i-1 took f
    let mut reach: Vec<Vec<Option<bool>>> = vec![vec![None; width + 1]; n + 1];
    let start = neg as usize;
    reach[0][start] = Some(false);
    for v in 0..n {
        let step = gaps[v] as usize;
        for s in 0..=width {
            if reach[v][s].is_none() {
                continue;
            }
            if reach[v + 1][s].is_none() {
                reach[v + 1][s] = Some(false);
            }
            let t = if p.in_x(v) { s + step } else { s.wrapping_sub(step) };
            if step > 0 && t <= width && reach[v + 1][t].is_none() {
                reach[v + 1][t] = Some(true);
            }
        }
    }
    let diff = |s: usize| base - neg + s as i64;
    let best = (0..=width)
        .filter(|&s| reach[n][s].is_some() && accept(diff(s)))
        .min_by_key(|&s| (diff(s).abs(), diff(s) < 0))?;
    let mut h = lo.clone();
    let mut s = best;
    for v in (0..n).rev() {
        if reach[v + 1][s] == Some(true) {
            h[v] = hi[v];
            let step = gaps[v] as usize;
            s = if p.in_x(v) { s - step } else { s + step };
        }
    }
    debug_assert_eq!(s, start);
    Some(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn tight_functions() {
        let g = MultiGraph::new(4);
        let p = Bipartition::from_x(4, &[0, 1]).unwrap();
        let f = VertexIntMap::new(vec![1, 2, 2, 1]);
        assert_eq!(balanced_selector(&g, &p, &f, &f), Some(f.clone()));
        let f = VertexIntMap::new(vec![1, 2, 2, 2]);
        assert_eq!(balanced_selector(&g, &p, &f, &f), None);
    }

    #[test]
    fn agrees_with_exhaustive_choice() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let g = MultiGraph::new(n);
            let p = Bipartition::from_mask((0..n).map(|_| rng.gen()).collect());
            let lo = VertexIntMap::from_fn(n, |_| rng.gen_range(0..5));
            let hi = VertexIntMap::from_fn(n, |v| lo[v] + rng.gen_range(0..4));
            let mut any = false;
            for mask in 0u32..(1 << n) {
                let d: i64 = (0..n)
                    .map(|v| {
                        let h = if mask >> v & 1 == 1 { hi[v] } else { lo[v] };
                        if p.in_x(v) { h } else { -h }
                    })
                    .sum();
                any |= d == 0;
            }
            let got = balanced_selector(&g, &p, &lo, &hi);
            assert_eq!(got.is_some(), any);
            if let Some(h) = got {
                let d: i64 = (0..n).map(|v| if p.in_x(v) { h[v] } else { -h[v] }).sum();
                assert_eq!(d, 0);
                assert!((0..n).all(|v| h[v] == lo[v] || h[v] == hi[v]));
            }
        }
    }
}

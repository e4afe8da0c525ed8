use num_rational::Ratio;

use super::{
    check_functions, eulerian_half_factor_at, finish, half_degrees, max_gap, parity_criterion,
    tree_connected, two_point, window_violation, DerivationStep, FactorCertificate, Gate,
    GfOutcome, PipelineError, RunConfig,
};
use crate::connectivity::{bipartite_index, BI_EXACT_CAP};
use crate::decompositions::decompose_eulerian;
use crate::graph::{Bipartition, Factor, MultiGraph, Vertex, VertexIntMap};
use crate::orientations::{
    factor_from_orientation, two_point_orientation, z_defective_hypotheses,
    z_defective_orientation,
};
use crate::search::Search;

/// A factor with `d_F(v) ∈ {g(v), f(v)}` and `d_F(z) = h(z)` in a bipartite
/// graph, from a balanced selector `h`. The gap bound `k` is taken as
/// `max (f - g)`, which needs `4k²` edge-disjoint spanning trees.
///
/// Built through orientations: with `p, q = g, f` on `X` and
/// `d - f, d - g` on `Y`, an orientation with out-degrees in `{p, q}`
/// corresponds to the factor of edges directed from `X` to `Y`.
pub fn gf_factor_bipartite(
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    h: &VertexIntMap,
    z: Option<Vertex>,
    cfg: &RunConfig,
) -> Result<FactorCertificate, PipelineError> {
    check_functions(g, lo, hi)?;
    h.check(g)?;
    p.check(g)?;
    if let Some(e) = g.edges().iter().find(|e| p.in_x(e.u) == p.in_x(e.v)) {
        return Err(PipelineError::Hypothesis {
            name: "bipartite",
            detail: format!("edge {} lies inside a part", e.id),
        });
    }
    let mut gate = Gate::new(cfg.mode);
    let k = max_gap(lo, hi);
    let trees = 4 * k * k;
    let tc = tree_connected(g, trees);
    gate.check("tree-connectivity", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let w = window_violation(g, lo, hi, 0, 0);
    gate.check("g <= d/2 <= f", w.is_none(), || w.clone().unwrap())?;
    check_selector(&mut gate, g, p, lo, hi, h)?;
    let z = z.unwrap_or(0);
    if g.vertex_count() == 0 {
        return finish(&gate, g, "bipartite-gf", Factor::empty(), |_| vec![], (None, None), vec![]);
    }
    g.check_vertex(z)?;
    let mut derivation = Vec::new();
    let factor = bipartite_core(&gate, g, p, lo, hi, h, z, &mut derivation)?;
    finish(&gate, g, "bipartite-gf", factor, |v| two_point(lo, hi, v), (None, None), derivation)
}

fn check_selector(
    gate: &mut Gate,
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    h: &VertexIntMap,
) -> Result<(), PipelineError> {
    let bad = g.vertices().find(|&v| h[v] != lo[v] && h[v] != hi[v]);
    gate.check("selector h ∈ {g, f}", bad.is_none(), || {
        format!("h({}) is neither g nor f", bad.unwrap() + 1)
    })?;
    let diff = difference(p, h);
    gate.check("Σ_X h = Σ_Y h", diff == 0, || format!("Σ_X h - Σ_Y h = {diff}"))
}

fn difference(p: &Bipartition, h: &VertexIntMap) -> i64 {
    (0..h.len())
        .map(|v| if p.in_x(v) { h[v] } else { -h[v] })
        .sum()
}

/// The orientation construction, without hypothesis checks. Swaps the part
/// labels when `z` lies in `Y`.
#[allow(clippy::too_many_arguments)]
fn bipartite_core(
    gate: &Gate,
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    h: &VertexIntMap,
    z: Vertex,
    derivation: &mut Vec<DerivationStep>,
) -> Result<Factor, PipelineError> {
    let p = if p.in_x(z) { p.clone() } else { p.swapped() };
    let d = g.degrees();
    let n = g.vertex_count();
    let flip = |v: usize, x: i64| if p.in_x(v) { x } else { d[v] as i64 - x };
    let pp = VertexIntMap::from_fn(n, |v| if p.in_x(v) { lo[v] } else { flip(v, hi[v]) });
    let qq = VertexIntMap::from_fn(n, |v| if p.in_x(v) { hi[v] } else { flip(v, lo[v]) });
    let pin = flip(z, h[z]);
    derivation.push(DerivationStep::Partition { partition: p.clone() });
    derivation.push(DerivationStep::Pin { vertex: z, value: pin });
    let o = match two_point_orientation(g, &pp, &qq, Some((z, pin)))? {
        Search::Found(o) => o,
        Search::NotFound => return Err(gate.fail("no orientation with out-degrees in {p, q}")),
        Search::Unknown => {
            return Err(PipelineError::Unknown(
                "two-point orientation search budget exhausted".into(),
            ))
        }
    };
    let f = factor_from_orientation(g, &p, &o)?;
    derivation.push(DerivationStep::Orientation {
        on: "G",
        orientation: o,
    });
    Ok(f)
}

/// A bipartition with `e(X) + e(Y)` equal to `bi(G)`: the search used when
/// a pipeline is not given one.
fn best_partition(g: &MultiGraph) -> Result<Bipartition, PipelineError> {
    if g.vertex_count() <= BI_EXACT_CAP {
        Ok(bipartite_index(g).expect("below cap").witness)
    } else {
        Ok(crate::connectivity::bipartite_index_bounds(g, 0, 16).witness)
    }
}

/// A `{g, f}`-factor from a near-balanced selector `h` (`Σ h` even and
/// `0 <= Σ_X h - Σ_Y h <= 2 e(X) + 1`) when `G[X, Y]` is
/// `(4k² + 2k)`-tree-connected and `e(X) + e(Y) <= k - 1`.
///
/// Splits `G` into a `4k²`-tree-connected bipartite `G1` and a
/// `(2k - 1)`-tree-connected Eulerian `G2` holding every intra-part edge,
/// solves the shifted bipartite problem on `G1`, and corrects the remaining
/// imbalance `t` at one vertex of `X` with a half factor of `G2`.
pub fn gf_factor_almost_bipartite(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    h: &VertexIntMap,
    k: usize,
    partition: Option<&Bipartition>,
    cfg: &RunConfig,
) -> Result<FactorCertificate, PipelineError> {
    check_functions(g, lo, hi)?;
    h.check(g)?;
    if k == 0 {
        return Err(PipelineError::Input("k must be positive".into()));
    }
    let p = match partition {
        Some(p) => {
            p.check(g)?;
            p.clone()
        }
        None => best_partition(g)?,
    };
    let mut gate = Gate::new(cfg.mode);
    let cross = g.spanning_subgraph(&g.induced_bipartite_factor(&p)?)?;
    let trees = 4 * k * k + 2 * k;
    let tc = tree_connected(&cross, trees);
    gate.check("tree-connectivity of G[X, Y]", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let x_mask = p.mask().to_vec();
    let y_mask: Vec<bool> = x_mask.iter().map(|b| !b).collect();
    let (ex, ey) = (g.inside_count(&x_mask) as i64, g.inside_count(&y_mask) as i64);
    gate.check("e(X) + e(Y) <= k - 1", ex + ey < k as i64, || {
        format!("e(X) + e(Y) = {}", ex + ey)
    })?;
    let w = window_violation(g, lo, hi, 0, 0);
    gate.check("g <= d/2 <= f", w.is_none(), || w.clone().unwrap())?;
    let gap = max_gap(lo, hi);
    gate.check("f - g <= k", gap <= k, || format!("max f - g = {gap}"))?;
    let bad = g.vertices().find(|&v| h[v] != lo[v] && h[v] != hi[v]);
    gate.check("selector h ∈ {g, f}", bad.is_none(), || {
        format!("h({}) is neither g nor f", bad.unwrap() + 1)
    })?;
    gate.check("Σ h even", h.sum().rem_euclid(2) == 0, || format!("Σ h = {}", h.sum()))?;
    let diff = difference(&p, h);
    gate.check("0 <= Σ_X h - Σ_Y h <= 2e(X) + 1", 0 <= diff && diff <= 2 * ex + 1, || {
        format!("Σ_X h - Σ_Y h = {diff}, e(X) = {ex}")
    })?;
    if g.vertex_count() == 0 {
        return finish(&gate, g, "almost-bipartite", Factor::empty(), |_| vec![], (None, None), vec![]);
    }
    if k == 1 && ex + ey == 0 {
        let mut cert = gf_factor_bipartite(g, &p, lo, hi, h, None, cfg)
            .map_err(|e| gate.inner("bipartite", e))?;
        cert.theorem = "almost-bipartite";
        cert.derivation.insert(0, DerivationStep::Delegate { to: "bipartite-gf" });
        return Ok(cert);
    }

    let split = decompose_eulerian(g, &p, 4 * k * k, 2 * k - 1)
        .map_err(|e| gate.decomposition("decompose_eulerian", e))?;
    let (g1, g2) = (g.spanning_subgraph(&split.g1)?, g.spanning_subgraph(&split.g2)?);
    let mut derivation = vec![
        DerivationStep::Partition { partition: p.clone() },
        DerivationStep::Split {
            kind: "bipartite + eulerian",
            first: split.g1.clone(),
            second: split.g2.clone(),
        },
    ];
    let half2 = half_degrees(g, &split.g2)?;
    let e2x = g2.inside_count(&x_mask) as i64;
    let e2y = g2.inside_count(&y_mask) as i64;
    // each side's half-degree sum minus its inner edges counts the cross edges once
    let sx: i64 = g.vertices().filter(|&v| p.in_x(v)).map(|v| half2[v]).sum::<i64>() - e2x;
    let sy: i64 = g.vertices().filter(|&v| !p.in_x(v)).map(|v| half2[v]).sum::<i64>() - e2y;
    if sx != sy {
        return Err(gate.fail(format!("part-sum identity fails: {sx} != {sy}")));
    }
    let t = diff - ex + ey;
    if t.abs() > ex + ey || t.abs() >= k as i64 {
        return Err(gate.fail(format!("|t| = {} exceeds e(X) + e(Y) = {}", t.abs(), ex + ey)));
    }
    let z = match g.vertices().find(|&v| p.in_x(v)) {
        Some(z) => z,
        None => return Err(gate.fail("X is empty")),
    };
    let n = g.vertex_count();
    let shift = |v: usize| half2[v] + if v == z { t } else { 0 };
    let lo1 = VertexIntMap::from_fn(n, |v| lo[v] - shift(v));
    let hi1 = VertexIntMap::from_fn(n, |v| hi[v] - shift(v));
    let h1 = VertexIntMap::from_fn(n, |v| h[v] - shift(v));
    // the window d_{G1}/2 is only guaranteed away from z
    let d1 = g1.degrees();
    if let Some(v) = g
        .vertices()
        .find(|&v| v != z && (2 * lo1[v] > d1[v] as i64 || 2 * hi1[v] < d1[v] as i64))
    {
        return Err(gate.fail(format!("shifted window fails at vertex {}", v + 1)));
    }
    derivation.push(DerivationStep::Shift {
        on: "G1",
        offsets: (0..n).map(shift).collect(),
    });
    let f1 = bipartite_core(&gate, &g1, &p, &lo1, &hi1, &h1, z, &mut derivation)?;
    derivation.push(DerivationStep::Part {
        on: "G1",
        factor: f1.clone(),
    });
    derivation.push(DerivationStep::Correction { vertex: z, t });
    let f2 = eulerian_half_factor_at(&g2, z, t, &RunConfig::strict(cfg.seed))
        .map_err(|e| gate.inner("eulerian correction", e))?
        .factor;
    derivation.push(DerivationStep::Part {
        on: "G2",
        factor: f2.clone(),
    });
    finish(
        &gate,
        g,
        "almost-bipartite",
        f1.union(&f2),
        |v| two_point(lo, hi, v),
        (None, None),
        derivation,
    )
}

/// Decides the existence of a `{g, f}`-factor when `G[X, Y]` is
/// `3k²`-tree-connected and `e(X) + e(Y) >= k - 1`: one exists exactly when
/// some gap `f - g` is odd, or all gaps are even and `Σ f` is even.
///
/// Splits off a bipartite `G1` with `(3k/2 + 1)(k - 1)` trees and a
/// `2k`-tree-connected Eulerian `G2`, orients `G1` with a defect allowed at
/// one vertex `z` (of odd gap when there is one), and repairs `z` with a
/// half factor of `G2`.
pub fn gf_factor_bi_large(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    k: usize,
    partition: Option<&Bipartition>,
    cfg: &RunConfig,
) -> Result<GfOutcome, PipelineError> {
    check_functions(g, lo, hi)?;
    if k == 0 {
        return Err(PipelineError::Input("k must be positive".into()));
    }
    if let Err(cert) = parity_criterion(lo, hi) {
        return Ok(GfOutcome::None(cert));
    }
    let p = match partition {
        Some(p) => {
            p.check(g)?;
            p.clone()
        }
        None => best_partition(g)?,
    };
    let mut gate = Gate::new(cfg.mode);
    let cross = g.spanning_subgraph(&g.induced_bipartite_factor(&p)?)?;
    let trees = 3 * k * k;
    let tc = tree_connected(&cross, trees);
    gate.check("tree-connectivity of G[X, Y]", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let intra = g.intra_part_count(&p);
    gate.check("e(X) + e(Y) >= k - 1", intra + 1 >= k, || {
        format!("e(X) + e(Y) = {intra}")
    })?;
    let w = window_violation(g, lo, hi, 0, 0);
    gate.check("g <= d/2 <= f", w.is_none(), || w.clone().unwrap())?;
    let gap = max_gap(lo, hi);
    gate.check("f - g <= k", gap <= k, || format!("max f - g = {gap}"))?;
    let n = g.vertex_count();
    if n == 0 {
        let cert = finish(&gate, g, "bi-large", Factor::empty(), |_| vec![], (None, None), vec![])?;
        return Ok(GfOutcome::Factor(Box::new(cert)));
    }

    let m1 = (3 * k + 2) * (k - 1) / 2;
    let split = decompose_eulerian(g, &p, m1, 2 * k)
        .map_err(|e| gate.decomposition("decompose_eulerian", e))?;
    let (g1, g2) = (g.spanning_subgraph(&split.g1)?, g.spanning_subgraph(&split.g2)?);
    let z = g
        .vertices()
        .find(|&v| (hi[v] - lo[v]).rem_euclid(2) == 1)
        .unwrap_or(0);
    let p = if p.in_x(z) { p } else { p.swapped() };
    let mut derivation = vec![
        DerivationStep::Partition { partition: p.clone() },
        DerivationStep::Split {
            kind: "bipartite + eulerian",
            first: split.g1.clone(),
            second: split.g2.clone(),
        },
    ];
    let half2 = half_degrees(g, &split.g2)?;
    let d1 = g1.degrees();
    let lo1 = VertexIntMap::from_fn(n, |v| lo[v] - half2[v]);
    let hi1 = VertexIntMap::from_fn(n, |v| hi[v] - half2[v]);
    derivation.push(DerivationStep::Shift {
        on: "G1",
        offsets: half2.clone(),
    });
    let flip = |v: usize, x: i64| if p.in_x(v) { x } else { d1[v] as i64 - x };
    let pp = VertexIntMap::from_fn(n, |v| if p.in_x(v) { lo1[v] } else { flip(v, hi1[v]) });
    let qq = VertexIntMap::from_fn(n, |v| if p.in_x(v) { hi1[v] } else { flip(v, lo1[v]) });
    let dz = g.degree(z)? as i64;
    let kk = k as i64;
    // x puts the lower end of the defect window at (f + g)/2 - d_{G2}/2 - k/2
    let mut x = Ratio::new(dz + kk - lo[z] - hi[z], 2);
    if x >= Ratio::from_integer(kk) {
        x = Ratio::new(2 * kk - 1, 2);
    }
    if x < Ratio::from_integer(0) {
        x = Ratio::from_integer(0);
    }
    if let Err(e) = z_defective_hypotheses(&g1, &pp, &qq, x, k) {
        return Err(gate.fail(format!("defective orientation hypotheses on G1: {e}")));
    }
    let o = match z_defective_orientation(&g1, &pp, &qq, z, x, k)? {
        Search::Found(o) => o,
        Search::NotFound => return Err(gate.fail("no defective orientation of G1")),
        Search::Unknown => {
            return Err(PipelineError::Unknown(
                "defective orientation search budget exhausted".into(),
            ))
        }
    };
    let f1 = factor_from_orientation(&g1, &p, &o)?;
    derivation.push(DerivationStep::Orientation {
        on: "G1",
        orientation: o,
    });
    derivation.push(DerivationStep::Part {
        on: "G1",
        factor: f1.clone(),
    });
    let df1z = g1.factor_degrees(&f1)?[z] as i64;
    let e2 = split.g2.len() as i64;
    let t = [lo[z], hi[z]]
        .into_iter()
        .map(|target| target - df1z - half2[z])
        .filter(|t| (t - e2).rem_euclid(2) == 0)
        .min_by_key(|t| t.abs())
        .ok_or_else(|| gate.fail("no correction t of the parity of |E(G2)|"))?;
    if t.abs() > kk {
        return Err(gate.fail(format!("|t| = {} exceeds k", t.abs())));
    }
    derivation.push(DerivationStep::Correction { vertex: z, t });
    let f2 = eulerian_half_factor_at(&g2, z, t, &RunConfig::strict(cfg.seed))
        .map_err(|e| gate.inner("eulerian correction", e))?
        .factor;
    derivation.push(DerivationStep::Part {
        on: "G2",
        factor: f2.clone(),
    });
    let cert = finish(
        &gate,
        g,
        "bi-large",
        f1.union(&f2),
        |v| two_point(lo, hi, v),
        (None, None),
        derivation,
    )?;
    Ok(GfOutcome::Factor(Box::new(cert)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_factors;
    use crate::pipeline::balanced_selector;

    /// `K_{a,b}` with every edge repeated `mult` times.
    fn complete_bipartite(a: usize, b: usize, mult: usize) -> (MultiGraph, Bipartition) {
        let mut pairs = Vec::new();
        for _ in 0..mult {
            for x in 0..a {
                for y in a..a + b {
                    pairs.push((x, y));
                }
            }
        }
        let g = MultiGraph::from_pairs(a + b, &pairs).unwrap();
        let x: Vec<_> = (0..a).collect();
        (g, Bipartition::from_x(a + b, &x).unwrap())
    }

    #[test]
    fn half_degree_bipartite() {
        let (g, p) = complete_bipartite(2, 2, 2);
        let d = g.degrees();
        let half = VertexIntMap::from_fn(4, |v| d[v] as i64 / 2);
        let c = gf_factor_bipartite(&g, &p, &half, &half, &half, None, &RunConfig::default()).unwrap();
        assert_eq!(g.factor_degrees(&c.factor).unwrap(), vec![2; 4]);
    }

    #[test]
    fn bipartite_k1_with_pin() {
        // K_{3,3} doubled: 6-regular, 4 trees fit in 18 edges? 4 * 5 = 20 > 18, so triple it
        let (g, p) = complete_bipartite(3, 3, 3);
        let lo = VertexIntMap::new(vec![4, 4, 4, 4, 4, 4]);
        let hi = VertexIntMap::new(vec![5, 5, 5, 5, 5, 5]);
        let h = balanced_selector(&g, &p, &lo, &hi).unwrap();
        for z in 0..6 {
            let c = gf_factor_bipartite(&g, &p, &lo, &hi, &h, Some(z), &RunConfig::default()).unwrap();
            let d = g.factor_degrees(&c.factor).unwrap();
            assert_eq!(d[z] as i64, h[z]);
            assert!(d.iter().all(|&x| x == 4 || x == 5));
        }
    }

    #[test]
    fn bi_large_parity_none() {
        let (g, _) = complete_bipartite(1, 1, 2);
        let lo = VertexIntMap::new(vec![1, 0]);
        let hi = VertexIntMap::new(vec![1, 2]);
        // gaps 0 and 2, Σ f = 3 odd
        let out = gf_factor_bi_large(&g, &lo, &hi, 2, None, &RunConfig::default()).unwrap();
        assert!(matches!(out, GfOutcome::None(_)));
        assert!(enumerate_factors(&g, |d| (d[0] == 1) && (d[1] == 0 || d[1] == 2))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bi_large_k1() {
        // K_{2,2} tripled plus a loop: 3-tree-connected across the parts
        let (base, p) = complete_bipartite(2, 2, 3);
        let mut g = base.clone();
        g.add_edge(0, 0).unwrap();
        let d = g.degrees();
        let lo = VertexIntMap::from_fn(4, |v| d[v] as i64 / 2);
        let hi = VertexIntMap::from_fn(4, |v| (d[v] as i64 + 1) / 2 + if v == 1 { 1 } else { 0 });
        let out = gf_factor_bi_large(&g, &lo, &hi, 1, Some(&p), &RunConfig::default()).unwrap();
        let c = out.certificate().unwrap();
        c.verify(&g).unwrap();
    }
}

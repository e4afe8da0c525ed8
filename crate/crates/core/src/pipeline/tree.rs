use super::{
    check_functions, finish, gf_factor_bi_large, gf_factor_bipartite, parity_criterion,
    tree_connected, two_point, window_violation, bi_at_least, max_gap, DerivationStep,
    FactorCertificate, Gate, GfOutcome, PipelineError, RunConfig, TheoremParams,
};
use crate::decompositions::{decompose_eulerian, decompose_keep_bi, split_tree_connected_complement};
use crate::graph::{Bipartition, Factor, MultiGraph, Vertex, VertexIntMap};

/// An `m`-tree-connected `{g, f}`-factor `H` with an `m0`-tree-connected
/// complement and `d_H(z) = h(z)`, in a `(2m + 2m0 + 4k²)`-tree-connected
/// bipartite graph with `g + m0 <= d/2 <= f - m`.
///
/// Splits off a `(2m + 2m0)`-edge-connected Eulerian part, takes a
/// tree-connected near-half factor `H'` of it, and solves the bipartite
/// problem with `g, f, h` shifted by `d_{H'}` on the rest.
#[allow(clippy::too_many_arguments)]
pub fn tree_connected_gf_bipartite(
    g: &MultiGraph,
    p: &Bipartition,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    h: &VertexIntMap,
    params: &TheoremParams,
    z: Option<Vertex>,
    cfg: &RunConfig,
) -> Result<FactorCertificate, PipelineError> {
    check_functions(g, lo, hi)?;
    h.check(g)?;
    p.check(g)?;
    let TheoremParams { k, m, m0, .. } = *params;
    if m + m0 == 0 {
        let mut cert = gf_factor_bipartite(g, p, lo, hi, h, z, cfg)?;
        cert.theorem = "tree-gf-bipartite";
        cert.derivation.insert(0, DerivationStep::Delegate { to: "bipartite-gf" });
        return Ok(cert);
    }
    if let Some(e) = g.edges().iter().find(|e| p.in_x(e.u) == p.in_x(e.v)) {
        return Err(PipelineError::Hypothesis {
            name: "bipartite",
            detail: format!("edge {} lies inside a part", e.id),
        });
    }
    let mut gate = Gate::new(cfg.mode);
    let trees = 2 * m + 2 * m0 + 4 * k * k;
    let tc = tree_connected(g, trees);
    gate.check("tree-connectivity", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let w = window_violation(g, lo, hi, m, m0);
    gate.check("g + m0 <= d/2 <= f - m", w.is_none(), || w.clone().unwrap())?;
    let gap = max_gap(lo, hi);
    gate.check("f - g <= k", gap <= k, || format!("max f - g = {gap}"))?;
    let bad = g.vertices().find(|&v| h[v] != lo[v] && h[v] != hi[v]);
    gate.check("selector h ∈ {g, f}", bad.is_none(), || {
        format!("h({}) is neither g nor f", bad.unwrap() + 1)
    })?;
    let diff: i64 = g.vertices().map(|v| if p.in_x(v) { h[v] } else { -h[v] }).sum();
    gate.check("Σ_X h = Σ_Y h", diff == 0, || format!("Σ_X h - Σ_Y h = {diff}"))?;
    if g.vertex_count() == 0 {
        return finish(&gate, g, "tree-gf-bipartite", Factor::empty(), |_| vec![], (None, None), vec![]);
    }

    // the Eulerian part is (2m + 2m0 - 1)-tree-connected, and even cuts
    // round its edge connectivity up to 2m + 2m0
    let split = decompose_eulerian(g, p, 4 * k * k, 2 * (m + m0) - 1)
        .map_err(|e| gate.decomposition("decompose_eulerian", e))?;
    let eulerian = g.spanning_subgraph(&split.g2)?;
    let rest = g.spanning_subgraph(&split.g1)?;
    let comp = split_tree_connected_complement(&eulerian, m, m0, cfg.seed)
        .map_err(|e| gate.decomposition("split_tree_connected_complement", e))?;
    let mut derivation = vec![
        DerivationStep::Split {
            kind: "eulerian + bipartite",
            first: split.g2.clone(),
            second: split.g1.clone(),
        },
        DerivationStep::Part {
            on: "eulerian part",
            factor: comp.h.clone(),
        },
    ];
    let n = g.vertex_count();
    let dh = g.factor_degrees(&comp.h)?;
    let shift = |v: usize| dh[v] as i64;
    let lo2 = VertexIntMap::from_fn(n, |v| lo[v] - shift(v));
    let hi2 = VertexIntMap::from_fn(n, |v| hi[v] - shift(v));
    let h2 = VertexIntMap::from_fn(n, |v| h[v] - shift(v));
    if let Some(msg) = window_violation(&rest, &lo2, &hi2, 0, 0) {
        return Err(gate.fail(format!("shifted window fails {msg}")));
    }
    derivation.push(DerivationStep::Shift {
        on: "bipartite part",
        offsets: (0..n).map(shift).collect(),
    });
    let inner = gf_factor_bipartite(&rest, p, &lo2, &hi2, &h2, z, &RunConfig::strict(cfg.seed))
        .map_err(|e| gate.inner("bipartite part", e))?;
    derivation.extend(inner.derivation);
    derivation.push(DerivationStep::Part {
        on: "bipartite part",
        factor: inner.factor.clone(),
    });
    let factor = comp.h.union(&inner.factor);
    let cert = finish(
        &gate,
        g,
        "tree-gf-bipartite",
        factor,
        |v| two_point(lo, hi, v),
        (Some(comp.h_trees), Some(comp.complement_trees)),
        derivation,
    )?;
    if let Some(z) = z {
        let d = g.factor_degrees(&cert.factor)?;
        if d[z] as i64 != h[z] {
            return Err(gate.fail(format!("d_H({}) = {} differs from h", z + 1, d[z])));
        }
    }
    Ok(cert)
}

/// Decides the existence of an `m`-tree-connected `{g, f}`-factor with an
/// `m0`-tree-connected complement, in a `(2m + 2m0 + 6k²)`-tree-connected
/// graph with `bi(G) >= k - 1` and `g + m0 <= d/2 <= f - m`. The criterion
/// is the parity one of [`gf_factor_bi_large`].
pub fn tree_connected_gf(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    params: &TheoremParams,
    cfg: &RunConfig,
) -> Result<GfOutcome, PipelineError> {
    check_functions(g, lo, hi)?;
    let TheoremParams { k, m, m0, .. } = *params;
    if k == 0 {
        return Err(PipelineError::Input("k must be positive".into()));
    }
    if let Err(cert) = parity_criterion(lo, hi) {
        return Ok(GfOutcome::None(cert));
    }
    if m + m0 == 0 {
        let mut out = gf_factor_bi_large(g, lo, hi, k, None, cfg)?;
        if let GfOutcome::Factor(c) = &mut out {
            c.theorem = "tree-gf";
            c.derivation.insert(0, DerivationStep::Delegate { to: "bi-large" });
        }
        return Ok(out);
    }
    let mut gate = Gate::new(cfg.mode);
    let trees = 2 * m + 2 * m0 + 6 * k * k;
    let tc = tree_connected(g, trees);
    gate.check("tree-connectivity", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let bi = bi_at_least(g, k - 1);
    gate.check("bi(G) >= k - 1", bi == Ok(true), || match bi {
        Err(e) => e,
        _ => format!("bi(G) < {}", k - 1),
    })?;
    let w = window_violation(g, lo, hi, m, m0);
    gate.check("g + m0 <= d/2 <= f - m", w.is_none(), || w.clone().unwrap())?;
    let gap = max_gap(lo, hi);
    gate.check("f - g <= k", gap <= k, || format!("max f - g = {gap}"))?;
    if g.vertex_count() == 0 {
        let cert = finish(&gate, g, "tree-gf", Factor::empty(), |_| vec![], (None, None), vec![])?;
        return Ok(GfOutcome::Factor(Box::new(cert)));
    }

    let split = decompose_keep_bi(g, m + m0, 3 * k * k, k - 1, cfg.seed)
        .map_err(|e| gate.decomposition("decompose_keep_bi", e))?;
    let eulerian = g.spanning_subgraph(&split.g1)?;
    let rest = g.spanning_subgraph(&split.g2)?;
    let comp = split_tree_connected_complement(&eulerian, m, m0, cfg.seed)
        .map_err(|e| gate.decomposition("split_tree_connected_complement", e))?;
    let mut derivation = vec![
        DerivationStep::Split {
            kind: "eulerian + keeps bipartite index",
            first: split.g1.clone(),
            second: split.g2.clone(),
        },
        DerivationStep::Part {
            on: "eulerian part",
            factor: comp.h.clone(),
        },
    ];
    let n = g.vertex_count();
    let dh = g.factor_degrees(&comp.h)?;
    let lo2 = VertexIntMap::from_fn(n, |v| lo[v] - dh[v] as i64);
    let hi2 = VertexIntMap::from_fn(n, |v| hi[v] - dh[v] as i64);
    if let Some(msg) = window_violation(&rest, &lo2, &hi2, 0, 0) {
        return Err(gate.fail(format!("shifted window fails {msg}")));
    }
    derivation.push(DerivationStep::Shift {
        on: "remaining part",
        offsets: dh.iter().map(|&x| x as i64).collect(),
    });
    let inner = gf_factor_bi_large(
        &rest,
        &lo2,
        &hi2,
        k,
        Some(&split.partition),
        &RunConfig::strict(cfg.seed),
    )
    .map_err(|e| gate.inner("remaining part", e))?;
    let inner = match inner {
        GfOutcome::Factor(c) => c,
        GfOutcome::None(_) => return Err(gate.fail("shift broke the parity criterion")),
    };
    derivation.extend(inner.derivation);
    derivation.push(DerivationStep::Part {
        on: "remaining part",
        factor: inner.factor.clone(),
    });
    let cert = finish(
        &gate,
        g,
        "tree-gf",
        comp.h.union(&inner.factor),
        |v| two_point(lo, hi, v),
        (Some(comp.h_trees), Some(comp.complement_trees)),
        derivation,
    )?;
    Ok(GfOutcome::Factor(Box::new(cert)))
}

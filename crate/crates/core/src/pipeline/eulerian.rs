use super::{bi_at_least, finish, tree_connected, FactorCertificate, Gate, PipelineError, RunConfig};
use crate::connectivity::edge_connectivity;
use crate::factors::find_f_factor;
use crate::graph::{MultiGraph, Vertex, VertexIntMap};

/// A factor with `d_F(v) = d(v)/2 + i(v)` in an Eulerian graph that is
/// `max(1, 2t - 1)`-edge-connected with `bi(G) >= t - 1` and
/// `|E| ≡ t (mod 2)`, where `t = Σ |i(v)|`.
///
/// Connectivity at least one is required even when `t = 0`: two disjoint
/// triangles have no factor with `d_F = d/2` although `|E|` is even.
pub fn eulerian_half_factor(
    g: &MultiGraph,
    i: &VertexIntMap,
    cfg: &RunConfig,
) -> Result<FactorCertificate, PipelineError> {
    i.check(g)?;
    let mut gate = Gate::new(cfg.mode);
    let odd = g.odd_vertices();
    if let Some(&v) = odd.first() {
        return Err(PipelineError::Hypothesis {
            name: "eulerian",
            detail: format!("vertex {} has odd degree", v + 1),
        });
    }
    let t: i64 = i.values().iter().map(|x| x.abs()).sum();
    let m = g.edge_count() as i64;
    gate.check("parity", (m - t).rem_euclid(2) == 0, || {
        format!("|E| = {m} and t = {t} differ in parity")
    })?;
    let need = (2 * t - 1).max(1) as usize;
    let conn = edge_connectivity(g);
    gate.check("edge-connectivity", conn.is_none_or(|c| c >= need), || {
        format!("edge connectivity {} is below {need}", conn.unwrap_or(0))
    })?;
    let bi_need = (t - 1).max(0) as usize;
    let bi = bi_at_least(g, bi_need);
    gate.check("bipartite-index", bi == Ok(true), || match bi {
        Err(e) => e,
        _ => format!("bi(G) < {bi_need}"),
    })?;
    let d = g.degrees();
    let target = VertexIntMap::from_fn(g.vertex_count(), |v| d[v] as i64 / 2 + i[v]);
    build(gate, g, target, "eulerian-half")
}

/// A factor with `d_F(z) = d(z)/2 + t` and `d_F = d/2` elsewhere, in an
/// Eulerian `max(1, 2|t|)`-tree-connected graph with `bi(G) >= |t| - 1` and
/// `t ≡ |E| (mod 2)`.
pub fn eulerian_half_factor_at(
    g: &MultiGraph,
    z: Vertex,
    t: i64,
    cfg: &RunConfig,
) -> Result<FactorCertificate, PipelineError> {
    g.check_vertex(z)?;
    let mut gate = Gate::new(cfg.mode);
    if let Some(&v) = g.odd_vertices().first() {
        return Err(PipelineError::Hypothesis {
            name: "eulerian",
            detail: format!("vertex {} has odd degree", v + 1),
        });
    }
    let m = g.edge_count() as i64;
    gate.check("parity t ≡ |E(G)|", (m - t).rem_euclid(2) == 0, || {
        format!("|E| = {m} and t = {t} differ in parity")
    })?;
    let trees = (2 * t.unsigned_abs() as usize).max(1);
    let tc = tree_connected(g, trees);
    gate.check("tree-connectivity", tc.is_ok(), || {
        format!("not {trees}-tree-connected: {}", tc.clone().unwrap_err())
    })?;
    let bi_need = (t.abs() - 1).max(0) as usize;
    let bi = bi_at_least(g, bi_need);
    gate.check("bipartite-index", bi == Ok(true), || match bi {
        Err(e) => e,
        _ => format!("bi(G) < {bi_need}"),
    })?;
    let d = g.degrees();
    let target = VertexIntMap::from_fn(g.vertex_count(), |v| {
        d[v] as i64 / 2 + if v == z { t } else { 0 }
    });
    build(gate, g, target, "eulerian-half-at")
}

fn build(
    gate: Gate,
    g: &MultiGraph,
    target: VertexIntMap,
    theorem: &'static str,
) -> Result<FactorCertificate, PipelineError> {
    let d = g.degrees();
    if let Some(v) = g.vertices().find(|&v| target[v] < 0 || target[v] > d[v] as i64) {
        return Err(gate.fail(format!("target degree {} at vertex {} is out of range", target[v], v + 1)));
    }
    let factor = find_f_factor(g, &target)?.ok_or_else(|| gate.fail("no f-factor"))?;
    finish(&gate, g, theorem, factor, |v| vec![target[v]], (None, None), Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_factors;
    use crate::pipeline::HypothesisMode;

    #[test]
    fn doubled_triangle_half() {
        let g = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]).unwrap();
        let c = eulerian_half_factor(&g, &VertexIntMap::constant(3, 0), &RunConfig::default()).unwrap();
        assert_eq!(c.factor.len(), 3);
        let oracle = enumerate_factors(&g, |d| d.iter().all(|&x| x == 2)).unwrap();
        assert!(oracle.contains(&c.factor));
    }

    #[test]
    fn parity_refusal() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let i = VertexIntMap::new(vec![1, 0, 0, 0]);
        assert!(matches!(
            eulerian_half_factor(&c4, &i, &RunConfig::default()),
            Err(PipelineError::Hypothesis { name: "parity", .. })
        ));
    }

    #[test]
    fn disconnected_needs_connectivity() {
        let g = MultiGraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let zero = VertexIntMap::constant(6, 0);
        assert!(matches!(
            eulerian_half_factor(&g, &zero, &RunConfig::default()),
            Err(PipelineError::Hypothesis { name: "edge-connectivity", .. })
        ));
        let assume = RunConfig {
            mode: HypothesisMode::Assume,
            seed: 0,
        };
        assert!(matches!(
            eulerian_half_factor(&g, &zero, &assume),
            Err(PipelineError::BelowHypotheses { .. })
        ));
    }

    #[test]
    fn corollary_on_triangle_with_loop() {
        // odd |E| allows t = 1
        let g = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0), (0, 0)])
            .unwrap();
        let c = eulerian_half_factor_at(&g, 0, 1, &RunConfig::default()).unwrap();
        let d = g.factor_degrees(&c.factor).unwrap();
        assert_eq!(d, vec![4, 2, 2]);
        assert!(matches!(
            eulerian_half_factor_at(&g, 0, 2, &RunConfig::default()),
            Err(PipelineError::Hypothesis { .. })
        ));
    }
}

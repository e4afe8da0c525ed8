use num_rational::Ratio;
use serde::Serialize;

use super::{check_functions, parity_criterion, PipelineError, TheoremParams};
use crate::connectivity::{toughness, ConnectivityError, ToughnessValue};
use crate::graph::{MultiGraph, VertexIntMap};

/// One inequality of the toughness theorem with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisLine {
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughReport {
    pub toughness: ToughnessValue,
    pub lines: Vec<HypothesisLine>,
    pub all_hold: bool,
}

/// Evaluates the hypotheses of the toughness theorem: `4b²`-toughness,
/// `|V| >= 4b²`, `3m + 2m0 + 6k² < f <= b`, `m + m0 < f - g <= k`, and the
/// parity criterion. Nothing is constructed.
pub fn tough_hypothesis_check(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    params: &TheoremParams,
) -> Result<ToughReport, PipelineError> {
    check_functions(g, lo, hi)?;
    let t = toughness(g).map_err(|e| match e {
        ConnectivityError::TooLarge { .. } => PipelineError::Input(e.to_string()),
        other => PipelineError::Input(other.to_string()),
    })?;
    let TheoremParams { k, m, m0, b } = *params;
    let (k, m, m0, b) = (k as i64, m as i64, m0 as i64, b as i64);
    let bound = 4 * b * b;
    let n = g.vertex_count() as i64;
    let min_f = hi.values().iter().copied().min().unwrap_or(0);
    let max_f = hi.values().iter().copied().max().unwrap_or(0);
    let gaps: Vec<i64> = (0..g.vertex_count()).map(|v| hi[v] - lo[v]).collect();
    let min_gap = gaps.iter().copied().min().unwrap_or(0);
    let max_gap = gaps.iter().copied().max().unwrap_or(0);
    let floor = 3 * m + 2 * m0 + 6 * k * k;
    let line = |name, lhs: String, rhs: String, holds| HypothesisLine { name, lhs, rhs, holds };
    let lines = vec![
        line(
            "toughness >= 4b²",
            t.value.to_string(),
            bound.to_string(),
            t.value.at_least(Ratio::from_integer(bound as u64)),
        ),
        line("|V| >= 4b²", n.to_string(), bound.to_string(), n >= bound),
        line(
            "3m + 2m0 + 6k² < min f",
            floor.to_string(),
            min_f.to_string(),
            floor < min_f,
        ),
        line("max f <= b", max_f.to_string(), b.to_string(), max_f <= b),
        line(
            "m + m0 < min (f - g)",
            (m + m0).to_string(),
            min_gap.to_string(),
            m + m0 < min_gap,
        ),
        line("max (f - g) <= k", max_gap.to_string(), k.to_string(), max_gap <= k),
        line(
            "parity criterion",
            match parity_criterion(lo, hi) {
                Ok(()) => "odd gap or even Σf".into(),
                Err(c) => format!("all gaps even, Σf = {}", c.sum_f),
            },
            "satisfied".into(),
            parity_criterion(lo, hi).is_ok(),
        ),
    ];
    let all_hold = lines.iter().all(|l| l.holds);
    Ok(ToughReport {
        toughness: t.value,
        lines,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c5_is_not_tough_enough() {
        let g = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let lo = VertexIntMap::constant(5, 1);
        let hi = VertexIntMap::constant(5, 2);
        let params = TheoremParams { k: 1, m: 0, m0: 0, b: 1 };
        let r = tough_hypothesis_check(&g, &lo, &hi, &params).unwrap();
        assert!(!r.lines[0].holds);
        assert_eq!(r.lines[0].lhs, "1");
        assert!(!r.all_hold);
    }

    #[test]
    fn complete_graph_too_small() {
        let mut pairs = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                pairs.push((u, v));
            }
        }
        let g = MultiGraph::from_pairs(4, &pairs).unwrap();
        let f = VertexIntMap::constant(4, 2);
        let params = TheoremParams { k: 1, m: 0, m0: 0, b: 2 };
        let r = tough_hypothesis_check(&g, &f, &f, &params).unwrap();
        assert!(r.lines[0].holds);
        assert!(!r.lines[1].holds);
    }
}

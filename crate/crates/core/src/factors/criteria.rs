use serde::Serialize;

use super::{check_pair, FactorError};
use crate::graph::{components_with, DisjointPair, MultiGraph, PairSide, VertexIntMap};

/// Largest vertex count for the `3^n` sweep over disjoint pairs.
pub const LOVASZ_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CriterionOutcome {
    Holds,
    Violated { pair: DisjointPair, deficiency: i64 },
}

impl CriterionOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, CriterionOutcome::Holds)
    }
}

/// Components `C` of `G - (A ∪ B)` on which `g = f` and whose number of edges
/// into `B` differs in parity from `Σ_C f`.
pub fn omega_gf(g: &MultiGraph, pair: &DisjointPair, lo: &VertexIntMap, hi: &VertexIntMap) -> usize {
    let free = |v: usize| pair.side(v).is_none();
    let comps = components_with(
        g.vertex_count(),
        g.edges()
            .iter()
            .filter(|e| free(e.u) && free(e.v))
            .map(|e| (e.u, e.v)),
    );
    let mut comp_of = vec![usize::MAX; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut to_b = vec![0i64; comps.len()];
    for e in g.edges() {
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            if free(x) && pair.side(y) == Some(PairSide::B) {
                to_b[comp_of[x]] += 1;
            }
        }
    }
    comps
        .iter()
        .enumerate()
        .filter(|(_, c)| free(c[0]))
        .filter(|(i, c)| {
            c.iter().all(|&v| lo[v] == hi[v])
                && (to_b[*i] - c.iter().map(|&v| hi[v]).sum::<i64>()).rem_euclid(2) == 1
        })
        .count()
}

/// Right side minus left side of the interval factor inequality
/// `ω_{g,f}(G,A,B) <= Σ_A f + Σ_B (d_{G-A}(v) - g(v))`.
pub fn lovasz_deficiency(
    g: &MultiGraph,
    pair: &DisjointPair,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> i64 {
    let mut rhs = 0i64;
    let mut deg_minus_a = vec![0i64; g.vertex_count()];
    for e in g.edges() {
        if pair.side(e.u) != Some(PairSide::A) && pair.side(e.v) != Some(PairSide::A) {
            deg_minus_a[e.u] += 1;
            deg_minus_a[e.v] += 1;
        }
    }
    for v in g.vertices() {
        match pair.side(v) {
            Some(PairSide::A) => rhs += hi[v],
            Some(PairSide::B) => rhs += deg_minus_a[v] - lo[v],
            None => {}
        }
    }
    rhs - omega_gf(g, pair, lo, hi) as i64
}

/// Sweeps all `3^n` disjoint pairs. The first violated pair in sweep order is
/// returned, starting with `(∅, ∅)`.
pub fn check_lovasz_condition(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> Result<CriterionOutcome, FactorError> {
    check_pair(g, lo, hi)?;
    sweep(g, |pair| {
        let d = lovasz_deficiency(g, pair, lo, hi);
        (d < 0).then_some(d)
    })
}

/// The strict form for connected graphs with `Σ f` even:
/// `ω_f(G,A,B) < 2 + Σ_A f + Σ_B (d_{G-A}(v) - f(v))` over pairs with
/// `A ∪ B` nonempty. The reported deficiency is `RHS - ω_f`, which is at
/// most `-2` on a violation.
pub fn check_tutte_lemma_form(
    g: &MultiGraph,
    f: &VertexIntMap,
) -> Result<CriterionOutcome, FactorError> {
    f.check(g)?;
    if !g.is_connected() {
        return Err(FactorError::Precondition("graph is not connected".into()));
    }
    if f.sum().rem_euclid(2) == 1 {
        return Err(FactorError::Precondition("Σf is odd".into()));
    }
    sweep(g, |pair| {
        if pair.is_trivial() {
            return None;
        }
        let d = lovasz_deficiency(g, pair, f, f);
        (d + 2 <= 0).then_some(d)
    })
}

fn sweep(
    g: &MultiGraph,
    mut violated: impl FnMut(&DisjointPair) -> Option<i64>,
) -> Result<CriterionOutcome, FactorError> {
    let n = g.vertex_count();
    if n > LOVASZ_CAP {
        return Err(FactorError::TooLarge {
            what: "disjoint-pair sweep",
            size: n,
            cap: LOVASZ_CAP,
        });
    }
    let mut digits = vec![0u8; n];
    loop {
        let pair = DisjointPair::from_sides(
            digits
                .iter()
                .map(|d| match d {
                    1 => Some(PairSide::A),
                    2 => Some(PairSide::B),
                    _ => None,
                })
                .collect(),
        );
        if let Some(deficiency) = violated(&pair) {
            return Ok(CriterionOutcome::Violated { pair, deficiency });
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(CriterionOutcome::Holds);
            }
            digits[i] += 1;
            if digits[i] == 3 {
                digits[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

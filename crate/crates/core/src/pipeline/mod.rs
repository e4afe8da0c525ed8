//! Constructions of `{g, f}`-factors in highly connected graphs. Each
//! pipeline checks its hypotheses, builds the factor by composing the
//! decomposition, orientation and factor tools, and re-verifies the result
//! before returning a [`FactorCertificate`].

mod eulerian;
mod gf;
mod selector;
mod tough;
mod tree;

pub use eulerian::{eulerian_half_factor, eulerian_half_factor_at};
pub use gf::{gf_factor_almost_bipartite, gf_factor_bi_large, gf_factor_bipartite};
pub use selector::{balanced_selector, selector_with_difference};
pub use tough::{tough_hypothesis_check, HypothesisLine, ToughReport};
pub use tree::{tree_connected_gf, tree_connected_gf_bipartite};

use serde::Serialize;
use thiserror::Error;

use crate::connectivity::{bipartite_index, spanning_tree_packing, TreePacking, BI_EXACT_CAP};
use crate::decompositions::DecompositionError;
use crate::factors::FactorError;
use crate::graph::{Bipartition, Factor, GraphError, MultiGraph, Vertex, VertexIntMap};
use crate::orientations::{Orientation, OrientationError};

/// Parameters shared by the theorems: the gap bound `k`, the tree counts
/// `m` (factor) and `m0` (complement), and the degree cap `b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremParams {
    pub k: usize,
    pub m: usize,
    pub m0: usize,
    pub b: usize,
}

/// `Strict` refuses on the first failed hypothesis; `Assume` records the
/// failures and runs the construction anyway.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum HypothesisMode {
    #[default]
    Strict,
    Assume,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub mode: HypothesisMode,
    /// Seed for the randomized decompositions.
    pub seed: u64,
}

impl RunConfig {
    pub fn strict(seed: u64) -> Self {
        RunConfig {
            mode: HypothesisMode::Strict,
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("hypothesis `{name}` fails: {detail}")]
    Hypothesis { name: &'static str, detail: String },
    /// The construction failed although every hypothesis was verified.
    #[error("construction failed under verified hypotheses: {0}")]
    HardError(String),
    /// The construction failed with some hypotheses assumed, not verified.
    #[error("construction failed with unmet hypotheses {unmet:?}: {detail}")]
    BelowHypotheses {
        unmet: Vec<&'static str>,
        detail: String,
    },
    /// A search-based step gave up.
    #[error("undecided: {0}")]
    Unknown(String),
    #[error("invalid input: {0}")]
    Input(String),
}

impl From<GraphError> for PipelineError {
    fn from(e: GraphError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl From<FactorError> for PipelineError {
    fn from(e: FactorError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

impl From<OrientationError> for PipelineError {
    fn from(e: OrientationError) -> Self {
        PipelineError::Input(e.to_string())
    }
}

/// Per-vertex achieved degree and the set it had to land in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeEntry {
    #[serde(serialize_with = "one_based")]
    pub vertex: Vertex,
    pub achieved: i64,
    pub allowed: Vec<i64>,
}

fn one_based<S: serde::Serializer>(v: &Vertex, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*v as u64 + 1)
}

/// One recorded stage of a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum DerivationStep {
    Partition {
        partition: Bipartition,
    },
    Split {
        kind: &'static str,
        first: Factor,
        second: Factor,
    },
    Shift {
        on: &'static str,
        offsets: Vec<i64>,
    },
    Orientation {
        on: &'static str,
        orientation: Orientation,
    },
    Pin {
        #[serde(serialize_with = "one_based")]
        vertex: Vertex,
        value: i64,
    },
    Correction {
        #[serde(serialize_with = "one_based")]
        vertex: Vertex,
        t: i64,
    },
    Part {
        on: &'static str,
        factor: Factor,
    },
    Delegate {
        to: &'static str,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    pub theorem: &'static str,
    pub factor: Factor,
    pub degree_report: Vec<DegreeEntry>,
    pub factor_trees: Option<TreePacking>,
    pub complement_trees: Option<TreePacking>,
    /// Hypotheses assumed rather than verified (only in `Assume` mode).
    pub assumed: Vec<&'static str>,
    pub derivation: Vec<DerivationStep>,
}

impl FactorCertificate {
    /// Re-checks degrees against the report and the report against `g`,
    /// and the packings against the factor and its complement.
    pub fn verify(&self, g: &MultiGraph) -> Result<(), String> {
        let d = g.factor_degrees(&self.factor).map_err(|e| e.to_string())?;
        if self.degree_report.len() != g.vertex_count() {
            return Err("degree report does not cover every vertex".into());
        }
        for entry in &self.degree_report {
            let got = d[entry.vertex] as i64;
            if got != entry.achieved || !entry.allowed.contains(&got) {
                return Err(format!(
                    "vertex {} has degree {got}, allowed {:?}",
                    entry.vertex + 1,
                    entry.allowed
                ));
            }
        }
        let complement = g.complement(&self.factor);
        for (trees, part, name) in [
            (&self.factor_trees, &self.factor, "factor"),
            (&self.complement_trees, &complement, "complement"),
        ] {
            if let Some(t) = trees {
                t.verify(g)?;
                if t.trees.iter().any(|tree| !tree.difference(part).is_empty()) {
                    return Err(format!("a {name} tree leaves the {name}"));
                }
            }
        }
        Ok(())
    }
}

/// The parity obstruction: every gap `f - g` even and `Σ f` odd, so every
/// candidate degree sum is odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityCertificate {
    pub all_gaps_even: bool,
    pub sum_f: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GfOutcome {
    Factor(Box<FactorCertificate>),
    None(ParityCertificate),
}

impl GfOutcome {
    pub fn certificate(&self) -> Option<&FactorCertificate> {
        match self {
            GfOutcome::Factor(c) => Some(c),
            GfOutcome::None(_) => None,
        }
    }
}

/// Either some gap `f - g` is odd, or all are even and `Σ f` is even.
pub fn parity_criterion(lo: &VertexIntMap, hi: &VertexIntMap) -> Result<(), ParityCertificate> {
    let odd_gap = (0..lo.len()).any(|v| (hi[v] - lo[v]).rem_euclid(2) == 1);
    if odd_gap || hi.sum().rem_euclid(2) == 0 {
        Ok(())
    } else {
        Err(ParityCertificate {
            all_gaps_even: true,
            sum_f: hi.sum(),
        })
    }
}

/// Collects hypothesis outcomes and decides how a later failure is reported.
pub(crate) struct Gate {
    mode: HypothesisMode,
    unmet: Vec<&'static str>,
}

impl Gate {
    pub fn new(mode: HypothesisMode) -> Self {
        Gate {
            mode,
            unmet: Vec::new(),
        }
    }

    pub fn check(
        &mut self,
        name: &'static str,
        holds: bool,
        detail: impl FnOnce() -> String,
    ) -> Result<(), PipelineError> {
        if holds {
            return Ok(());
        }
        match self.mode {
            HypothesisMode::Strict => Err(PipelineError::Hypothesis {
                name,
                detail: detail(),
            }),
            HypothesisMode::Assume => {
                self.unmet.push(name);
                Ok(())
            }
        }
    }

    pub fn fail(&self, detail: impl Into<String>) -> PipelineError {
        if self.unmet.is_empty() {
            PipelineError::HardError(detail.into())
        } else {
            PipelineError::BelowHypotheses {
                unmet: self.unmet.clone(),
                detail: detail.into(),
            }
        }
    }

    /// Failure of a sub-construction whose hypotheses follow from ours.
    pub fn inner(&self, stage: &str, e: PipelineError) -> PipelineError {
        match e {
            PipelineError::Unknown(_) | PipelineError::Input(_) => e,
            other => self.fail(format!("{stage}: {other}")),
        }
    }

    pub fn decomposition(&self, stage: &str, e: DecompositionError) -> PipelineError {
        match e {
            DecompositionError::Unknown { .. } => PipelineError::Unknown(format!("{stage}: {e}")),
            DecompositionError::Graph(g) => g.into(),
            other => self.fail(format!("{stage}: {other}")),
        }
    }

    pub fn unmet(&self) -> Vec<&'static str> {
        self.unmet.clone()
    }
}

pub(crate) fn check_functions(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
) -> Result<(), PipelineError> {
    lo.check(g)?;
    hi.check(g)?;
    if let Some(v) = g.vertices().find(|&v| lo[v] > hi[v]) {
        return Err(PipelineError::Input(format!(
            "g({0}) = {1} exceeds f({0}) = {2}",
            v + 1,
            lo[v],
            hi[v]
        )));
    }
    Ok(())
}

/// `g + m0 <= d/2 <= f - m` at every vertex, as `2(g + m0) <= d <= 2(f - m)`.
pub(crate) fn window_violation(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    m: usize,
    m0: usize,
) -> Option<String> {
    let d = g.degrees();
    g.vertices()
        .find(|&v| {
            2 * (lo[v] + m0 as i64) > d[v] as i64 || (d[v] as i64) > 2 * (hi[v] - m as i64)
        })
        .map(|v| {
            format!(
                "at vertex {}: g + m0 = {}, d/2 = {}, f - m = {}",
                v + 1,
                lo[v] + m0 as i64,
                d[v] as f64 / 2.0,
                hi[v] - m as i64
            )
        })
}

pub(crate) fn max_gap(lo: &VertexIntMap, hi: &VertexIntMap) -> usize {
    (0..lo.len())
        .map(|v| (hi[v] - lo[v]).max(0) as usize)
        .max()
        .unwrap_or(0)
}

/// `bi(G) >= need`, exactly when the graph is small enough.
pub(crate) fn bi_at_least(g: &MultiGraph, need: usize) -> Result<bool, String> {
    if need == 0 {
        return Ok(true);
    }
    if g.vertex_count() > BI_EXACT_CAP {
        let b = crate::connectivity::bipartite_index_bounds(g, 0, 16);
        if b.lower >= need {
            return Ok(true);
        }
        if b.upper < need {
            return Ok(false);
        }
        return Err(format!("bi(G) is between {} and {}", b.lower, b.upper));
    }
    Ok(bipartite_index(g).expect("below cap").value >= need)
}

pub(crate) fn tree_connected(g: &MultiGraph, m: usize) -> Result<(), String> {
    spanning_tree_packing(g, m)
        .map(|_| ())
        .map_err(|r| r.to_string())
}

pub(crate) fn degree_report(
    g: &MultiGraph,
    f: &Factor,
    allowed: impl Fn(Vertex) -> Vec<i64>,
) -> Result<Vec<DegreeEntry>, PipelineError> {
    let d = g.factor_degrees(f)?;
    Ok(g.vertices()
        .map(|v| DegreeEntry {
            vertex: v,
            achieved: d[v] as i64,
            allowed: allowed(v),
        })
        .collect())
}

pub(crate) fn two_point(lo: &VertexIntMap, hi: &VertexIntMap, v: Vertex) -> Vec<i64> {
    if lo[v] == hi[v] {
        vec![lo[v]]
    } else {
        vec![lo[v], hi[v]]
    }
}

pub(crate) fn half_degrees(g: &MultiGraph, part: &Factor) -> Result<Vec<i64>, PipelineError> {
    Ok(g.factor_degrees(part)?
        .into_iter()
        .map(|d| {
            debug_assert!(d % 2 == 0);
            d as i64 / 2
        })
        .collect())
}

/// Finalizes a certificate: builds it, re-verifies it, and turns a failed
/// re-check into a failure of the construction.
pub(crate) fn finish(
    gate: &Gate,
    g: &MultiGraph,
    theorem: &'static str,
    factor: Factor,
    allowed: impl Fn(Vertex) -> Vec<i64>,
    trees: (Option<TreePacking>, Option<TreePacking>),
    derivation: Vec<DerivationStep>,
) -> Result<FactorCertificate, PipelineError> {
    let cert = FactorCertificate {
        theorem,
        degree_report: degree_report(g, &factor, allowed)?,
        factor,
        factor_trees: trees.0,
        complement_trees: trees.1,
        assumed: gate.unmet(),
        derivation,
    };
    cert.verify(g).map_err(|e| gate.fail(format!("certificate check: {e}")))?;
    Ok(cert)
}

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{Report, TrialOutcome, TrialRow};
use super::{evenize, functions_with, gen_with, splitmix64, GenSpec, HarnessError};
use crate::factors::{
    check_lovasz_condition, check_tutte_lemma_form, find_f_factor, find_interval_factor,
    first_factor_exhaustive, ENUMERATION_CAP,
};
use crate::graph::{Bipartition, MultiGraph, VertexIntMap, VertexListMap};
use crate::orientations::{
    enumerate_orientations, factor_from_orientation, orientation_from_factor, transform_lists,
};
use crate::pipeline::{
    balanced_selector, eulerian_half_factor, gf_factor_almost_bipartite, gf_factor_bi_large,
    gf_factor_bipartite, selector_with_difference, tough_hypothesis_check, tree_connected_gf,
    tree_connected_gf_bipartite, FactorCertificate, GfOutcome, HypothesisMode, PipelineError,
    RunConfig, TheoremParams,
};

/// The campaigns the harness can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    EulerianHalf,
    BipartiteGf,
    AlmostBipartite,
    BiLarge,
    TreeGfBipartite,
    TreeGf,
    ToughCheck,
    TutteEquiv,
    TutteLemma,
    LovaszEquiv,
    Bijection,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::EulerianHalf,
        TheoremId::BipartiteGf,
        TheoremId::AlmostBipartite,
        TheoremId::BiLarge,
        TheoremId::TreeGfBipartite,
        TheoremId::TreeGf,
        TheoremId::ToughCheck,
        TheoremId::TutteEquiv,
        TheoremId::TutteLemma,
        TheoremId::LovaszEquiv,
        TheoremId::Bijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::EulerianHalf => "eulerian-half",
            TheoremId::BipartiteGf => "bipartite-gf",
            TheoremId::AlmostBipartite => "almost-bipartite",
            TheoremId::BiLarge => "bi-large",
            TheoremId::TreeGfBipartite => "tree-gf-bipartite",
            TheoremId::TreeGf => "tree-gf",
            TheoremId::ToughCheck => "tough-check",
            TheoremId::TutteEquiv => "tutte-equiv",
            TheoremId::TutteLemma => "tutte-lemma",
            TheoremId::LovaszEquiv => "lovasz-equiv",
            TheoremId::Bijection => "bijection",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|t| t.name()).collect();
                format!("unknown theorem `{s}`, expected one of {}", names.join(", "))
            })
    }
}

/// Everything that determines a campaign. Equal parameters give equal reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignParams {
    pub theorem: TheoremId,
    pub trials: usize,
    pub params: TheoremParams,
    /// Total imbalance for `eulerian-half`.
    pub t: i64,
    pub n_min: usize,
    pub n_max: usize,
    pub master_seed: u64,
    pub mode: HypothesisMode,
}

impl CampaignParams {
    /// Per-theorem defaults sized for exhaustive cross-checks where possible.
    pub fn new(theorem: TheoremId, trials: usize, master_seed: u64) -> Self {
        let p = |k, m, m0| TheoremParams { k, m, m0, b: 0 };
        let (params, n_min, n_max) = match theorem {
            TheoremId::EulerianHalf => (p(1, 0, 0), 3, 7),
            TheoremId::BipartiteGf => (p(1, 0, 0), 4, 8),
            TheoremId::AlmostBipartite => (p(2, 0, 0), 4, 6),
            TheoremId::BiLarge => (p(1, 0, 0), 4, 7),
            TheoremId::TreeGfBipartite => (p(1, 1, 0), 4, 6),
            TheoremId::TreeGf => (p(1, 1, 0), 3, 6),
            TheoremId::ToughCheck => (p(1, 0, 0), 3, 8),
            TheoremId::TutteEquiv | TheoremId::TutteLemma | TheoremId::LovaszEquiv => {
                (p(1, 0, 0), 1, 6)
            }
            TheoremId::Bijection => (p(1, 0, 0), 2, 7),
        };
        CampaignParams {
            theorem,
            trials,
            params: TheoremParams {
                b: params.k + 1,
                ..params
            },
            t: 1,
            n_min,
            n_max,
            master_seed,
            mode: HypothesisMode::Strict,
        }
    }
}

/// Seed of trial `index`, split from the master seed.
pub fn trial_seed(master_seed: u64, index: usize) -> u64 {
    splitmix64(master_seed ^ splitmix64(index as u64))
}

/// Runs `params.trials` independent trials in parallel. Rows appear in
/// trial order whatever the scheduling.
pub fn verify_theorem(params: &CampaignParams) -> Report {
    let rows: Vec<TrialRow> = (0..params.trials)
        .into_par_iter()
        .map(|i| replay_trial(params, i, trial_seed(params.master_seed, i)))
        .collect();
    Report::from_rows(*params, rows)
}

/// Re-runs one trial from its seed.
pub fn replay_trial(params: &CampaignParams, index: usize, seed: u64) -> TrialRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(params.n_min..=params.n_max.max(params.n_min));
    let cfg = RunConfig {
        mode: params.mode,
        seed: rng.gen(),
    };
    let mut trial = Trial { params, rng, cfg, n };
    let (g, outcome) = match trial.run() {
        Ok(x) => x,
        Err(Early(g, outcome)) => (g, outcome),
    };
    TrialRow {
        index,
        seed,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        outcome,
    }
}

struct Trial<'a> {
    params: &'a CampaignParams,
    rng: ChaCha8Rng,
    cfg: RunConfig,
    n: usize,
}

/// A trial that ended before its main step.
struct Early(MultiGraph, TrialOutcome);

type TrialResult = Result<(MultiGraph, TrialOutcome), Early>;

impl Trial<'_> {
    fn run(&mut self) -> TrialResult {
        match self.params.theorem {
            TheoremId::EulerianHalf => self.eulerian_half(),
            TheoremId::BipartiteGf => self.bipartite_gf(),
            TheoremId::AlmostBipartite => self.almost_bipartite(),
            TheoremId::BiLarge => self.bi_large(),
            TheoremId::TreeGfBipartite => self.tree_gf_bipartite(),
            TheoremId::TreeGf => self.tree_gf(),
            TheoremId::ToughCheck => self.tough_check(),
            TheoremId::TutteEquiv => self.tutte_equiv(),
            TheoremId::TutteLemma => self.tutte_lemma(),
            TheoremId::LovaszEquiv => self.lovasz_equiv(),
            TheoremId::Bijection => self.bijection(),
        }
    }

    fn generate(&mut self, trees: usize, bipartite: bool) -> Result<(MultiGraph, Option<Bipartition>), Early> {
        let spec = GenSpec {
            n: self.n.max(2),
            trees,
            extra_edges: self.rng.gen_range(0..=self.n),
            bipartite,
            seed: 0,
        };
        let gen = gen_with(&spec, &mut self.rng)
            .map_err(|e| Early(MultiGraph::new(spec.n), TrialOutcome::hard(e.to_string())))?;
        Ok((gen.graph, gen.partition))
    }

    fn functions(&mut self, g: &MultiGraph, m: usize, m0: usize) -> Result<(VertexIntMap, VertexIntMap), Early> {
        functions_with(g, self.params.params.k, m, m0, &mut self.rng).map_err(|e| {
            let outcome = match e {
                HarnessError::EmptyWindow { .. } => TrialOutcome::Refusal {
                    hypothesis: "degree window".into(),
                },
                other => TrialOutcome::hard(other.to_string()),
            };
            Early(g.clone(), outcome)
        })
    }

    fn eulerian_half(&mut self) -> TrialResult {
        let t = self.params.t.max(0);
        let (mut g, _) = self.generate((2 * t as usize).max(1), false)?;
        evenize(&mut g, None, &mut self.rng);
        if (g.edge_count() as i64 - t).rem_euclid(2) == 1 {
            let v = self.rng.gen_range(0..g.vertex_count());
            g.add_edge(v, v).expect("valid vertex");
        }
        let d = g.degrees();
        let mut i = VertexIntMap::constant(g.vertex_count(), 0);
        let mut placed = 0;
        for _ in 0..100 * (t + 1) {
            if placed == t {
                break;
            }
            let v = self.rng.gen_range(0..g.vertex_count());
            let sign = match i[v].signum() {
                0 => *[-1, 1].choose(&mut self.rng).unwrap(),
                s => s,
            };
            if (i[v] + sign).abs() <= d[v] as i64 / 2 {
                i[v] += sign;
                placed += 1;
            }
        }
        let target: Vec<i64> = (0..g.vertex_count()).map(|v| d[v] as i64 / 2 + i[v]).collect();
        let res = eulerian_half_factor(&g, &i, &self.cfg);
        let outcome = certified(&g, res, |deg| {
            deg.iter().zip(&target).all(|(&a, &b)| a as i64 == b)
        });
        Ok((g, outcome))
    }

    fn bipartite_gf(&mut self) -> TrialResult {
        let k = self.params.params.k;
        let (g, p) = self.generate(4 * k * k, true)?;
        let p = p.expect("bipartite spec");
        let (lo, hi) = self.functions(&g, 0, 0)?;
        let Some(h) = balanced_selector(&g, &p, &lo, &hi) else {
            let outcome = certify_none(&g, &lo, &hi, "no balanced selector");
            return Ok((g, outcome));
        };
        let z = self.rng.gen_range(0..g.vertex_count());
        let res = gf_factor_bipartite(&g, &p, &lo, &hi, &h, Some(z), &self.cfg);
        let outcome = certified(&g, res, two_point_pred(&lo, &hi));
        Ok((g, outcome))
    }

    fn almost_bipartite(&mut self) -> TrialResult {
        let k = self.params.params.k;
        let (mut g, p) = self.generate(4 * k * k + 2 * k, true)?;
        let p = p.expect("bipartite spec");
        let intra = self.rng.gen_range(0..k);
        self.add_intra(&mut g, &p, intra);
        let (lo, hi) = self.functions(&g, 0, 0)?;
        let ex = g.inside_count(p.mask()) as i64;
        let h = selector_with_difference(&g, &p, &lo, &hi, |d| {
            d.rem_euclid(2) == 0 && 0 <= d && d <= 2 * ex + 1
        });
        let Some(h) = h else {
            let outcome = TrialOutcome::Refusal {
                hypothesis: "selector h".into(),
            };
            return Ok((g, outcome));
        };
        let res = gf_factor_almost_bipartite(&g, &lo, &hi, &h, k, Some(&p), &self.cfg);
        let outcome = certified(&g, res, two_point_pred(&lo, &hi));
        Ok((g, outcome))
    }

    fn bi_large(&mut self) -> TrialResult {
        let k = self.params.params.k;
        let (mut g, p) = self.generate(3 * k * k, true)?;
        let p = p.expect("bipartite spec");
        let intra = self.rng.gen_range(k - 1..=k + 1);
        self.add_intra(&mut g, &p, intra);
        let (lo, hi) = self.functions(&g, 0, 0)?;
        let res = gf_factor_bi_large(&g, &lo, &hi, k, Some(&p), &self.cfg);
        Ok((g.clone(), gf_outcome(&g, &lo, &hi, res)))
    }

    fn tree_gf_bipartite(&mut self) -> TrialResult {
        let TheoremParams { k, m, m0, .. } = self.params.params;
        let (mut g, p) = self.generate(2 * m + 2 * m0 + 4 * k * k, true)?;
        let p = p.expect("bipartite spec");
        evenize(&mut g, Some(&p), &mut self.rng);
        let (lo, hi) = self.functions(&g, m, m0)?;
        let Some(h) = balanced_selector(&g, &p, &lo, &hi) else {
            let outcome = certify_none(&g, &lo, &hi, "no balanced selector");
            return Ok((g, outcome));
        };
        let z = self.rng.gen_range(0..g.vertex_count());
        let res = tree_connected_gf_bipartite(&g, &p, &lo, &hi, &h, &self.params.params, Some(z), &self.cfg);
        let outcome = certified(&g, res, two_point_pred(&lo, &hi));
        Ok((g, outcome))
    }

    fn tree_gf(&mut self) -> TrialResult {
        let TheoremParams { k, m, m0, .. } = self.params.params;
        let (mut g, _) = self.generate(2 * m + 2 * m0 + 6 * k * k, false)?;
        evenize(&mut g, None, &mut self.rng);
        let (lo, hi) = self.functions(&g, m, m0)?;
        let res = tree_connected_gf(&g, &lo, &hi, &self.params.params, &self.cfg);
        Ok((g.clone(), gf_outcome(&g, &lo, &hi, res)))
    }

    fn tough_check(&mut self) -> TrialResult {
        let TheoremParams { m, m0, .. } = self.params.params;
        let (g, _) = self.generate(2, false)?;
        let (lo, hi) = self.functions(&g, m, m0)?;
        let outcome = match tough_hypothesis_check(&g, &lo, &hi, &self.params.params) {
            Ok(r) => TrialOutcome::success(format!(
                "toughness {}, {} of {} hypotheses hold",
                r.toughness,
                r.lines.iter().filter(|l| l.holds).count(),
                r.lines.len()
            )),
            Err(e) => TrialOutcome::hard(e.to_string()),
        };
        Ok((g, outcome))
    }

    /// A random multigraph with loops on `n` vertices and at most 8 edges.
    fn small_multigraph(&mut self, connected: bool) -> MultiGraph {
        let n = self.n.max(1);
        let mut g = MultiGraph::new(n);
        if connected {
            for v in 1..n {
                let u = self.rng.gen_range(0..v);
                g.add_edge(u, v).expect("valid vertices");
            }
        }
        let budget = 8usize.saturating_sub(g.edge_count());
        for _ in 0..self.rng.gen_range(0..=budget) {
            let (u, v) = (self.rng.gen_range(0..n), self.rng.gen_range(0..n));
            g.add_edge(u, v).expect("valid vertices");
        }
        g
    }

    fn random_interval(&mut self, g: &MultiGraph) -> (VertexIntMap, VertexIntMap) {
        let d = g.degrees();
        let mut lo = VertexIntMap::constant(g.vertex_count(), 0);
        let mut hi = lo.clone();
        for v in g.vertices() {
            let a = self.rng.gen_range(0..=d[v] as i64);
            let b = self.rng.gen_range(0..=d[v] as i64);
            (lo[v], hi[v]) = (a.min(b), a.max(b));
        }
        (lo, hi)
    }

    fn tutte_equiv(&mut self) -> TrialResult {
        let g = self.small_multigraph(false);
        let d = g.degrees();
        let f = VertexIntMap::from_fn(g.vertex_count(), |v| self.rng.gen_range(0..=d[v] as i64));
        let outcome = (|| {
            let oracle = first_factor_exhaustive(&g, |deg| exact(deg, &f))?.is_some();
            let built = find_f_factor(&g, &f)?;
            let criterion = check_lovasz_condition(&g, &f, &f)?.holds();
            if let Some(ff) = &built {
                let deg = g.factor_degrees(ff)?;
                if !exact(&deg, &f) {
                    return Ok(TrialOutcome::hard("constructed factor has wrong degrees"));
                }
            }
            Ok::<_, crate::factors::FactorError>(agreement(oracle, built.is_some(), criterion))
        })()
        .unwrap_or_else(|e| TrialOutcome::hard(e.to_string()));
        Ok((g, outcome))
    }

    fn tutte_lemma(&mut self) -> TrialResult {
        let g = self.small_multigraph(true);
        let d = g.degrees();
        let mut f = VertexIntMap::from_fn(g.vertex_count(), |v| self.rng.gen_range(0..=d[v] as i64));
        if f.sum().rem_euclid(2) == 1 {
            // some vertex has odd f, so it can move by one within [0, d]
            let v = g.vertices().find(|&v| f[v] % 2 == 1).expect("odd sum has an odd term");
            f[v] -= 1;
        }
        let outcome = (|| {
            let oracle = first_factor_exhaustive(&g, |deg| exact(deg, &f))?.is_some();
            let criterion = check_tutte_lemma_form(&g, &f)?.holds();
            Ok::<_, crate::factors::FactorError>(agreement(oracle, oracle, criterion))
        })()
        .unwrap_or_else(|e| TrialOutcome::hard(e.to_string()));
        Ok((g, outcome))
    }

    fn lovasz_equiv(&mut self) -> TrialResult {
        let g = self.small_multigraph(false);
        let (lo, hi) = self.random_interval(&g);
        let outcome = (|| {
            let oracle = first_factor_exhaustive(&g, |deg| {
                deg.iter().enumerate().all(|(v, &x)| lo[v] <= x as i64 && x as i64 <= hi[v])
            })?
            .is_some();
            let built = find_interval_factor(&g, &lo, &hi)?.is_some();
            let criterion = check_lovasz_condition(&g, &lo, &hi)?.holds();
            Ok::<_, crate::factors::FactorError>(agreement(oracle, built, criterion))
        })()
        .unwrap_or_else(|e| TrialOutcome::hard(e.to_string()));
        Ok((g, outcome))
    }

    fn bijection(&mut self) -> TrialResult {
        let n = self.n.max(2);
        let mask: Vec<bool> = (0..n).map(|v| v % 2 == 0).collect();
        let p = Bipartition::from_mask(mask);
        let xs = p.x();
        let ys = p.y();
        let mut g = MultiGraph::new(n);
        for _ in 0..self.rng.gen_range(1..=12) {
            let x = *xs.choose(&mut self.rng).unwrap();
            let y = *ys.choose(&mut self.rng).unwrap();
            g.add_edge(x, y).expect("valid vertices");
        }
        let d = g.degrees();
        let lists = VertexListMap::new(
            (0..n)
                .map(|v| {
                    let size = self.rng.gen_range(1..=3);
                    (0..size).map(|_| self.rng.gen_range(0..=d[v] as i64)).collect()
                })
                .collect(),
        );
        let outcome = (|| {
            // round trip of a random factor
            let picks: Vec<_> = g.edges().iter().filter(|_| self.rng.gen_bool(0.5)).map(|e| e.id).collect();
            let f = crate::graph::Factor::from_ids(picks);
            let o = orientation_from_factor(&g, &p, &f).map_err(|e| e.to_string())?;
            let back = factor_from_orientation(&g, &p, &o).map_err(|e| e.to_string())?;
            if back != f {
                return Ok(TrialOutcome::hard("factor -> orientation -> factor changed the factor"));
            }
            let df = g.factor_degrees(&f).map_err(|e| e.to_string())?;
            let out = o.out_degrees(n);
            if let Some(v) = (0..n).find(|&v| {
                let want = if p.in_x(v) { df[v] } else { d[v] - df[v] };
                out[v] != want
            }) {
                return Ok(TrialOutcome::hard(format!("degree law fails at vertex {}", v + 1)));
            }
            // list factors and orientations with transformed lists exist together
            let factor_exists = first_factor_exhaustive(&g, |deg| {
                deg.iter().enumerate().all(|(v, &x)| lists.allows(v, x as i64))
            })
            .map_err(|e| e.to_string())?
            .is_some();
            let moved = transform_lists(&g, &p, &lists);
            let orientation_exists = !enumerate_orientations(&g, |out| {
                out.iter().enumerate().all(|(v, &x)| moved.allows(v, x as i64))
            })
            .map_err(|e| e.to_string())?
            .is_empty();
            Ok::<_, String>(if factor_exists == orientation_exists {
                TrialOutcome::success(if factor_exists { "both exist" } else { "neither exists" })
            } else {
                TrialOutcome::hard(format!(
                    "list factor exists: {factor_exists}, orientation exists: {orientation_exists}"
                ))
            })
        })()
        .unwrap_or_else(TrialOutcome::hard);
        Ok((g, outcome))
    }

    fn add_intra(&mut self, g: &mut MultiGraph, p: &Bipartition, count: usize) {
        let sides: Vec<Vec<usize>> = [p.x(), p.y()].into_iter().filter(|s| s.len() >= 2).collect();
        if sides.is_empty() {
            return;
        }
        for _ in 0..count {
            let side = sides.choose(&mut self.rng).unwrap();
            let pair: Vec<_> = side.choose_multiple(&mut self.rng, 2).copied().collect();
            g.add_edge(pair[0], pair[1]).expect("valid vertices");
        }
    }
}

fn exact(deg: &[usize], f: &VertexIntMap) -> bool {
    deg.iter().enumerate().all(|(v, &x)| x as i64 == f[v])
}

fn two_point_pred<'a>(lo: &'a VertexIntMap, hi: &'a VertexIntMap) -> impl Fn(&[usize]) -> bool + 'a {
    move |deg| {
        deg.iter()
            .enumerate()
            .all(|(v, &x)| x as i64 == lo[v] || x as i64 == hi[v])
    }
}

fn agreement(oracle: bool, built: bool, criterion: bool) -> TrialOutcome {
    if oracle == built && oracle == criterion {
        TrialOutcome::success(if oracle { "exists" } else { "none" })
    } else {
        TrialOutcome::hard(format!(
            "disagreement: enumeration {oracle}, construction {built}, criterion {criterion}"
        ))
    }
}

/// Exhaustive existence, when the graph is small enough.
fn oracle_exists(g: &MultiGraph, pred: impl Fn(&[usize]) -> bool) -> Option<bool> {
    if g.edge_count() > ENUMERATION_CAP {
        return None;
    }
    first_factor_exhaustive(g, pred).ok().map(|f| f.is_some())
}

/// A claim of non-existence, confirmed by enumeration when feasible.
fn certify_none(g: &MultiGraph, lo: &VertexIntMap, hi: &VertexIntMap, why: &str) -> TrialOutcome {
    match oracle_exists(g, two_point_pred(lo, hi)) {
        Some(true) => TrialOutcome::hard(format!("{why}, but enumeration found a factor")),
        _ => TrialOutcome::success(format!("none: {why}")),
    }
}

fn gf_outcome(
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    res: Result<GfOutcome, PipelineError>,
) -> TrialOutcome {
    match res {
        Ok(GfOutcome::None(_)) => certify_none(g, lo, hi, "parity criterion"),
        Ok(GfOutcome::Factor(c)) => certified(g, Ok(*c), two_point_pred(lo, hi)),
        Err(e) => certified(g, Err(e), two_point_pred(lo, hi)),
    }
}

/// Re-checks a certificate against the graph and the degree predicate.
fn certified(
    g: &MultiGraph,
    res: Result<FactorCertificate, PipelineError>,
    pred: impl Fn(&[usize]) -> bool,
) -> TrialOutcome {
    match res {
        Ok(cert) => {
            if let Err(e) = cert.verify(g) {
                return TrialOutcome::hard(format!("certificate rejected: {e}"));
            }
            match g.factor_degrees(&cert.factor) {
                Ok(deg) if pred(&deg) => TrialOutcome::success(format!("factor of {} edges", cert.factor.len())),
                _ => TrialOutcome::hard("factor degrees outside the allowed sets"),
            }
        }
        Err(PipelineError::Hypothesis { name, .. }) => TrialOutcome::Refusal {
            hypothesis: name.to_string(),
        },
        Err(PipelineError::BelowHypotheses { unmet, .. }) => TrialOutcome::Refusal {
            hypothesis: format!("below hypotheses: {}", unmet.join(", ")),
        },
        Err(PipelineError::Unknown(detail)) => TrialOutcome::Unknown { detail },
        Err(e @ (PipelineError::HardError(_) | PipelineError::Input(_))) => TrialOutcome::hard(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn small_campaigns_have_no_hard_errors() {
        for t in TheoremId::ALL {
            let report = verify_theorem(&CampaignParams::new(t, 6, 11));
            assert!(report.hard_errors.is_empty(), "{t}: {:?}", report.hard_errors);
            assert_eq!(report.trials, 6);
        }
    }

    #[test]
    fn replay_matches_campaign_row() {
        let params = CampaignParams::new(TheoremId::BipartiteGf, 4, 5);
        let report = verify_theorem(&params);
        let row = &report.rows[2];
        assert_eq!(&replay_trial(&params, 2, row.seed), row);
    }
}

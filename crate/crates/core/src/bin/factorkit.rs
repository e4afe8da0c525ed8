use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use factorkit::connectivity::{
    bipartite_index, bipartite_index_bounds, edge_connectivity, toughness, tree_connectivity,
    BI_EXACT_CAP,
};
use factorkit::decompositions::{decompose_eulerian, decompose_keep_bi, split_tree_connected_complement};
use factorkit::factors::{find_interval_factor, find_two_point_factor};
use factorkit::graph::{parse_graph_file, Bipartition, GraphFile, MultiGraph, VertexIntMap};
use factorkit::harness::{evenize, gen_functions, gen_tree_connected, verify_theorem, CampaignParams, GenSpec};
use factorkit::orientations::{eulerian_orientation, interval_orientation};
use factorkit::pipeline::{
    balanced_selector, eulerian_half_factor, gf_factor_almost_bipartite, gf_factor_bi_large,
    gf_factor_bipartite, selector_with_difference, tree_connected_gf, tree_connected_gf_bipartite,
    GfOutcome, HypothesisMode, PipelineError, RunConfig, TheoremParams,
};
use factorkit::search::Search;

#[derive(Parser)]
#[command(name = "factorkit", version, about = "{g,f}-factors and orientations of multigraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    TwoPoint,
    Interval,
    EulerianHalf,
    BipartiteGf,
    AlmostBipartite,
    BiLarge,
    TreeGfBipartite,
    TreeGf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Split {
    Eulerian,
    KeepBi,
    Complement,
}

#[derive(clap::Args, Clone, Copy)]
struct Params {
    /// Gap bound; defaults to the largest f - g in the input.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    m0: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a union of random spanning trees, optionally with g and f.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        trees: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        #[arg(long)]
        bipartite: bool,
        /// Make every degree even.
        #[arg(long)]
        even: bool,
        /// Also sample g and f with this gap bound.
        #[arg(long)]
        functions: Option<usize>,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        m0: usize,
    },
    /// Find a factor for the g and f lines of a graph file.
    Factor {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::TwoPoint)]
        method: Method,
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        assume_hypotheses: bool,
    },
    /// Orient with out-degrees between the g and f lines, or Eulerian.
    Orient {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        eulerian: bool,
    },
    /// Run one of the edge decompositions.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: Split,
        #[arg(long, default_value_t = 1)]
        m1: usize,
        #[arg(long, default_value_t = 1)]
        m2: usize,
        /// Intra-part edges to keep (keep-bi only).
        #[arg(long, default_value_t = 0)]
        k0: usize,
    },
    /// Run a randomized verification campaign.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        m0: Option<usize>,
        /// Imbalance for eulerian-half.
        #[arg(long)]
        t: Option<i64>,
        #[arg(long)]
        assume_hypotheses: bool,
    },
    /// Exact toughness.
    Toughness {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Bipartite index, exact or bracketed.
    Bi {
        #[arg(long)]
        graph: PathBuf,
    },
}

/// Exit status: 0 done (including refusals), 1 hard error, 2 bad input.
enum Failure {
    Hard(String),
    Input(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Hard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn input(e: impl ToString) -> Failure {
    Failure::Input(e.to_string())
}

fn load(path: &PathBuf) -> Result<GraphFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse_graph_file(&text).map_err(input)
}

fn load_gf(path: &PathBuf) -> Result<(MultiGraph, VertexIntMap, VertexIntMap), Failure> {
    let file = load(path)?;
    let (lo, hi) = file.gf().ok_or_else(|| input("every vertex needs an `f <v> <g> <f>` line"))?;
    Ok((file.graph, lo, hi))
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Gen { n, trees, extra, bipartite, even, functions, m, m0 } => {
            let spec = GenSpec {
                n: *n,
                trees: *trees,
                extra_edges: *extra,
                bipartite: *bipartite,
                seed: cli.seed,
            };
            let gen = gen_tree_connected(&spec).map_err(input)?;
            let mut g = gen.graph;
            if *even {
                evenize(&mut g, gen.partition.as_ref(), &mut ChaCha8Rng::seed_from_u64(cli.seed));
            }
            let file = match functions {
                Some(k) => {
                    let (lo, hi) = gen_functions(&g, *k, *m, *m0, cli.seed).map_err(input)?;
                    GraphFile::with_functions(g, &lo, &hi)
                }
                None => GraphFile::new(g),
            };
            print!("{}", file.to_text());
            Ok(())
        }
        Cmd::Factor { graph, method, params, assume_hypotheses } => {
            let (g, lo, hi) = load_gf(graph)?;
            let cfg = RunConfig {
                mode: if *assume_hypotheses { HypothesisMode::Assume } else { HypothesisMode::Strict },
                seed: cli.seed,
            };
            factor(cli.format, &g, &lo, &hi, *method, params, &cfg)
        }
        Cmd::Orient { graph, eulerian } => {
            let o = if *eulerian {
                let g = load(graph)?.graph;
                Some(eulerian_orientation(&g).map_err(input)?)
            } else {
                let (g, lo, hi) = load_gf(graph)?;
                interval_orientation(&g, &lo, &hi).map_err(input)?
            };
            emit(cli.format, &o, || match &o {
                Some(o) => o.arcs().iter().map(|(t, h)| format!("{} -> {}\n", t + 1, h + 1)).collect(),
                None => "no orientation\n".into(),
            });
            Ok(())
        }
        Cmd::Decompose { graph, kind, m1, m2, k0 } => {
            let g = load(graph)?.graph;
            let text = |a: &str, b: &str| format!("first  {a}\nsecond {b}\n");
            match kind {
                Split::Eulerian => {
                    let p = witness(&g, cli.seed);
                    let s = decompose_eulerian(&g, &p, *m1, *m2).map_err(|e| Failure::Hard(e.to_string()))?;
                    emit(cli.format, &s, || text(&ids(&s.g1), &ids(&s.g2)));
                }
                Split::KeepBi => {
                    let s = decompose_keep_bi(&g, *m1, *m2, *k0, cli.seed).map_err(|e| Failure::Hard(e.to_string()))?;
                    emit(cli.format, &s, || text(&ids(&s.g1), &ids(&s.g2)));
                }
                Split::Complement => {
                    let s = split_tree_connected_complement(&g, *m1, *m2, cli.seed)
                        .map_err(|e| Failure::Hard(e.to_string()))?;
                    emit(cli.format, &s, || text(&ids(&s.h), &ids(&g.complement(&s.h))));
                }
            }
            Ok(())
        }
        Cmd::Verify { theorem, trials, k, m, m0, t, assume_hypotheses } => {
            let id = theorem.parse().map_err(input)?;
            let mut params = CampaignParams::new(id, *trials, cli.seed);
            params.params.k = k.unwrap_or(params.params.k);
            params.params.m = m.unwrap_or(params.params.m);
            params.params.m0 = m0.unwrap_or(params.params.m0);
            params.t = t.unwrap_or(params.t);
            if *assume_hypotheses {
                params.mode = HypothesisMode::Assume;
            }
            if params.params.k == 0 {
                return Err(input("k must be positive"));
            }
            let start = std::time::Instant::now();
            let report = verify_theorem(&params);
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            eprintln!("wall time {:.2?}", start.elapsed());
            if report.hard_errors.is_empty() {
                Ok(())
            } else {
                Err(Failure::Hard(format!("{} hard errors", report.hard_errors.len())))
            }
        }
        Cmd::Toughness { graph } => {
            let g = load(graph)?.graph;
            let t = toughness(&g).map_err(input)?;
            let witness: Vec<String> = t.witness.iter().map(|v| (v + 1).to_string()).collect();
            emit(cli.format, &t, || format!("toughness {}\ncut {}\n", t.value, witness.join(" ")));
            Ok(())
        }
        Cmd::Bi { graph } => {
            let g = load(graph)?.graph;
            #[derive(Serialize)]
            struct Summary {
                exact: Option<usize>,
                lower: usize,
                upper: usize,
                edge_connectivity: Option<usize>,
                tree_connectivity: Option<usize>,
                witness_x: Vec<usize>,
            }
            let (exact, lower, upper, p) = if g.vertex_count() <= BI_EXACT_CAP {
                let b = bipartite_index(&g).map_err(input)?;
                (Some(b.value), b.value, b.value, b.witness)
            } else {
                let b = bipartite_index_bounds(&g, cli.seed, 8);
                (None, b.lower, b.upper, b.witness)
            };
            let s = Summary {
                exact,
                lower,
                upper,
                edge_connectivity: edge_connectivity(&g),
                tree_connectivity: tree_connectivity(&g),
                witness_x: p.x().iter().map(|v| v + 1).collect(),
            };
            emit(cli.format, &s, || {
                let bi = match s.exact {
                    Some(b) => b.to_string(),
                    None => format!("{}..={}", s.lower, s.upper),
                };
                let opt = |x: Option<usize>| x.map_or("infinite".into(), |x| x.to_string());
                format!(
                    "bi {bi}\nedge connectivity {}\ntree connectivity {}\nX {:?}\n",
                    opt(s.edge_connectivity),
                    opt(s.tree_connectivity),
                    s.witness_x
                )
            });
            Ok(())
        }
    }
}

fn ids(f: &factorkit::graph::Factor) -> String {
    f.ids().iter().map(|id| id.to_string()).collect::<Vec<_>>().join(" ")
}

fn witness(g: &MultiGraph, seed: u64) -> Bipartition {
    match bipartite_index(g) {
        Ok(b) => b.witness,
        Err(_) => bipartite_index_bounds(g, seed, 8).witness,
    }
}

fn factor(
    format: Format,
    g: &MultiGraph,
    lo: &VertexIntMap,
    hi: &VertexIntMap,
    method: Method,
    params: &Params,
    cfg: &RunConfig,
) -> Result<(), Failure> {
    let gap = (0..g.vertex_count()).map(|v| hi[v] - lo[v]).max().unwrap_or(0).max(1) as usize;
    let tp = TheoremParams {
        k: params.k.unwrap_or(gap),
        m: params.m,
        m0: params.m0,
        b: 0,
    };
    let found = |f: Option<factorkit::graph::Factor>| {
        emit(format, &f, || match &f {
            Some(f) => format!("factor {}\n", ids(f)),
            None => "no factor\n".into(),
        });
        Ok(())
    };
    let result = match method {
        Method::TwoPoint => {
            return match find_two_point_factor(g, lo, hi, None).map_err(input)? {
                Search::Found(f) => found(Some(f)),
                Search::NotFound => found(None),
                Search::Unknown => Err(Failure::Hard("search budget exhausted".into())),
            }
        }
        Method::Interval => return found(find_interval_factor(g, lo, hi).map_err(input)?),
        Method::EulerianHalf => {
            let d = g.degrees();
            let i = VertexIntMap::from_fn(g.vertex_count(), |v| lo[v] - d[v] as i64 / 2);
            eulerian_half_factor(g, &i, cfg).map(|c| GfOutcome::Factor(Box::new(c)))
        }
        Method::BipartiteGf | Method::TreeGfBipartite => {
            let p = witness(g, cfg.seed);
            let Some(h) = balanced_selector(g, &p, lo, hi) else {
                emit(format, &Option::<()>::None, || "no factor: no balanced selector\n".into());
                return Ok(());
            };
            let cert = if matches!(method, Method::BipartiteGf) {
                gf_factor_bipartite(g, &p, lo, hi, &h, None, cfg)
            } else {
                tree_connected_gf_bipartite(g, &p, lo, hi, &h, &tp, None, cfg)
            };
            cert.map(|c| GfOutcome::Factor(Box::new(c)))
        }
        Method::AlmostBipartite => {
            let p = witness(g, cfg.seed);
            let ex = g.inside_count(p.mask()) as i64;
            let h = selector_with_difference(g, &p, lo, hi, |d| d.rem_euclid(2) == 0 && (0..=2 * ex + 1).contains(&d))
                .ok_or_else(|| input("no selector h with an admissible difference"))?;
            gf_factor_almost_bipartite(g, lo, hi, &h, tp.k, Some(&p), cfg).map(|c| GfOutcome::Factor(Box::new(c)))
        }
        Method::BiLarge => gf_factor_bi_large(g, lo, hi, tp.k, None, cfg),
        Method::TreeGf => tree_connected_gf(g, lo, hi, &tp, cfg),
    };
    match result {
        Ok(outcome) => {
            emit(format, &outcome, || match &outcome {
                GfOutcome::Factor(c) => {
                    let mut s = format!("theorem {}\nfactor {}\n", c.theorem, ids(&c.factor));
                    for e in &c.degree_report {
                        s += &format!("  vertex {:>4}  degree {:>4}  allowed {:?}\n", e.vertex + 1, e.achieved, e.allowed);
                    }
                    if !c.assumed.is_empty() {
                        s += &format!("assumed {:?}\n", c.assumed);
                    }
                    s
                }
                GfOutcome::None(p) => format!("no factor: every gap is even and Σf = {} is odd\n", p.sum_f),
            });
            Ok(())
        }
        Err(PipelineError::Hypothesis { name, detail }) => {
            #[derive(Serialize)]
            struct Refusal<'a> {
                refused: &'a str,
                detail: &'a str,
            }
            emit(format, &Refusal { refused: name, detail: &detail }, || {
                format!("refused: hypothesis `{name}` fails: {detail}\n")
            });
            Ok(())
        }
        Err(e @ PipelineError::Input(_)) => Err(input(e)),
        Err(e) => Err(Failure::Hard(e.to_string())),
    }
}

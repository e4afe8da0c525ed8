// The parity criterion for graphs far from bipartite, the Eulerian half
// factors it relies on, and what assume-mode reports below the hypotheses.

use std::error::Error;

use factorkit::graph::{MultiGraph, VertexIntMap};
use factorkit::harness::{gen_functions, gen_tree_connected, GenSpec};
use factorkit::pipeline::{
    eulerian_half_factor, gf_factor_bi_large, GfOutcome, HypothesisMode, PipelineError, RunConfig,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let gen = gen_tree_connected(&GenSpec { n: 6, trees: 3, extra_edges: 0, bipartite: true, seed: 5 })?;
    let p = gen.partition.ok_or("bipartite spec")?;
    let mut g = gen.graph;
    let x = p.x();
    g.add_edge(x[0], x[1])?;
    let (lo, hi) = gen_functions(&g, 1, 0, 0, 5)?;
    match gf_factor_bi_large(&g, &lo, &hi, 1, Some(&p), &RunConfig::strict(5))? {
        GfOutcome::Factor(cert) => {
            cert.verify(&g)?;
            println!("factor {}", cert.factor);
        }
        GfOutcome::None(c) => println!("no factor, Σf = {}", c.sum_f),
    }

    // all gaps even and Σf odd: the answer is no without any search
    let d = g.degrees();
    let f = VertexIntMap::from_fn(6, |v| d[v] as i64 / 2 + if v == 0 { 1 } else { 0 });
    let total = f.sum();
    let f = if total % 2 == 1 { f } else { VertexIntMap::from_fn(6, |v| f[v] + if v == 1 { 1 } else { 0 }) };
    match gf_factor_bi_large(&g, &f, &f, 1, Some(&p), &RunConfig::strict(5))? {
        GfOutcome::None(c) => println!("parity certificate: all gaps even {}, Σf = {}", c.all_gaps_even, c.sum_f),
        GfOutcome::Factor(_) => println!("unexpected factor"),
    }

    // d_F = d/2 on a doubled triangle, and two disjoint triangles where it fails
    let doubled = MultiGraph::from_pairs(3, &[(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)])?;
    let cert = eulerian_half_factor(&doubled, &VertexIntMap::constant(3, 0), &RunConfig::default())?;
    println!("half factor {}", cert.factor);
    let split = MultiGraph::from_pairs(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])?;
    let assume = RunConfig { mode: HypothesisMode::Assume, seed: 0 };
    match eulerian_half_factor(&split, &VertexIntMap::constant(6, 0), &assume) {
        Err(PipelineError::BelowHypotheses { unmet, detail }) => println!("below hypotheses {unmet:?}: {detail}"),
        other => println!("{other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

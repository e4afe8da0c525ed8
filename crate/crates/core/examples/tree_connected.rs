// Factors that are themselves tree-connected, with a tree-connected
// complement, plus the toughness hypothesis report.

use std::error::Error;

use factorkit::harness::{evenize, gen_functions, gen_tree_connected, GenSpec};
use factorkit::pipeline::{
    balanced_selector, tough_hypothesis_check, tree_connected_gf, tree_connected_gf_bipartite,
    GfOutcome, RunConfig, TheoremParams,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = TheoremParams { k: 1, m: 1, m0: 0, b: 0 };

    let gen = gen_tree_connected(&GenSpec { n: 6, trees: 6, extra_edges: 2, bipartite: true, seed: 9 })?;
    let p = gen.partition.ok_or("bipartite spec")?;
    let mut g = gen.graph;
    evenize(&mut g, Some(&p), &mut ChaCha8Rng::seed_from_u64(9));
    let (lo, hi) = gen_functions(&g, 1, 1, 0, 9)?;
    if let Some(h) = balanced_selector(&g, &p, &lo, &hi) {
        let cert = tree_connected_gf_bipartite(&g, &p, &lo, &hi, &h, &params, None, &RunConfig::strict(9))?;
        cert.verify(&g)?;
        let trees = cert.factor_trees.as_ref().map_or(0, |t| t.trees.len());
        println!("bipartite: factor of {} edges holding {trees} spanning tree(s)", cert.factor.len());
    }

    let gen = gen_tree_connected(&GenSpec { n: 5, trees: 8, extra_edges: 1, bipartite: false, seed: 10 })?;
    let mut g = gen.graph;
    evenize(&mut g, None, &mut ChaCha8Rng::seed_from_u64(10));
    let (lo, hi) = gen_functions(&g, 1, 1, 0, 10)?;
    match tree_connected_gf(&g, &lo, &hi, &params, &RunConfig::strict(10))? {
        GfOutcome::Factor(cert) => {
            cert.verify(&g)?;
            println!("general: factor of {} edges, theorem {}", cert.factor.len(), cert.theorem);
        }
        GfOutcome::None(c) => println!("general: no factor, Σf = {}", c.sum_f),
    }

    // the toughness theorem only applies to very large graphs; show why this one misses
    let report = tough_hypothesis_check(&g, &lo, &hi, &TheoremParams { b: 3, ..params })?;
    for line in &report.lines {
        println!("{:<26} {:>6} vs {:<6} {}", line.name, line.lhs, line.rhs, if line.holds { "ok" } else { "fails" });
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

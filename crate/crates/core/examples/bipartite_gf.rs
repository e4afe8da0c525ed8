// {g,f}-factors of bipartite and almost bipartite graphs with a derivation
// that can be replayed and re-checked.

use std::error::Error;

use factorkit::factors::enumerate_factors;
use factorkit::harness::{gen_functions, gen_tree_connected, GenSpec};
use factorkit::pipeline::{
    balanced_selector, gf_factor_almost_bipartite, gf_factor_bipartite, selector_with_difference,
    RunConfig,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let gen = gen_tree_connected(&GenSpec { n: 5, trees: 4, extra_edges: 0, bipartite: true, seed: 21 })?;
    let p = gen.partition.ok_or("bipartite spec")?;
    let g = gen.graph;
    let (lo, hi) = gen_functions(&g, 1, 0, 0, 21)?;
    println!("g = {:?}\nf = {:?}", lo.values(), hi.values());

    // a factor exists exactly when some h ∈ {g, f} balances the two parts
    match balanced_selector(&g, &p, &lo, &hi) {
        None => {
            let none = enumerate_factors(&g, |d| (0..5).all(|v| d[v] as i64 == lo[v] || d[v] as i64 == hi[v]))?;
            println!("no balanced selector; enumeration finds {} factors", none.len());
        }
        Some(h) => {
            let cert = gf_factor_bipartite(&g, &p, &lo, &hi, &h, Some(0), &RunConfig::strict(1))?;
            cert.verify(&g)?;
            println!("factor {}", cert.factor);
            for step in &cert.derivation {
                println!("  {}", serde_json::to_string(step)?);
            }
        }
    }

    // one intra-part edge, gap bound 2
    let gen = gen_tree_connected(&GenSpec { n: 4, trees: 20, extra_edges: 0, bipartite: true, seed: 22 })?;
    let p = gen.partition.ok_or("bipartite spec")?;
    let mut g = gen.graph;
    let x = p.x();
    g.add_edge(x[0], x[1])?;
    let (lo, hi) = gen_functions(&g, 2, 0, 0, 22)?;
    let ex = g.inside_count(p.mask()) as i64;
    let h = selector_with_difference(&g, &p, &lo, &hi, |d| d % 2 == 0 && (0..=2 * ex + 1).contains(&d));
    match h {
        Some(h) => {
            let cert = gf_factor_almost_bipartite(&g, &lo, &hi, &h, 2, Some(&p), &RunConfig::strict(2))?;
            cert.verify(&g)?;
            println!("almost bipartite: factor of {} edges out of {}", cert.factor.len(), g.edge_count());
        }
        None => println!("almost bipartite: no admissible selector"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

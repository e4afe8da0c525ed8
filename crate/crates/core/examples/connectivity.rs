// Edge connectivity, tree packings with their refusals, the bipartite
// index and toughness.

use std::error::Error;

use factorkit::connectivity::{
    bipartite_index, edge_connectivity, spanning_tree_packing, toughness, tree_connectivity,
};
use factorkit::graph::MultiGraph;

fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("in range");
        }
    }
    g
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k5 = complete(5);
    println!("K5: edge connectivity {:?}", edge_connectivity(&k5));
    println!("K5: tree connectivity {:?}", tree_connectivity(&k5));

    let packing = spanning_tree_packing(&k5, 2)?;
    packing.verify(&k5)?;
    for (i, tree) in packing.trees.iter().enumerate() {
        println!("tree {i}: {tree}");
    }

    // three trees need 12 edges, K5 has 10: the partition into singletons shows it
    match spanning_tree_packing(&k5, 3) {
        Ok(_) => println!("unexpected packing"),
        Err(refusal) => println!("refused: {refusal}"),
    }

    let bi = bipartite_index(&k5)?;
    println!("bi(K5) = {}, X = {:?}", bi.value, one_based(&bi.witness.x()));

    let t = toughness(&k5)?;
    println!("toughness(K5) = {}", t.value);
    let mut c6 = MultiGraph::new(6);
    for v in 0..6 {
        c6.add_edge(v, (v + 1) % 6)?;
    }
    let t = toughness(&c6)?;
    println!("toughness(C6) = {}, cut {:?}", t.value, one_based(&t.witness));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// The three edge decompositions and the parity forest.

use std::error::Error;

use factorkit::connectivity::bipartite_index;
use factorkit::decompositions::{
    decompose_eulerian, decompose_keep_bi, parity_forest, split_tree_connected_complement,
    verify_complement_split, verify_eulerian_split, verify_keep_bi,
};
use factorkit::harness::{gen_tree_connected, GenSpec};
use factorkit::graph::{MultiGraph, VertexIntMap};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a path tree: the forest hitting parities 1, 0, 0, 1 is the whole path
    let path = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)])?;
    let forest = parity_forest(&path, &path.all_edges(), &VertexIntMap::new(vec![1, 0, 0, 1]))?;
    println!("parity forest {forest}");

    // bipartite graph with four spanning trees, plus two edges inside a part
    let gen = gen_tree_connected(&GenSpec { n: 6, trees: 4, extra_edges: 2, bipartite: true, seed: 7 })?;
    let p = gen.partition.ok_or("bipartite spec")?;
    let mut g = gen.graph;
    let x = p.x();
    g.add_edge(x[0], x[1])?;
    g.add_edge(x[1], x[2])?;
    let split = decompose_eulerian(&g, &p, 1, 1)?;
    verify_eulerian_split(&g, &p, 1, 1, &split)?;
    let g2 = g.spanning_subgraph(&split.g2)?;
    println!("eulerian split: |G1| = {}, |G2| = {}, G2 eulerian {}", split.g1.len(), split.g2.len(), g2.is_eulerian());

    let dense = gen_tree_connected(&GenSpec { n: 6, trees: 8, extra_edges: 3, bipartite: false, seed: 8 })?.graph;
    println!("bi(G) = {}", bipartite_index(&dense)?.value);
    let keep = decompose_keep_bi(&dense, 1, 2, 1, 8)?;
    verify_keep_bi(&dense, 1, 2, &keep)?;
    println!("keep-bi split keeps {} intra-part edges in G2", keep.kept_required);

    let c = split_tree_connected_complement(&dense, 1, 1, 8)?;
    verify_complement_split(&dense, 1, 1, &c)?;
    println!("H has {} edges, its complement {}", c.h.len(), dense.complement(&c.h).len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

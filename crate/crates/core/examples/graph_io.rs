// Parse a graph file, inspect it, and write it back.

use std::error::Error;

use factorkit::graph::{parse_graph_file, GraphFile, MultiGraph};

const INPUT: &str = "\
# a triangle with a doubled edge and a loop
p multigraph 3 5
e 1 2
e 2 3
e 3 1
e 1 2
e 3 3
f 1 1 2
f 2 1 2
f 3 2 3
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let file = parse_graph_file(INPUT)?;
    let g = &file.graph;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    // loops count twice toward the degree
    println!("degrees {:?}", g.degrees());
    println!("odd vertices {:?}", g.odd_vertices().iter().map(|v| v + 1).collect::<Vec<_>>());
    let (lo, hi) = file.gf().ok_or("missing function lines")?;
    println!("g = {:?}, f = {:?}", lo.values(), hi.values());

    let text = GraphFile::with_functions(g.clone(), &lo, &hi).to_text();
    assert_eq!(parse_graph_file(&text)?, file);

    let mut h = MultiGraph::new(4);
    for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
        h.add_edge(u, v)?;
    }
    print!("{}", h.to_text());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// Eulerian, interval and list orientations, and the correspondence between
// factors and orientations of a bipartite graph.

use std::error::Error;

use factorkit::graph::{Bipartition, Factor, MultiGraph, VertexIntMap, VertexListMap};
use factorkit::orientations::{
    enumerate_orientations, eulerian_orientation, factor_from_orientation, interval_orientation,
    list_orientation, orientation_from_factor, transform_lists,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let k5 = {
        let mut g = MultiGraph::new(5);
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, v)?;
            }
        }
        g
    };
    let o = eulerian_orientation(&k5)?;
    println!("K5 Eulerian out-degrees {:?}", o.out_degrees(5));

    // out-degree between 1 and 3 at the hub of a wheel
    let mut wheel = MultiGraph::new(5);
    for v in 1..5 {
        wheel.add_edge(0, v)?;
        wheel.add_edge(v, v % 4 + 1)?;
    }
    let p = VertexIntMap::new(vec![1, 1, 1, 1, 1]);
    let q = VertexIntMap::new(vec![3, 2, 2, 2, 2]);
    let o = interval_orientation(&wheel, &p, &q)?.ok_or("no orientation")?;
    println!("wheel out-degrees {:?}", o.out_degrees(5));
    let count = enumerate_orientations(&wheel, |d| (0..5).all(|v| p[v] <= d[v] as i64 && d[v] as i64 <= q[v]))?.len();
    println!("{count} orientations meet the bounds");

    // hub out-degree exactly 0 or 4
    let mut lists = vec![vec![1, 2, 3]; 5];
    lists[0] = vec![0, 4];
    let found = list_orientation(&wheel, &VertexListMap::new(lists), None)?;
    println!("hub out-degree in {{0, 4}}: {}", found.is_found());

    // K_{2,3}: factors and orientations correspond
    let parts = Bipartition::from_x(5, &[0, 1])?;
    let mut k23 = MultiGraph::new(5);
    for x in 0..2 {
        for y in 2..5 {
            k23.add_edge(x, y)?;
        }
    }
    let f = Factor::from_ids(k23.edges().iter().step_by(2).map(|e| e.id));
    let o = orientation_from_factor(&k23, &parts, &f)?;
    assert_eq!(factor_from_orientation(&k23, &parts, &o)?, f);
    println!("factor degrees {:?}", k23.factor_degrees(&f)?);
    println!("out-degrees    {:?}", o.out_degrees(5));
    let lists = VertexListMap::new(vec![vec![1], vec![2], vec![1], vec![0, 1], vec![1]]);
    println!("lists moved to the orientation side: {:?}", transform_lists(&k23, &parts, &lists).lists());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

// f-factors, interval factors, list factors and the interval condition,
// each checked against exhaustive enumeration.

use std::error::Error;

use factorkit::factors::{
    check_lovasz_condition, enumerate_factors, find_f_factor, find_interval_factor,
    find_list_factor, find_two_point_factor, CriterionOutcome,
};
use factorkit::graph::{MultiGraph, VertexIntMap, VertexListMap};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // the Petersen graph has a perfect matching
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    let petersen = MultiGraph::from_pairs(10, &pairs)?;
    let one = VertexIntMap::constant(10, 1);
    let m = find_f_factor(&petersen, &one)?.ok_or("no perfect matching")?;
    println!("perfect matching {m}");

    // a star has no 1-factor, and the sweep names the blocking pair
    let star = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)])?;
    let ones = VertexIntMap::constant(4, 1);
    assert!(find_f_factor(&star, &ones)?.is_none());
    if let CriterionOutcome::Violated { pair, deficiency } = check_lovasz_condition(&star, &ones, &ones)? {
        let one_based = |v: Vec<usize>| v.into_iter().map(|v| v + 1).collect::<Vec<_>>();
        println!("star: A = {:?}, B = {:?}, deficiency {deficiency}", one_based(pair.a()), one_based(pair.b()));
    }

    // interval factor on a doubled 4-cycle
    let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1), (2, 3)])?;
    let lo = VertexIntMap::new(vec![1, 1, 1, 1]);
    let hi = VertexIntMap::new(vec![2, 1, 2, 1]);
    let f = find_interval_factor(&c4, &lo, &hi)?.ok_or("no interval factor")?;
    println!("interval factor {f}, degrees {:?}", c4.factor_degrees(&f)?);

    // lists with a gap: degree 0 or 2 everywhere
    let lists = VertexListMap::new(vec![vec![0, 2]; 4]);
    let found = find_list_factor(&c4, &lists, None)?;
    match found.found() {
        Some(f) => println!("{{0, 2}}-factor {f}"),
        None => println!("no {{0, 2}}-factor"),
    }

    let two = find_two_point_factor(&c4, &lo, &hi, Some((0, 1)))?;
    let all = enumerate_factors(&c4, |d| {
        d[0] == 1 && (0..4).all(|v| d[v] as i64 == lo[v] || d[v] as i64 == hi[v])
    })?;
    println!("pinned two-point factor found: {}, enumeration count {}", two.is_found(), all.len());
    assert_eq!(two.is_found(), !all.is_empty());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

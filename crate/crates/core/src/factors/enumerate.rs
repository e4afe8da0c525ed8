use super::FactorError;
use crate::graph::{Factor, MultiGraph};

/// Largest edge count for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 20;

/// Every edge subset whose degree vector satisfies `pred`, sorted.
pub fn enumerate_factors(
    g: &MultiGraph,
    mut pred: impl FnMut(&[usize]) -> bool,
) -> Result<Vec<Factor>, FactorError> {
    let mut out = Vec::new();
    walk(g, |mask, deg| {
        if pred(deg) {
            out.push(to_factor(g, mask));
        }
    })?;
    out.sort();
    Ok(out)
}

/// The lexicographically least satisfying edge-id set, if any.
pub fn first_factor_exhaustive(
    g: &MultiGraph,
    mut pred: impl FnMut(&[usize]) -> bool,
) -> Result<Option<Factor>, FactorError> {
    let mut best: Option<Factor> = None;
    walk(g, |mask, deg| {
        if pred(deg) {
            let f = to_factor(g, mask);
            if best.as_ref().is_none_or(|b| f < *b) {
                best = Some(f);
            }
        }
    })?;
    Ok(best)
}

/// Visits all `2^m` subsets in Gray-code order with running degrees.
fn walk(g: &MultiGraph, mut visit: impl FnMut(u32, &[usize])) -> Result<(), FactorError> {
    let m = g.edge_count();
    if m > ENUMERATION_CAP {
        return Err(FactorError::TooLarge {
            what: "factor enumeration",
            size: m,
            cap: ENUMERATION_CAP,
        });
    }
    let edges = g.edges();
    let mut deg = vec![0usize; g.vertex_count()];
    let mut mask = 0u32;
    visit(mask, &deg);
    for step in 1u32..(1u32 << m) {
        let j = step.trailing_zeros() as usize;
        let e = edges[j];
        if mask & (1 << j) == 0 {
            deg[e.u] += 1;
            deg[e.v] += 1;
        } else {
            deg[e.u] -= 1;
            deg[e.v] -= 1;
        }
        mask ^= 1 << j;
        visit(mask, &deg);
    }
    Ok(())
}

fn to_factor(g: &MultiGraph, mask: u32) -> Factor {
    Factor::from_ids(
        g.edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.id),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_has_two_perfect_matchings() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let all = enumerate_factors(&c4, |d| d.iter().all(|&x| x == 1)).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(enumerate_factors(&c4, |_| true).unwrap().len(), 16);
    }

    #[test]
    fn empty_graph_has_one_factor() {
        let g = MultiGraph::new(3);
        assert_eq!(enumerate_factors(&g, |_| true).unwrap(), vec![Factor::empty()]);
    }

    #[test]
    fn least_factor_and_cap() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let f = first_factor_exhaustive(&c4, |d| d.iter().all(|&x| x == 1))
            .unwrap()
            .unwrap();
        assert_eq!(f.ids()[0].0, 0);
        let big = MultiGraph::from_pairs(2, &[(0, 1); 21]).unwrap();
        assert!(enumerate_factors(&big, |_| true).is_err());
    }
}

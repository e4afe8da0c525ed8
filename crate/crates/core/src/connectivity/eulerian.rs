use super::packing::spanning_tree_packing;
use super::ConnectivityError;
use crate::decompositions::parity_forest;
use crate::graph::{Factor, MultiGraph, VertexIntMap};

/// Connected spanning factor with every degree even, for 2-tree-connected
/// graphs: one tree `T1`, plus the subforest of a second tree `T2` that
/// fixes the odd degrees of `T1`. A graph that is already connected and
/// even is returned whole.
pub fn spanning_eulerian_subgraph(g: &MultiGraph) -> Result<Factor, ConnectivityError> {
    let packing = spanning_tree_packing(g, 2)
        .map_err(|refusal| ConnectivityError::NotTreeConnected { m: 2, refusal })?;
    if g.is_eulerian() {
        return Ok(g.all_edges());
    }
    let (t1, t2) = (&packing.trees[0], &packing.trees[1]);
    let d1 = g.factor_degrees(t1)?;
    let targets = VertexIntMap::from_fn(g.vertex_count(), |v| d1[v] as i64);
    let fix = parity_forest(g, t2, &targets).expect("tree degree sum is even");
    Ok(t1.union(&fix))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &MultiGraph, f: &Factor) {
        let h = g.spanning_subgraph(f).unwrap();
        assert!(h.is_eulerian());
        assert!(h.is_connected());
    }

    #[test]
    fn doubled_tree_is_already_eulerian() {
        let base = [(0, 1), (1, 2), (1, 3)];
        let pairs: Vec<_> = base.iter().chain(base.iter()).copied().collect();
        let g = MultiGraph::from_pairs(4, &pairs).unwrap();
        let f = spanning_eulerian_subgraph(&g).unwrap();
        assert_eq!(f, g.all_edges());
    }

    #[test]
    fn k4_and_k5() {
        let k4 =
            MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let f = spanning_eulerian_subgraph(&k4).unwrap();
        check(&k4, &f);
        // even connected spanning subgraphs of K4 are exactly the 3 Hamiltonian cycles
        assert_eq!(f.len(), 4);

        let mut pairs = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                pairs.push((u, v));
            }
        }
        let k5 = MultiGraph::from_pairs(5, &pairs).unwrap();
        assert_eq!(spanning_eulerian_subgraph(&k5).unwrap(), k5.all_edges());
    }

    #[test]
    fn refuses_without_two_trees() {
        let c4 = MultiGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(
            spanning_eulerian_subgraph(&c4),
            Err(ConnectivityError::NotTreeConnected { m: 2, .. })
        ));
    }
}

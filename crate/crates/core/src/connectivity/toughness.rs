use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use super::ConnectivityError;
use crate::graph::{MultiGraph, Vertex};

/// Largest vertex count for the exhaustive toughness search.
pub const TOUGHNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ToughnessValue {
    Finite(Ratio<u64>),
    /// No vertex set disconnects the graph.
    Infinite,
}

impl ToughnessValue {
    pub fn at_least(&self, bound: Ratio<u64>) -> bool {
        match self {
            ToughnessValue::Finite(r) => *r >= bound,
            ToughnessValue::Infinite => true,
        }
    }
}

impl fmt::Display for ToughnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToughnessValue::Finite(r) => write!(f, "{r}"),
            ToughnessValue::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for ToughnessValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Toughness {
    pub value: ToughnessValue,
    /// Minimizing cut set (1-based when serialized); empty for `Infinite`.
    #[serde(serialize_with = "one_based")]
    pub witness: Vec<Vertex>,
}

fn one_based<S: Serializer>(vs: &[Vertex], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(vs.iter().map(|v| v + 1))
}

/// Exact toughness: the minimum of `|S| / ω(G - S)` over vertex sets `S` with
/// `ω(G - S) >= 2`, as a reduced fraction.
pub fn toughness(g: &MultiGraph) -> Result<Toughness, ConnectivityError> {
    let n = g.vertex_count();
    if n > TOUGHNESS_CAP {
        return Err(ConnectivityError::TooLarge {
            what: "toughness",
            n,
            cap: TOUGHNESS_CAP,
        });
    }
    let mut nbr = vec![0u32; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        nbr[e.u] |= 1 << e.v;
        nbr[e.v] |= 1 << e.u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best: Option<(Ratio<u64>, u32)> = None;
    for s in 0..full {
        let rest = full & !s;
        let parts = count_components(rest, &nbr);
        if parts < 2 {
            continue;
        }
        let r = Ratio::new(s.count_ones() as u64, parts as u64);
        if best.is_none_or(|(b, _)| r < b) {
            best = Some((r, s));
        }
    }
    Ok(match best {
        Some((r, s)) => Toughness {
            value: ToughnessValue::Finite(r),
            witness: (0..n).filter(|&v| s & (1 << v) != 0).collect(),
        },
        None => Toughness {
            value: ToughnessValue::Infinite,
            witness: Vec::new(),
        },
    })
}

fn count_components(mut rest: u32, nbr: &[u32]) -> usize {
    let mut count = 0;
    while rest != 0 {
        count += 1;
        let start = rest & rest.wrapping_neg();
        let mut frontier = start;
        let mut comp = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = nbr[v] & rest & !comp;
            comp |= new;
            frontier |= new;
        }
        rest &= !comp;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force with ordinary set operations.
    fn oracle(g: &MultiGraph) -> Option<Ratio<u64>> {
        let n = g.vertex_count();
        let mut best: Option<Ratio<u64>> = None;
        for s in 0u32..(1 << n) {
            let keep: Vec<bool> = (0..n).map(|v| s & (1 << v) == 0).collect();
            if keep.iter().all(|k| !k) {
                continue;
            }
            let comps = crate::graph::components_with(
                n,
                g.edges()
                    .iter()
                    .filter(|e| keep[e.u] && keep[e.v])
                    .map(|e| (e.u, e.v)),
            );
            let omega = comps.iter().filter(|c| keep[c[0]]).count();
            if omega >= 2 {
                let r = Ratio::new(s.count_ones() as u64, omega as u64);
                best = Some(best.map_or(r, |b: Ratio<u64>| b.min(r)));
            }
        }
        best
    }

    #[test]
    fn hand_values() {
        let c5 = MultiGraph::from_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            toughness(&c5).unwrap().value,
            ToughnessValue::Finite(Ratio::from_integer(1))
        );
        let star = MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = toughness(&star).unwrap();
        assert_eq!(t.value, ToughnessValue::Finite(Ratio::new(1, 3)));
        assert_eq!(t.witness, vec![0]);
        let k4 =
            MultiGraph::from_pairs(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(toughness(&k4).unwrap().value, ToughnessValue::Infinite);
        let split = MultiGraph::new(2);
        assert_eq!(
            toughness(&split).unwrap().value,
            ToughnessValue::Finite(Ratio::from_integer(0))
        );
    }

    #[test]
    fn witness_attains_value_and_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(0..=16);
            let pairs: Vec<_> = (0..m)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let g = MultiGraph::from_pairs(n, &pairs).unwrap();
            let t = toughness(&g).unwrap();
            match (t.value, oracle(&g)) {
                (ToughnessValue::Finite(r), Some(o)) => {
                    assert_eq!(r, o);
                    let s = t.witness.len() as u64;
                    let mut keep = vec![true; n];
                    for &v in &t.witness {
                        keep[v] = false;
                    }
                    let comps = crate::graph::components_with(
                        n,
                        g.edges()
                            .iter()
                            .filter(|e| keep[e.u] && keep[e.v])
                            .map(|e| (e.u, e.v)),
                    );
                    let omega = comps.iter().filter(|c| keep[c[0]]).count() as u64;
                    assert_eq!(Ratio::new(s, omega), r);
                }
                (ToughnessValue::Infinite, None) => {}
                other => panic!("mismatch {other:?} on {pairs:?}"),
            }
        }
    }
}

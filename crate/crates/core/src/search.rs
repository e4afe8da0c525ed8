//! Branch-and-prune search for degree lists over an exact interval oracle.
//!
//! The relaxation replaces each vertex's list by the interval spanned by it
//! and asks an exact oracle (a flow or matching reduction) for a solution.
//! A vertex whose achieved value misses its list splits the search into the
//! list values below and above that value; the value itself is excluded from
//! both, so no solution is lost and every branch strictly shrinks an
//! interval. Without a budget the search is complete.

use serde::Serialize;

/// Outcome of a search that may give up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Search<T> {
    Found(T),
    /// Proven infeasible.
    NotFound,
    /// Budget exhausted before a decision.
    Unknown,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::NotFound => Search::NotFound,
            Search::Unknown => Search::Unknown,
        }
    }
}

/// Searches for a solution whose value vector lies in `lists` (sorted,
/// nonempty). `relax(lo, hi)` must return a solution with values in
/// `[lo, hi]` together with those values, or `None` if there is none.
/// `budget` caps the number of oracle calls.
pub(crate) fn list_search<T>(
    lists: &[Vec<i64>],
    budget: Option<usize>,
    mut relax: impl FnMut(&[i64], &[i64]) -> Option<(T, Vec<i64>)>,
) -> Search<T> {
    let lo: Vec<i64> = lists.iter().map(|l| l[0]).collect();
    let hi: Vec<i64> = lists.iter().map(|l| *l.last().unwrap()).collect();
    let mut stack = vec![(lo, hi)];
    let mut calls = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        if budget.is_some_and(|b| calls >= b) {
            return Search::Unknown;
        }
        calls += 1;
        let Some((sol, values)) = relax(&lo, &hi) else {
            continue;
        };
        let miss = (0..lists.len()).find(|&v| lists[v].binary_search(&values[v]).is_err());
        let Some(v) = miss else {
            return Search::Found(sol);
        };
        let d = values[v];
        let below = lists[v].iter().rev().find(|&&x| x < d && x >= lo[v]).copied();
        let above = lists[v].iter().find(|&&x| x > d && x <= hi[v]).copied();
        let mut children = Vec::with_capacity(2);
        if let Some(b) = below {
            let mut h = hi.clone();
            h[v] = b;
            children.push((d - b, (lo.clone(), h)));
        }
        if let Some(a) = above {
            let mut l = lo.clone();
            l[v] = a;
            children.push((a - d, (l, hi.clone())));
        }
        // closer bound explored first
        children.sort_by_key(|(dist, _)| std::cmp::Reverse(*dist));
        stack.extend(children.into_iter().map(|(_, c)| c));
    }
    Search::NotFound
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Choose x_i in lists[i] with sum == target; the oracle solves the
    /// interval version greedily.
    fn sum_oracle(target: i64) -> impl FnMut(&[i64], &[i64]) -> Option<((), Vec<i64>)> {
        move |lo: &[i64], hi: &[i64]| {
            let min: i64 = lo.iter().sum();
            let max: i64 = hi.iter().sum();
            if target < min || target > max {
                return None;
            }
            let mut vals = lo.to_vec();
            let mut rest = target - min;
            for i in 0..vals.len() {
                let step = rest.min(hi[i] - lo[i]);
                vals[i] += step;
                rest -= step;
            }
            Some(((), vals))
        }
    }

    #[test]
    fn finds_sparse_combination() {
        let lists = vec![vec![0, 5], vec![0, 5], vec![1, 3]];
        assert!(list_search(&lists, None, sum_oracle(8)).is_found());
        assert_eq!(list_search(&lists, None, sum_oracle(7)), Search::NotFound);
        assert_eq!(list_search(&lists, Some(1), sum_oracle(7)), Search::Unknown);
    }

    #[test]
    fn exhaustive_agreement() {
        let lists = vec![vec![0, 2, 7], vec![1, 4], vec![3], vec![0, 9]];
        for target in -1..30 {
            let mut brute = false;
            for a in &lists[0] {
                for b in &lists[1] {
                    for c in &lists[2] {
                        for d in &lists[3] {
                            brute |= a + b + c + d == target;
                        }
                    }
                }
            }
            assert_eq!(list_search(&lists, None, sum_oracle(target)).is_found(), brute);
        }
    }
}

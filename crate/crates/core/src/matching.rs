//! Maximum cardinality matching in general simple graphs (Edmonds' blossom
//! algorithm, breadth-first with blossom contraction via base labels).

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

/// Maximum matching; `mate[v]` is the partner of `v` if matched.
///
/// `adj` must describe a simple undirected graph (symmetric, no self-loops).
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut m = Matcher::new(adj);
    m.greedy();
    for root in 0..adj.len() {
        if m.mate[root] == NONE {
            m.augment_from(root);
        }
    }
    m.result()
}

/// A perfect matching, or `None` when some vertex must stay exposed. Stops at
/// the first root with no augmenting path, which stays exposed in every
/// maximum matching that extends the current one.
pub fn perfect_matching(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    if adj.len() % 2 == 1 {
        return None;
    }
    let mut m = Matcher::new(adj);
    m.greedy();
    for root in 0..adj.len() {
        if m.mate[root] == NONE && !m.augment_from(root) {
            return None;
        }
    }
    Some(m.mate)
}

struct Matcher<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Matcher<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Matcher {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE && u != v) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
    }

    fn result(&self) -> Vec<Option<usize>> {
        self.mate
            .iter()
            .map(|&m| if m == NONE { None } else { Some(m) })
            .collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment_from(&mut self, root: usize) -> bool {
        let Some(mut v) = self.find_path(root) else {
            return false;
        };
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(u, v) in edges {
            a[u].push(v);
            a[v].push(u);
        }
        a
    }

    fn brute_max(n: usize, edges: &[(usize, usize)]) -> usize {
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let mut used = vec![false; n];
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    if used[u] || used[v] {
                        ok = false;
                        break;
                    }
                    used[u] = true;
                    used[v] = true;
                }
            }
            if ok {
                best = best.max(mask.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn odd_cycle_with_pendant() {
        // blossom 0-1-2 with stems that need contraction to augment
        let e = [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)];
        let a = adj(6, &e);
        let m = maximum_matching(&a);
        assert_eq!(m.iter().filter(|x| x.is_some()).count(), 6);
        assert!(perfect_matching(&a).is_some());
        assert!(perfect_matching(&adj(3, &[(0, 1), (1, 2), (2, 0)])).is_none());
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..400 {
            let n = rng.gen_range(1..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            edges.truncate(16);
            let a = adj(n, &edges);
            let m = maximum_matching(&a);
            for (v, mv) in m.iter().enumerate() {
                if let Some(u) = mv {
                    assert_eq!(m[*u], Some(v));
                    assert!(a[v].contains(u));
                }
            }
            let size = m.iter().filter(|x| x.is_some()).count() / 2;
            let best = brute_max(n, &edges);
            assert_eq!(size, best, "{edges:?}");
            assert_eq!(perfect_matching(&a).is_some(), 2 * best == n);
        }
    }
}

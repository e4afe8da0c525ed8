//! Max flow (Dinic) and feasible flows with lower bounds.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
}

/// Residual network for Dinic's algorithm. Arc `2k` is the k-th added arc,
/// `2k + 1` its reverse.
#[derive(Clone, Debug)]
pub(crate) struct Dinic {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub fn new(n: usize) -> Self {
        Dinic {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.out[from].push(id);
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[to].push(id + 1);
        id / 2
    }

    /// Flow currently on the k-th added arc.
    pub fn flow(&self, k: usize) -> i64 {
        self.arcs[2 * k + 1].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &a in &self.out[v] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[v] + 1;
                    q.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.iter[v] < self.out[v].len() {
            let a = self.out[v][self.iter[v]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let d = self.dfs(to, t, pushed.min(cap));
                if d > 0 {
                    self.arcs[a].cap -= d;
                    self.arcs[a ^ 1].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }
}

/// Circulation problem with `lo <= flow <= hi` on every arc.
#[derive(Clone, Debug, Default)]
pub(crate) struct BoundedCirculation {
    n: usize,
    arcs: Vec<(usize, usize, i64, i64)>,
}

impl BoundedCirculation {
    pub fn new(n: usize) -> Self {
        BoundedCirculation {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lo: i64, hi: i64) -> usize {
        self.arcs.push((from, to, lo, hi));
        self.arcs.len() - 1
    }

    /// A feasible circulation (flow per arc), or `None`.
    pub fn solve(&self) -> Option<Vec<i64>> {
        let (ss, tt) = (self.n, self.n + 1);
        let mut net = Dinic::new(self.n + 2);
        let mut excess = vec![0i64; self.n];
        for &(a, b, lo, hi) in &self.arcs {
            if lo > hi {
                return None;
            }
            net.add_arc(a, b, hi - lo);
            excess[b] += lo;
            excess[a] -= lo;
        }
        let mut need = 0;
        for (v, &x) in excess.iter().enumerate() {
            if x > 0 {
                net.add_arc(ss, v, x);
                need += x;
            } else if x < 0 {
                net.add_arc(v, tt, -x);
            }
        }
        if net.max_flow(ss, tt) != need {
            return None;
        }
        Some(
            self.arcs
                .iter()
                .enumerate()
                .map(|(k, &(_, _, lo, _))| lo + net.flow(k))
                .collect(),
        )
    }
}

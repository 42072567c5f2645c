//! A deliberately plain re-implementation used to produce and re-check the
//! frozen oracle tables. It shares no code with the library: adjacency is
//! a matrix of booleans, distances come from a queue-based search, and
//! isomorphism classes from a recursive permutation walk.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub const INF: u32 = u32::MAX;

#[derive(Clone)]
pub struct Plain {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Plain {
    /// Bit `j` of the mask is the `j`-th ordered pair `(u, v)`, `u != v`,
    /// in row-major order.
    pub fn from_mask(n: usize, mask: u64) -> Plain {
        let mut adj = vec![vec![false; n]; n];
        let mut j = 0;
        for (u, row) in adj.iter_mut().enumerate() {
            for (v, cell) in row.iter_mut().enumerate() {
                if u != v {
                    *cell = mask >> j & 1 == 1;
                    j += 1;
                }
            }
        }
        Plain { n, adj }
    }

    pub fn arcs(&self) -> usize {
        self.adj.iter().flatten().filter(|&&b| b).count()
    }

    pub fn distances(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut out = vec![vec![INF; n]; n];
        for (s, row) in out.iter_mut().enumerate() {
            let mut q = VecDeque::from([s]);
            row[s] = 0;
            while let Some(u) = q.pop_front() {
                for v in 0..n {
                    if self.adj[u][v] && row[v] == INF {
                        row[v] = row[u] + 1;
                        q.push_back(v);
                    }
                }
            }
        }
        out
    }
}

/// `[d, d_m, r, r_m]` with `INF` for infinity, and the bicomponent count.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Values {
    pub inv: [u32; 4],
    pub bicomponents: usize,
}

pub fn values(g: &Plain) -> Values {
    let n = g.n;
    let rho = g.distances();
    let ecc: Vec<u32> = (0..n).map(|x| *rho[x].iter().max().unwrap()).collect();
    let ecc_m: Vec<u32> = (0..n)
        .map(|x| (0..n).map(|y| rho[x][y].min(rho[y][x])).max().unwrap())
        .collect();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for x in 0..n {
        if label[x] == usize::MAX {
            for y in 0..n {
                if rho[x][y] != INF && rho[y][x] != INF {
                    label[y] = count;
                }
            }
            count += 1;
        }
    }
    Values {
        inv: [
            *ecc.iter().max().unwrap(),
            *ecc_m.iter().max().unwrap(),
            *ecc.iter().min().unwrap(),
            *ecc_m.iter().min().unwrap(),
        ],
        bicomponents: count,
    }
}

pub fn critical(g: &Plain, before: &Values, which: usize) -> bool {
    let mut h = g.clone();
    for u in 0..g.n {
        for v in 0..g.n {
            if u == v || g.adj[u][v] {
                continue;
            }
            h.adj[u][v] = true;
            let after = values(&h);
            h.adj[u][v] = false;
            if !(after.bicomponents < before.bicomponents || after.inv[which] < before.inv[which]) {
                return false;
            }
        }
    }
    true
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest adjacency string over all relabelings.
pub fn canon(g: &Plain, all: &[Vec<usize>]) -> Vec<bool> {
    all.iter()
        .map(|p| {
            let mut s = Vec::with_capacity(g.n * g.n);
            for &u in p {
                for &v in p {
                    s.push(g.adj[u][v]);
                }
            }
            s
        })
        .min()
        .unwrap()
}

/// Every table the acceptance criteria freeze, for one order `n`.
#[derive(Default, Debug)]
pub struct Tables {
    /// `(invariant index, finite value) -> max arcs`
    pub max_finite: BTreeMap<(usize, u32), usize>,
    /// `(invariant index, bicomponents) -> max arcs` with that invariant infinite.
    pub max_infinite: BTreeMap<(usize, usize), usize>,
    /// `(invariant index, bicomponents) -> labeled count` of critical digraphs
    /// with that invariant infinite.
    pub critical_labeled: BTreeMap<(usize, usize), u64>,
    pub critical_classes: BTreeMap<(usize, usize), usize>,
    /// `(invariant index, value) -> labeled count` of maximal digraphs.
    pub maximal_labeled: BTreeMap<(usize, u32), u64>,
    pub maximal_classes: BTreeMap<(usize, u32), usize>,
}

pub fn tables(n: usize) -> Tables {
    let all = perms(n);
    let pairs = n * (n - 1);
    let graphs: Vec<(Plain, Values)> = (0..1u64 << pairs)
        .map(|m| {
            let g = Plain::from_mask(n, m);
            let v = values(&g);
            (g, v)
        })
        .collect();
    let mut t = Tables::default();
    let mut critical_sets: BTreeMap<(usize, usize), BTreeSet<Vec<bool>>> = BTreeMap::new();
    for (g, v) in &graphs {
        let arcs = g.arcs();
        for which in 0..4 {
            let value = v.inv[which];
            if value == INF {
                let e = t.max_infinite.entry((which, v.bicomponents)).or_insert(0);
                *e = (*e).max(arcs);
                if critical(g, v, which) {
                    *t.critical_labeled.entry((which, v.bicomponents)).or_insert(0) += 1;
                    critical_sets.entry((which, v.bicomponents)).or_default().insert(canon(g, &all));
                }
            } else {
                let e = t.max_finite.entry((which, value)).or_insert(0);
                *e = (*e).max(arcs);
            }
        }
    }
    t.critical_classes = critical_sets.into_iter().map(|(k, s)| (k, s.len())).collect();
    // Maximal digraphs of radius (index 2) and quasi-diameter (index 1).
    for which in [1, 2] {
        let mut sets: BTreeMap<u32, BTreeSet<Vec<bool>>> = BTreeMap::new();
        for (g, v) in &graphs {
            let value = v.inv[which];
            if value != INF && value >= 1 && t.max_finite[&(which, value)] == g.arcs() {
                *t.maximal_labeled.entry((which, value)).or_insert(0) += 1;
                sets.entry(value).or_default().insert(canon(g, &all));
            }
        }
        for (value, s) in sets {
            t.maximal_classes.insert((which, value), s.len());
        }
    }
    t
}

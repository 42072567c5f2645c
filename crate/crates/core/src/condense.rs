//! Strong components ("bicomponents") and the Hertz graph.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::digraph::Digraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condensation {
    /// Vertex sets, 1-based and ascending, in a topological order of
    /// `hertz`. Ties go to the component holding the smallest label.
    pub components: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    /// One vertex per component, arc `(i, j)` when some arc of the source
    /// leaves component `i` and enters component `j`.
    #[serde(skip)]
    pub hertz: Digraph,
}

impl Condensation {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Index (0-based) of the component containing 1-based vertex `v`.
    pub fn component_of(&self, v: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.binary_search(&v).is_ok())
            .expect("vertex belongs to some component")
    }
}

pub fn condensation(g: &Digraph) -> Condensation {
    let n = g.n();
    let reach = g.reachability();
    let w = g.words();
    let reaches = |u: usize, v: usize| reach[u * w + v / 64] >> (v % 64) & 1 == 1;

    // Components in order of their smallest label.
    let mut label = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if label[v] != usize::MAX {
            continue;
        }
        let id = raw.len();
        let members: Vec<usize> = (v..n).filter(|&u| reaches(v, u) && reaches(u, v)).collect();
        for &u in &members {
            label[u] = id;
        }
        raw.push(members);
    }

    let k = raw.len();
    let mut adj = vec![vec![false; k]; k];
    for u in 0..n {
        for v in g.out_iter(u) {
            if label[u] != label[v] {
                adj[label[u]][label[v]] = true;
            }
        }
    }

    // Kahn's algorithm; raw ids already follow smallest labels, so a min-heap
    // on id gives the tie-break.
    let mut indeg: Vec<usize> = (0..k).map(|j| (0..k).filter(|&i| adj[i][j]).count()).collect();
    let mut heap: BinaryHeap<Reverse<usize>> = (0..k).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse(i)) = heap.pop() {
        order.push(i);
        for j in 0..k {
            if adj[i][j] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
    }
    debug_assert_eq!(order.len(), k, "the component graph is acyclic");

    let mut position = vec![0; k];
    for (p, &i) in order.iter().enumerate() {
        position[i] = p;
    }
    let mut hertz = Digraph::empty(k).expect("n >= 1 gives k >= 1");
    for i in 0..k {
        for j in 0..k {
            if adj[i][j] {
                hertz.set(position[i], position[j]);
            }
        }
    }
    let components: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| raw[i].iter().map(|v| v + 1).collect())
        .collect();
    let sizes = components.iter().map(Vec::len).collect();
    Condensation {
        components,
        sizes,
        hertz,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub is_acyclic: bool,
    pub is_transitive: bool,
    pub is_complete_symmetric: bool,
    pub is_transitive_tournament: bool,
    pub is_biconnected: bool,
}

/// Transitivity: arcs `(u, v)` and `(v, w)` with `u != w` force `(u, w)`.
pub fn is_transitive(g: &Digraph) -> bool {
    let n = g.n();
    (0..n).all(|u| {
        g.out_iter(u)
            .all(|v| g.out_iter(v).all(|w| w == u || g.has(u, w)))
    })
}

pub fn structure_flags(g: &Digraph) -> StructureFlags {
    let n = g.n();
    let c = condensation(g);
    let is_acyclic = c.len() == n;
    let is_transitive = is_transitive(g);
    let arcs = g.arc_count();
    StructureFlags {
        is_acyclic,
        is_transitive,
        is_complete_symmetric: arcs == n * (n - 1),
        is_transitive_tournament: is_acyclic && is_transitive && arcs == n * (n - 1) / 2,
        is_biconnected: c.len() == 1,
    }
}

//! Loop-free digraphs stored as a bit matrix.
//!
//! Vertices are labeled `1..=n` on every public surface. Row `u` of the
//! matrix holds the out-neighbourhood of `u`, packed into `ceil(n / 64)`
//! words, so any digraph with `n <= 64` keeps one word per row.

use std::fmt;

use thiserror::Error;

/// A 1-based ordered pair `(tail, head)`.
pub type Arc = (usize, usize);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a digraph needs at least one vertex")]
    NoVertices,
    #[error("loop arc ({0},{0}) is not allowed")]
    LoopArc(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("arc ({0},{1}) is listed more than once")]
    DuplicateArc(usize, usize),
    #[error("arc ({0},{1}) is already present")]
    ArcPresent(usize, usize),
    #[error("arc mask needs n(n-1) <= 64, got n = {0}")]
    MaskTooWide(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = n.div_ceil(64);
        Ok(Digraph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// Builds a digraph from 1-based arcs, rejecting loops, unknown
    /// endpoints and repeated arcs.
    pub fn from_arc_list(n: usize, arcs: &[Arc]) -> Result<Self, GraphError> {
        let mut g = Digraph::empty(n)?;
        for &(u, v) in arcs {
            g.check_endpoints(u, v)?;
            if g.has(u - 1, v - 1) {
                return Err(GraphError::DuplicateArc(u, v));
            }
            g.set(u - 1, v - 1);
        }
        Ok(g)
    }

    /// The complete symmetric digraph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Digraph::empty(n)?;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    g.set(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the 1-based arc `(u, v)` is present. Out-of-range labels
    /// simply report `false`.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        (1..=self.n).contains(&u) && (1..=self.n).contains(&v) && self.has(u - 1, v - 1)
    }

    /// All arcs, 1-based, in lexicographic order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut out = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            out.extend(self.out_iter(u).map(|v| (u + 1, v + 1)));
        }
        out
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.row(v - 1).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has(u, v - 1)).count()
    }

    /// Out-neighbours of `v`, 1-based and ascending.
    pub fn out_neighbors(&self, v: usize) -> Vec<usize> {
        self.out_iter(v - 1).map(|w| w + 1).collect()
    }

    /// A copy with the 1-based arc `(u, v)` added.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph, GraphError> {
        self.check_endpoints(u, v)?;
        if self.has(u - 1, v - 1) {
            return Err(GraphError::ArcPresent(u, v));
        }
        let mut g = self.clone();
        g.set(u - 1, v - 1);
        Ok(g)
    }

    /// Every arc turned around.
    pub fn reverse(&self) -> Digraph {
        let mut g = Digraph::empty(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in self.out_iter(u) {
                g.set(v, u);
            }
        }
        g
    }

    /// Arc `(u, v)` for every `u != v` such that `v` is reachable from `u`.
    pub fn transitive_closure(&self) -> Digraph {
        let reach = self.reachability();
        let mut g = Digraph::empty(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in iter_ones(&reach[u * self.words..(u + 1) * self.words]) {
                if v != u {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `i` (1-based) becomes `perm[i - 1]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut seen = vec![false; self.n];
        for &p in perm {
            assert!((1..=self.n).contains(&p) && !seen[p - 1], "not a permutation");
            seen[p - 1] = true;
        }
        let mut g = Digraph::empty(self.n).expect("n >= 1");
        for u in 0..self.n {
            for v in self.out_iter(u) {
                g.set(perm[u] - 1, perm[v] - 1);
            }
        }
        g
    }

    /// The subgraph induced by the given 1-based vertices, relabeled
    /// `1..=len` in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut g = Digraph::empty(vertices.len().max(1)).expect("n >= 1");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has(u - 1, v - 1) {
                    g.set(i, j);
                }
            }
        }
        g
    }

    /// Number of ordered vertex pairs, `n(n-1)`.
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1)
    }

    /// Decodes an arc mask: bit `j` stands for the `j`-th ordered pair
    /// `(u, v)`, `u != v`, in row-major order.
    pub fn from_mask(n: usize, mask: u64) -> Result<Digraph, GraphError> {
        if Self::pair_count(n) > 64 {
            return Err(GraphError::MaskTooWide(n));
        }
        let mut g = Digraph::empty(n)?;
        g.load_mask(mask);
        Ok(g)
    }

    /// Inverse of [`Digraph::from_mask`].
    pub fn to_mask(&self) -> Result<u64, GraphError> {
        if Self::pair_count(self.n) > 64 {
            return Err(GraphError::MaskTooWide(self.n));
        }
        let mut mask = 0u64;
        let mut j = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                if u == v {
                    continue;
                }
                if self.has(u, v) {
                    mask |= 1 << j;
                }
                j += 1;
            }
        }
        Ok(mask)
    }

    // ---- crate-internal 0-based access ----

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn has(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    pub(crate) fn clear(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
    }

    pub(crate) fn out_iter(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_ones(self.row(u))
    }

    /// Overwrites the arc set from a row-major pair mask. Requires
    /// `n(n-1) <= 64`, so each row is a single word.
    pub(crate) fn load_mask(&mut self, mut mask: u64) {
        debug_assert!(Self::pair_count(self.n) <= 64);
        let n = self.n;
        for u in 0..n {
            let chunk = mask & ((1u64 << (n - 1)) - 1);
            mask >>= n - 1;
            // Re-insert the zero diagonal bit at position u.
            let low = chunk & ((1u64 << u) - 1);
            let high = (chunk >> u) << (u + 1);
            self.bits[u] = low | high;
        }
    }

    /// Reachability rows (reflexive), `n * words` words.
    pub(crate) fn reachability(&self) -> Vec<u64> {
        let w = self.words;
        let mut reach = vec![0u64; self.n * w];
        let mut frontier = vec![0u64; w];
        let mut next = vec![0u64; w];
        for s in 0..self.n {
            let seen = &mut reach[s * w..(s + 1) * w];
            seen[s / 64] |= 1 << (s % 64);
            frontier.fill(0);
            frontier[s / 64] |= 1 << (s % 64);
            loop {
                next.fill(0);
                for u in iter_ones(&frontier) {
                    for (x, r) in next.iter_mut().zip(self.row(u)) {
                        *x |= r;
                    }
                }
                let mut any = false;
                for (x, s) in next.iter_mut().zip(seen.iter_mut()) {
                    *x &= !*s;
                    *s |= *x;
                    any |= *x != 0;
                }
                if !any {
                    break;
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        reach
    }

    fn check_endpoints(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if !(1..=self.n).contains(&x) {
                return Err(GraphError::OutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopArc(u));
        }
        Ok(())
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// Indices of set bits across a word slice, ascending.
pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * 64 + b)
        })
    })
}

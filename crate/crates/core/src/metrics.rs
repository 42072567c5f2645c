//! Distances and the four metric invariants: diameter `d`, quasi-diameter
//! `d_m`, radius `r` and quasi-radius `r_m`.

use serde::Serialize;

use crate::digraph::{iter_ones, Digraph};
use crate::distance::Distance;

/// Row-major `n x n` matrix of distances, indexed by 1-based labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    cells: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Distance {
        self.cells[(x - 1) * self.n + (y - 1)]
    }

    /// Rows as nested vectors, for display and serialization.
    pub fn rows(&self) -> Vec<Vec<Distance>> {
        self.cells.chunks(self.n).map(<[_]>::to_vec).collect()
    }
}

/// Shortest directed path lengths between every ordered pair, by one
/// breadth-first search per source.
pub fn all_pairs_distances(g: &Digraph) -> DistanceMatrix {
    let mut scratch = Scratch::new(g);
    scratch.fill(g);
    DistanceMatrix {
        n: g.n(),
        cells: scratch.dist,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub rho: DistanceMatrix,
    pub rho_m: DistanceMatrix,
    pub d: Distance,
    pub d_m: Distance,
    pub r: Distance,
    pub r_m: Distance,
    /// Largest entry of each row of `rho`.
    pub ecc_out: Vec<Distance>,
    /// Largest entry of each row of `rho_m`.
    pub ecc_m: Vec<Distance>,
}

pub fn metric_profile(g: &Digraph) -> MetricProfile {
    let n = g.n();
    let rho = all_pairs_distances(g);
    let mut sym = vec![Distance::ZERO; n * n];
    for x in 0..n {
        for y in 0..n {
            sym[x * n + y] = rho.cells[x * n + y].min(rho.cells[y * n + x]);
        }
    }
    let rho_m = DistanceMatrix { n, cells: sym };
    let row_max = |m: &DistanceMatrix| -> Vec<Distance> {
        m.cells
            .chunks(n)
            .map(|row| row.iter().copied().max().unwrap_or(Distance::ZERO))
            .collect()
    };
    let ecc_out = row_max(&rho);
    let ecc_m = row_max(&rho_m);
    // With the diagonal included, n = 1 gives 0 for all four invariants.
    let d = ecc_out.iter().copied().max().unwrap_or(Distance::ZERO);
    let d_m = ecc_m.iter().copied().max().unwrap_or(Distance::ZERO);
    let r = ecc_out.iter().copied().min().unwrap_or(Distance::ZERO);
    let r_m = ecc_m.iter().copied().min().unwrap_or(Distance::ZERO);
    MetricProfile {
        rho,
        rho_m,
        d,
        d_m,
        r,
        r_m,
        ecc_out,
        ecc_m,
    }
}

/// Centers (eccentricity equal to a finite radius) and quasi-centers
/// (finite quasi-eccentricity), both as 1-based labels.
pub fn centers_and_quasicenters(g: &Digraph) -> (Vec<usize>, Vec<usize>) {
    let p = metric_profile(g);
    let centers = if p.r.is_finite() {
        (1..=g.n()).filter(|&v| p.ecc_out[v - 1] == p.r).collect()
    } else {
        Vec::new()
    };
    let quasi = (1..=g.n()).filter(|&v| p.ecc_m[v - 1].is_finite()).collect();
    (centers, quasi)
}

/// The invariants together with the bicomponent count, as needed when a
/// digraph is tested many times in a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summary {
    pub bicomponents: usize,
    pub d: Distance,
    pub d_m: Distance,
    pub r: Distance,
    pub r_m: Distance,
}

/// Reusable buffers for repeated distance computations on digraphs of one
/// order.
#[derive(Clone, Debug)]
pub struct Scratch {
    n: usize,
    dist: Vec<Distance>,
    frontier: Vec<u64>,
    next: Vec<u64>,
    seen: Vec<u64>,
}

impl Scratch {
    pub fn new(g: &Digraph) -> Self {
        let n = g.n();
        let w = g.words();
        Scratch {
            n,
            dist: vec![Distance::Infinite; n * n],
            frontier: vec![0; w],
            next: vec![0; w],
            seen: vec![0; w],
        }
    }

    fn fill(&mut self, g: &Digraph) {
        debug_assert_eq!(g.n(), self.n);
        let n = self.n;
        self.dist.fill(Distance::Infinite);
        for s in 0..n {
            self.seen.fill(0);
            self.frontier.fill(0);
            self.seen[s / 64] |= 1 << (s % 64);
            self.frontier[s / 64] |= 1 << (s % 64);
            self.dist[s * n + s] = Distance::ZERO;
            let mut level = 0u32;
            loop {
                self.next.fill(0);
                for u in iter_ones(&self.frontier) {
                    for (x, r) in self.next.iter_mut().zip(g.row(u)) {
                        *x |= r;
                    }
                }
                let mut any = false;
                for (x, seen) in self.next.iter_mut().zip(self.seen.iter_mut()) {
                    *x &= !*seen;
                    *seen |= *x;
                    any |= *x != 0;
                }
                if !any {
                    break;
                }
                level += 1;
                for v in iter_ones(&self.next) {
                    self.dist[s * n + v] = Distance::Finite(level);
                }
                std::mem::swap(&mut self.frontier, &mut self.next);
            }
        }
    }

    /// Distance between 0-based vertices as of the last `summary` call.
    pub(crate) fn dist(&self, x: usize, y: usize) -> Distance {
        self.dist[x * self.n + y]
    }

    pub fn summary(&mut self, g: &Digraph) -> Summary {
        self.fill(g);
        let n = self.n;
        let at = |x: usize, y: usize| self.dist[x * n + y];
        let mut d = Distance::ZERO;
        let mut d_m = Distance::ZERO;
        let mut r = Distance::Infinite;
        let mut r_m = Distance::Infinite;
        let mut bicomponents = 0;
        for x in 0..n {
            let mut ecc = Distance::ZERO;
            let mut ecc_m = Distance::ZERO;
            let mut leader = true;
            for y in 0..n {
                let fwd = at(x, y);
                let back = at(y, x);
                ecc = ecc.max(fwd);
                ecc_m = ecc_m.max(fwd.min(back));
                if y < x && fwd.is_finite() && back.is_finite() {
                    leader = false;
                }
            }
            if leader {
                bicomponents += 1;
            }
            d = d.max(ecc);
            d_m = d_m.max(ecc_m);
            r = r.min(ecc);
            r_m = r_m.min(ecc_m);
        }
        Summary {
            bicomponents,
            d,
            d_m,
            r,
            r_m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Distance::{Finite, Infinite};

    fn gamma3() -> Digraph {
        Digraph::from_arc_list(3, &[(1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn gamma3_distances() {
        let rho = all_pairs_distances(&gamma3());
        assert_eq!(rho.get(1, 3), Finite(1));
        assert_eq!(rho.get(2, 1), Infinite);
        for x in 1..=3 {
            assert_eq!(rho.get(x, x), Finite(0));
        }
    }

    #[test]
    fn gamma3_profile() {
        let p = metric_profile(&gamma3());
        assert_eq!((p.d, p.d_m, p.r, p.r_m), (Infinite, Finite(1), Finite(1), Finite(1)));
    }

    #[test]
    fn d4_has_infinite_quasi_radius() {
        let d4 = Digraph::from_arc_list(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert_eq!(metric_profile(&d4).r_m, Infinite);
        assert!(centers_and_quasicenters(&d4).1.is_empty());
    }

    #[test]
    fn symmetric_pair() {
        let g = Digraph::complete(2).unwrap();
        let p = metric_profile(&g);
        assert_eq!((p.d, p.d_m, p.r, p.r_m), (Finite(1), Finite(1), Finite(1), Finite(1)));
    }

    #[test]
    fn single_vertex_is_all_zero() {
        let p = metric_profile(&Digraph::empty(1).unwrap());
        assert_eq!((p.d, p.d_m, p.r, p.r_m), (Finite(0), Finite(0), Finite(0), Finite(0)));
    }

    #[test]
    fn centers_examples() {
        assert_eq!(centers_and_quasicenters(&gamma3()), (vec![1], vec![1, 2, 3]));
        let g31 = Digraph::from_arc_list(3, &[(1, 3), (2, 3)]).unwrap();
        assert_eq!(centers_and_quasicenters(&g31), (vec![], vec![3]));
    }

    #[test]
    fn summary_agrees_with_profile_on_all_3_vertex_digraphs() {
        for mask in 0..64 {
            let g = Digraph::from_mask(3, mask).unwrap();
            let p = metric_profile(&g);
            let s = Scratch::new(&g).summary(&g);
            assert_eq!((s.d, s.d_m, s.r, s.r_m), (p.d, p.d_m, p.r, p.r_m), "{g:?}");
        }
    }
}

use std::collections::BTreeSet;

use serde::Serialize;

use super::OracleError;
use crate::digraph::Digraph;

pub const MAX_CANONICAL_N: usize = 9;

/// The lexicographically smallest off-diagonal adjacency string over all
/// vertex orderings. Pair `(0, 1)` is the most significant bit and pairs
/// follow in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    /// The digraph whose row-major string is `bits`, i.e. the canonical
    /// representative of the class.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.n;
        let total = Digraph::pair_count(n);
        let mut g = Digraph::empty(n).expect("canonical forms have n >= 1");
        let mut j = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    if self.bits >> (total - 1 - j) & 1 == 1 {
                        g.set(u, v);
                    }
                    j += 1;
                }
            }
        }
        g
    }
}

fn encode(g: &Digraph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    for &u in order {
        for &v in order {
            if u != v {
                bits = bits << 1 | g.has(u, v) as u128;
            }
        }
    }
    bits
}

/// Full scan over all `n!` orderings (Heap's algorithm).
pub fn canonical_form(g: &Digraph) -> Result<CanonicalForm, OracleError> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_CANONICAL_N,
        });
    }
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = encode(g, &order);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            best = best.min(encode(g, &order));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(CanonicalForm { n, bits: best })
}

fn degree_multiset(g: &Digraph) -> Vec<(usize, usize)> {
    let mut d: Vec<_> = (1..=g.n()).map(|v| (g.in_degree(v), g.out_degree(v))).collect();
    d.sort_unstable();
    d
}

/// Exact isomorphism test; cheap invariants are compared first.
pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool, OracleError> {
    if a.n() != b.n() || a.arc_count() != b.arc_count() || degree_multiset(a) != degree_multiset(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Distinct canonical forms among the given digraphs.
pub fn iso_classes<'a>(
    graphs: impl IntoIterator<Item = &'a Digraph>,
) -> Result<BTreeSet<CanonicalForm>, OracleError> {
    graphs.into_iter().map(canonical_form).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::blow_up;
    use proptest::prelude::*;

    fn gamma2() -> Digraph {
        Digraph::from_arc_list(2, &[(1, 2)]).unwrap()
    }

    #[test]
    fn reversal_of_a_single_arc() {
        let g = gamma2();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.reverse()).unwrap());
    }

    #[test]
    fn unequal_blow_ups() {
        let a = blow_up(&gamma2(), &[1, 2]).unwrap();
        let b = blow_up(&gamma2(), &[2, 1]).unwrap();
        assert_eq!(iso_classes([&a, &b]).unwrap().len(), 2);
        assert!(!is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn representative_has_the_canonical_string() {
        let g = Digraph::from_arc_list(4, &[(1, 3), (2, 3), (3, 4), (4, 1)]).unwrap();
        let c = canonical_form(&g).unwrap();
        let rep = c.to_digraph();
        assert_eq!(canonical_form(&rep).unwrap(), c);
        assert_eq!(rep.arc_count(), g.arc_count());
    }

    #[test]
    fn too_large() {
        let g = Digraph::empty(10).unwrap();
        assert_eq!(canonical_form(&g), Err(OracleError::TooLarge { n: 10, max: 9 }));
    }

    #[test]
    fn class_counts_on_three_vertices() {
        // There are 16 digraphs on three unlabeled vertices.
        let all: Vec<Digraph> = (0..64).map(|m| Digraph::from_mask(3, m).unwrap()).collect();
        assert_eq!(iso_classes(&all).unwrap().len(), 16);
        let all4: Vec<Digraph> = (0..4096).map(|m| Digraph::from_mask(4, m).unwrap()).collect();
        assert_eq!(iso_classes(&all4).unwrap().len(), 218);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn invariant_under_relabeling(mask in 0u64..1 << 20, perm in perm_strategy(5)) {
            let g = Digraph::from_mask(5, mask).unwrap();
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }

        #[test]
        fn invariant_under_relabeling_at_seven(
            arcs in proptest::collection::btree_set((1usize..=7, 1usize..=7), 0..30),
            perm in perm_strategy(7),
        ) {
            let arcs: Vec<_> = arcs.into_iter().filter(|(u, v)| u != v).collect();
            let g = Digraph::from_arc_list(7, &arcs).unwrap();
            prop_assert!(is_isomorphic(&g, &g.relabel(&perm)).unwrap());
        }
    }
}

//! Constructors and recognizers for the named digraph families.
//!
//! * `Γ_k`: arcs `(i, j)` for `i < j` (the transitive tournament).
//! * `Γ_{k,i}`: `Γ_k` without the arc `(i, i+1)`.
//! * `Γ_{k,0}`: arcs `(i, j)` for `1 < i < j`; vertex 1 is isolated.
//! * `D₄`: arcs `(1,3), (1,4), (2,3), (2,4)`.
//! * Block chains `Γ_{k; k_1..k_s}`: consecutive blocks, each internally a
//!   `Γ_{k_i,0}`, every arc from an earlier block to a later one.
//! * Blow-ups of an acyclic digraph, and the two extremal constructions
//!   for radius and quasi-diameter.

use serde::Serialize;
use thiserror::Error;

use crate::condense::condensation;
use crate::digraph::Digraph;
use crate::distance::Distance;
use crate::metrics::metric_profile;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    GammaK {
        k: usize,
    },
    GammaKI {
        k: usize,
        i: usize,
    },
    GammaK0 {
        k: usize,
    },
    D4,
    /// Block chain on `k` vertices with the given block sizes, each >= 2.
    GammaPartition {
        k: usize,
        blocks: Vec<usize>,
    },
    BlowUp {
        hertz: Digraph,
        sizes: Vec<usize>,
    },
    /// Extremal digraph of radius `k` on `n` vertices. Block `p` holds `a`
    /// vertices and block `p + 1` holds `b`; `b = 0` means only block `p`
    /// is enlarged.
    MaximalRadius {
        n: usize,
        k: usize,
        p: usize,
        split: (usize, usize),
    },
    ReversedMaximalRadius {
        n: usize,
        k: usize,
        p: usize,
        split: (usize, usize),
    },
    /// Biconnected extremal digraph of quasi-diameter 3 built from two
    /// poles and four core classes.
    MaximalQD3 {
        sizes: [usize; 4],
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("the digraph to blow up has a directed cycle")]
    CyclicHertz,
    #[error("expected {expected} block sizes, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("block {0} has size zero")]
    ZeroSize(usize),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, FamilyError> {
    Err(FamilyError::InvalidSpec(msg.into()))
}

fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Digraph {
    let mut g = Digraph::empty(n).expect("family orders are positive");
    for (u, v) in pairs {
        g.set(u - 1, v - 1);
    }
    g
}

fn upper_pairs(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=k).flat_map(move |i| (i + 1..=k).map(move |j| (i, j)))
}

fn gamma_k(k: usize) -> Digraph {
    from_pairs(k, upper_pairs(k))
}

fn gamma_ki(k: usize, i: usize) -> Digraph {
    from_pairs(k, upper_pairs(k).filter(|&a| a != (i, i + 1)))
}

fn gamma_k0(k: usize) -> Digraph {
    from_pairs(k, upper_pairs(k).filter(|&(i, _)| i != 1))
}

fn block_chain(blocks: &[usize]) -> Digraph {
    let k: usize = blocks.iter().sum();
    let mut pairs = Vec::new();
    let mut start = 0;
    for (bi, &size) in blocks.iter().enumerate() {
        // Inside the block: Γ_{size,0} shifted by `start`.
        for (i, j) in upper_pairs(size).filter(|&(i, _)| i != 1) {
            pairs.push((start + i, start + j));
        }
        let later: usize = blocks[bi + 1..].iter().sum();
        for u in start + 1..=start + size {
            for v in start + size + 1..=start + size + later {
                pairs.push((u, v));
            }
        }
        start += size;
    }
    from_pairs(k, pairs)
}

pub fn build_family(spec: &FamilySpec) -> Result<Digraph, FamilyError> {
    match spec {
        &FamilySpec::GammaK { k } => {
            if k == 0 {
                return invalid("GammaK needs k >= 1");
            }
            Ok(gamma_k(k))
        }
        &FamilySpec::GammaKI { k, i } => {
            if k < 2 || i == 0 || i >= k {
                return invalid(format!("GammaKI needs 1 <= i <= k - 1, got k = {k}, i = {i}"));
            }
            Ok(gamma_ki(k, i))
        }
        &FamilySpec::GammaK0 { k } => {
            if k == 0 {
                return invalid("GammaK0 needs k >= 1");
            }
            Ok(gamma_k0(k))
        }
        FamilySpec::D4 => Ok(block_chain(&[2, 2])),
        FamilySpec::GammaPartition { k, blocks } => {
            if blocks.is_empty() || blocks.iter().any(|&b| b < 2) {
                return invalid(format!("every block needs at least 2 vertices, got {blocks:?}"));
            }
            let total: usize = blocks.iter().sum();
            if total != *k {
                return invalid(format!("block sizes {blocks:?} sum to {total}, not k = {k}"));
            }
            Ok(block_chain(blocks))
        }
        FamilySpec::BlowUp { hertz, sizes } => blow_up(hertz, sizes),
        &FamilySpec::MaximalRadius { n, k, p, split } => maximal_radius_digraph(n, k, p, split),
        &FamilySpec::ReversedMaximalRadius { n, k, p, split } => {
            Ok(maximal_radius_digraph(n, k, p, split)?.reverse())
        }
        FamilySpec::MaximalQD3 { .. } => maximal_quasidiameter_digraph(spec),
    }
}

/// Replaces vertex `i` of an acyclic digraph by a complete symmetric block
/// of `sizes[i]` vertices and every arc by all block-to-block arcs. Blocks
/// take consecutive labels in order.
pub fn blow_up(hertz: &Digraph, sizes: &[usize]) -> Result<Digraph, FamilyError> {
    let k = hertz.n();
    if sizes.len() != k {
        return Err(FamilyError::SizeMismatch {
            expected: k,
            got: sizes.len(),
        });
    }
    if let Some(i) = sizes.iter().position(|&m| m == 0) {
        return Err(FamilyError::ZeroSize(i + 1));
    }
    if condensation(hertz).len() != k {
        return Err(FamilyError::CyclicHertz);
    }
    let mut offset = vec![0; k + 1];
    for i in 0..k {
        offset[i + 1] = offset[i] + sizes[i];
    }
    let mut g = Digraph::empty(offset[k]).expect("sizes are positive");
    for i in 0..k {
        for u in offset[i]..offset[i + 1] {
            for v in offset[i]..offset[i + 1] {
                if u != v {
                    g.set(u, v);
                }
            }
            for j in hertz.out_iter(i) {
                for v in offset[j]..offset[j + 1] {
                    g.set(u, v);
                }
            }
        }
    }
    Ok(g)
}

fn check_maximal_radius(n: usize, k: usize, p: usize, (a, b): (usize, usize)) -> Result<(), FamilyError> {
    if k < 3 || n < k + 1 {
        return invalid(format!("needs k >= 3 and n >= k + 1, got n = {n}, k = {k}"));
    }
    if a == 0 {
        return invalid("the enlarged block needs a >= 1");
    }
    if b == 0 {
        if a != n - k {
            return invalid(format!("with b = 0 the block size must be a = n - k = {}, got {a}", n - k));
        }
        if !(2..=k).contains(&p) {
            return invalid(format!("with b = 0 the position must satisfy 2 <= p <= k, got p = {p}"));
        }
    } else {
        if a + b != n - k + 1 {
            return invalid(format!("needs a + b = n - k + 1 = {}, got {}", n - k + 1, a + b));
        }
        if !(2..k).contains(&p) {
            return invalid(format!("with b >= 1 the position must satisfy 2 <= p <= k - 1, got p = {p}"));
        }
    }
    Ok(())
}

/// Blocks `X_1..X_{k+1}`, each complete symmetric, all singletons except
/// `X_p` (size `a`) and `X_{p+1}` (size `b`, when `b > 0`). Arcs run from
/// every block to the next, and from `X_j` back to `X_i` for
/// `1 < i < j <= k + 1`.
pub fn maximal_radius_digraph(
    n: usize,
    k: usize,
    p: usize,
    split: (usize, usize),
) -> Result<Digraph, FamilyError> {
    check_maximal_radius(n, k, p, split)?;
    let mut sizes = vec![1; k + 1];
    sizes[p - 1] = split.0;
    if split.1 > 0 {
        sizes[p] = split.1;
    }
    let mut hertz_like = Digraph::empty(k + 1).expect("k >= 3");
    for i in 0..k {
        hertz_like.set(i, i + 1);
    }
    // The back arcs make this pattern cyclic, so expand it by hand.
    for j in 2..=k {
        for i in 1..j {
            hertz_like.set(j, i);
        }
    }
    Ok(expand_pattern(&hertz_like, &sizes))
}

/// Blow-up without the acyclicity check.
fn expand_pattern(pattern: &Digraph, sizes: &[usize]) -> Digraph {
    let k = pattern.n();
    let mut offset = vec![0; k + 1];
    for i in 0..k {
        offset[i + 1] = offset[i] + sizes[i];
    }
    let mut g = Digraph::empty(offset[k]).expect("sizes are positive");
    for i in 0..k {
        for u in offset[i]..offset[i + 1] {
            for v in offset[i]..offset[i + 1] {
                if u != v {
                    g.set(u, v);
                }
            }
            for j in pattern.out_iter(i) {
                for v in offset[j]..offset[j + 1] {
                    g.set(u, v);
                }
            }
        }
    }
    g
}

/// Extremal digraphs of finite quasi-diameter: the radius construction,
/// its reverse, or (for quasi-diameter 3) the two-pole construction.
pub fn maximal_quasidiameter_digraph(spec: &FamilySpec) -> Result<Digraph, FamilyError> {
    match spec {
        FamilySpec::MaximalRadius { .. } | FamilySpec::ReversedMaximalRadius { .. } => build_family(spec),
        FamilySpec::MaximalQD3 { sizes } => {
            let [x1, x2, x3, x4] = *sizes;
            if x1 * x2 + x3 * x4 == 0 {
                return invalid(format!("needs |X1||X2| + |X3||X4| > 0, got sizes {sizes:?}"));
            }
            let core = x1 + x2 + x3 + x4;
            let n = core + 2;
            let (z, v) = (1, n);
            let class = |c: usize| {
                let start = 2 + sizes[..c].iter().sum::<usize>();
                start..start + sizes[c]
            };
            let mut pairs = Vec::new();
            for a in 2..n {
                for b in 2..n {
                    if a != b {
                        pairs.push((a, b));
                    }
                }
            }
            for a in class(0) {
                pairs.extend([(z, a), (a, z)]);
            }
            for a in class(1) {
                pairs.extend([(v, a), (a, v)]);
            }
            for a in class(2) {
                pairs.extend([(a, z), (a, v)]);
            }
            for a in class(3) {
                pairs.extend([(z, a), (v, a)]);
            }
            let g = from_pairs(n, pairs);
            let dm = metric_profile(&g).d_m;
            if dm != Distance::Finite(3) {
                return invalid(format!("sizes {sizes:?} give quasi-diameter {dm}, not 3"));
            }
            Ok(g)
        }
        _ => invalid("not an extremal quasi-diameter family"),
    }
}

/// Which named families an (acyclic) digraph is isomorphic to.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HertzClass {
    /// `Some(k)` when isomorphic to `Γ_k`.
    pub transitive_tournament: Option<usize>,
    /// `Some((k, i))` when isomorphic to `Γ_{k,i}`.
    pub gamma_ki: Option<(usize, usize)>,
    /// `Some(k)` when isomorphic to `Γ_{k,0}`, `k >= 2`.
    pub gamma_k0: Option<usize>,
    /// Ordered block sizes when isomorphic to a block chain.
    pub partition: Option<Vec<usize>>,
    pub d4: bool,
}

impl HertzClass {
    pub fn is_none(&self) -> bool {
        *self == HertzClass::default()
    }
}

/// Vertices (0-based) sorted by (in-degree, out-degree, label).
fn degree_order(h: &Digraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&v| (h.in_degree(v + 1), h.out_degree(v + 1), v));
    order
}

/// `h` relabeled so that `order[p]` becomes vertex `p + 1`.
fn arranged(h: &Digraph, order: &[usize]) -> Digraph {
    let mut perm = vec![0; h.n()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p + 1;
    }
    h.relabel(&perm)
}

/// Every family recognized here has each group of vertices with equal
/// (in-degree, out-degree) made of interchangeable twins, and lists its
/// vertices in degree order already. So sorting the input by degrees and
/// comparing arc sets decides isomorphism exactly.
pub fn recognize_hertz_family(h: &Digraph) -> HertzClass {
    let mut class = HertzClass::default();
    let k = h.n();
    let flags = crate::condense::structure_flags(h);
    if !flags.is_acyclic || !flags.is_transitive {
        return class;
    }
    let sorted = arranged(h, &degree_order(h));
    if sorted == gamma_k(k) {
        class.transitive_tournament = Some(k);
    }
    if k >= 2 {
        // The incomparable pair of Γ_{k,i} sits at positions i, i + 1.
        let incomparable: Vec<usize> = (0..k - 1)
            .filter(|&p| !sorted.has(p, p + 1) && !sorted.has(p + 1, p))
            .collect();
        if let [p] = incomparable[..] {
            if sorted == gamma_ki(k, p + 1) {
                class.gamma_ki = Some((k, p + 1));
            }
        }
        if sorted == gamma_k0(k) {
            class.gamma_k0 = Some(k);
        }
        if let Some(blocks) = chain_blocks(&sorted) {
            if sorted == block_chain(&blocks) {
                class.partition = Some(blocks);
            }
        }
        class.d4 = k == 4 && sorted == block_chain(&[2, 2]);
    }
    class
}

/// Block sizes read off a degree-sorted candidate: blocks are the
/// connected components of the incomparability graph and must occupy
/// consecutive positions.
fn chain_blocks(sorted: &Digraph) -> Option<Vec<usize>> {
    let k = sorted.n();
    let comparable = |a: usize, b: usize| sorted.has(a, b) || sorted.has(b, a);
    let mut component = vec![usize::MAX; k];
    let mut count = 0;
    for s in 0..k {
        if component[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        component[s] = count;
        while let Some(u) = stack.pop() {
            let fresh: Vec<usize> = (0..k)
                .filter(|&w| w != u && component[w] == usize::MAX && !comparable(u, w))
                .collect();
            for w in fresh {
                component[w] = count;
                stack.push(w);
            }
        }
        count += 1;
    }
    let mut blocks = Vec::new();
    let mut p = 0;
    while p < k {
        let c = component[p];
        let len = component[p..].iter().take_while(|&&x| x == c).count();
        if len < 2 || component[p + len..].contains(&c) {
            return None;
        }
        blocks.push(len);
        p += len;
    }
    Some(blocks)
}

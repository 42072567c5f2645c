use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::predicate::{Predicate, Subject};
use super::{OracleError, ScanConfig};
use crate::digraph::Digraph;

/// Largest order the exhaustive scans accept: `2^20` digraphs.
pub const MAX_SCAN_N: usize = 5;
const MIN_SCAN_N: usize = 2;
const CHUNK: u64 = 1 << 12;

fn check_order(n: usize) -> Result<u64, OracleError> {
    if n < MIN_SCAN_N {
        return Err(OracleError::TooSmall { n, min: MIN_SCAN_N });
    }
    if n > MAX_SCAN_N {
        return Err(OracleError::TooLarge { n, max: MAX_SCAN_N });
    }
    Ok(1u64 << Digraph::pair_count(n))
}

/// Every labeled digraph on `n` vertices, by increasing arc mask.
pub fn enumerate_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>, OracleError> {
    let total = check_order(n)?;
    Ok((0..total).map(move |m| Digraph::from_mask(n, m).expect("n <= 5 fits a mask")))
}

/// Folds `visit` over every digraph on `n` vertices.
///
/// Each fixed-size chunk of the mask range starts from `init()`; the chunk
/// states are then merged left to right in chunk order, starting from one
/// more `init()`. As long as `merge` is associative with `init()` as
/// identity, the result does not depend on `cfg.workers`.
pub fn scan<S, I, V, M>(n: usize, cfg: ScanConfig, init: I, visit: V, merge: M) -> Result<S, OracleError>
where
    S: Send,
    I: Fn() -> S + Sync,
    V: Fn(&mut S, &mut Subject) + Sync,
    M: FnMut(S, S) -> S,
{
    let total = check_order(n)?;
    let chunks = total.div_ceil(CHUNK);
    let run = |c: u64| {
        let mut state = init();
        let mut subject = Subject::new(n);
        for mask in c * CHUNK..total.min((c + 1) * CHUNK) {
            subject.load(mask);
            visit(&mut state, &mut subject);
        }
        state
    };
    let parts: Vec<S> = if cfg.workers <= 1 {
        (0..chunks).map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .expect("thread pool");
        pool.install(|| (0..chunks).into_par_iter().map(run).collect())
    };
    Ok(parts.into_iter().fold(init(), merge))
}

pub fn count_labeled(n: usize, pred: &Predicate, cfg: ScanConfig) -> Result<u64, OracleError> {
    scan(
        n,
        cfg,
        || 0u64,
        |c, s| *c += pred.matches(s) as u64,
        |a, b| a + b,
    )
}

/// Keeps the larger arc count, and the smaller mask among equals.
pub(crate) fn better(a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// The largest arc count among digraphs satisfying `pred`, with the
/// smallest-mask maximizer as witness.
pub fn max_arcs_where(n: usize, pred: &Predicate, cfg: ScanConfig) -> Result<(usize, Digraph), OracleError> {
    let best = scan(
        n,
        cfg,
        || None,
        |best: &mut Option<(usize, u64)>, s| {
            let arcs = s.arc_count();
            // Masks rise within a chunk, so only a strictly larger count
            // can replace the current best.
            if best.is_some_and(|(a, _)| arcs <= a) {
                return;
            }
            if pred.matches(s) {
                *best = Some((arcs, s.mask()));
            }
        },
        better,
    )?;
    let (arcs, mask) = best.ok_or(OracleError::EmptyPredicate)?;
    Ok((arcs, Digraph::from_mask(n, mask).expect("n <= 5 fits a mask")))
}

/// Canonical forms of all digraphs satisfying `pred`.
pub fn iso_class_set(n: usize, pred: &Predicate, cfg: ScanConfig) -> Result<BTreeSet<CanonicalForm>, OracleError> {
    scan(
        n,
        cfg,
        BTreeSet::new,
        |set, s| {
            if pred.matches(s) {
                set.insert(canonical_form(s.digraph()).expect("n <= 5"));
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
}

pub fn iso_class_count(n: usize, pred: &Predicate, cfg: ScanConfig) -> Result<usize, OracleError> {
    Ok(iso_class_set(n, pred, cfg)?.len())
}

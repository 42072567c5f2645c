//! Exhaustive search over all labeled loop-free digraphs of a small order.
//!
//! A digraph on `n` vertices is indexed by its arc mask over the `n(n-1)`
//! ordered pairs in row-major order, so the whole space is the integer
//! range `0..2^{n(n-1)}`. Scans split that range into fixed chunks, run
//! the chunks on a thread pool, and merge per-chunk results in chunk
//! order. The outcome never depends on the worker count.

mod canon;
mod predicate;
mod scan;
pub mod scenarios;

use thiserror::Error;

use crate::families::FamilyError;
use crate::formulas::DomainError;

pub use canon::{canonical_form, is_isomorphic, iso_classes, CanonicalForm, MAX_CANONICAL_N};
pub use predicate::{Atom, Predicate, Subject};
pub use scan::{count_labeled, enumerate_digraphs, iso_class_count, iso_class_set, max_arcs_where, scan, MAX_SCAN_N};
pub use scenarios::{run_scenario, scenario_names, Cell, CellStatus, VerificationReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n = {n} is below the minimum {min}")]
    TooSmall { n: usize, min: usize },
    #[error("no digraph satisfies the predicate")]
    EmptyPredicate,
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Domain(#[from] DomainError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Threads used by a scan; at least 1.
    pub workers: usize,
}

impl ScanConfig {
    pub fn with_workers(workers: usize) -> Self {
        ScanConfig {
            workers: workers.max(1),
        }
    }
}

impl Default for ScanConfig {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
        ScanConfig { workers }
    }
}

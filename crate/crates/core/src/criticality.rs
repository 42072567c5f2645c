//! Criticality under single-arc addition and maximality by arc count.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Arc, Digraph, GraphError};
use crate::distance::Distance;
use crate::formulas::{bound_closed_form, BoundFormula, DomainError};
use crate::metrics::{metric_profile, MetricProfile, Scratch, Summary};
use crate::oracle::{max_arcs_where, Atom, OracleError, Predicate, ScanConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Invariant {
    D,
    DM,
    R,
    RM,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [Invariant::D, Invariant::DM, Invariant::R, Invariant::RM];

    pub fn of_summary(self, s: &Summary) -> Distance {
        match self {
            Invariant::D => s.d,
            Invariant::DM => s.d_m,
            Invariant::R => s.r,
            Invariant::RM => s.r_m,
        }
    }

    pub fn of_profile(self, p: &MetricProfile) -> Distance {
        match self {
            Invariant::D => p.d,
            Invariant::DM => p.d_m,
            Invariant::R => p.r,
            Invariant::RM => p.r_m,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Invariant::D => "d",
            Invariant::DM => "d_m",
            Invariant::R => "r",
            Invariant::RM => "r_m",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "d" => Ok(Invariant::D),
            "dm" | "d_m" => Ok(Invariant::DM),
            "r" => Ok(Invariant::R),
            "rm" | "r_m" => Ok(Invariant::RM),
            _ => Err(format!("unknown invariant {s:?} (expected d, dm, r or rm)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ArcEffect {
    pub arc: Arc,
    pub bicomponents_before: usize,
    pub bicomponents_after: usize,
    pub invariant_before: Distance,
    pub invariant_after: Distance,
    /// The arc merges bicomponents or strictly lowers the invariant.
    /// Infinity to any finite value counts as lowering.
    pub qualifies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalityVerdict {
    pub invariant: Invariant,
    pub critical: bool,
    pub effects: Vec<ArcEffect>,
}

impl CriticalityVerdict {
    /// The first missing arc (lexicographically) that does not qualify.
    pub fn first_failure(&self) -> Option<&ArcEffect> {
        self.effects.iter().find(|e| !e.qualifies)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0} is infinite; maximality needs a finite value")]
    InfiniteInvariant(Invariant),
    #[error("maximality is supported for r and d_m only, not {0}")]
    UnsupportedInvariant(Invariant),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Ordered pairs `(u, v)`, `u != v`, that are not arcs, lexicographically.
pub fn missing_arcs(g: &Digraph) -> Vec<Arc> {
    let n = g.n();
    let mut out = Vec::with_capacity(Digraph::pair_count(n) - g.arc_count());
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.has(u, v) {
                out.push((u + 1, v + 1));
            }
        }
    }
    out
}

fn qualifies(inv: Invariant, before: &Summary, after: &Summary) -> bool {
    after.bicomponents < before.bicomponents || inv.of_summary(after) < inv.of_summary(before)
}

fn effect(inv: Invariant, arc: Arc, before: &Summary, after: &Summary) -> ArcEffect {
    ArcEffect {
        arc,
        bicomponents_before: before.bicomponents,
        bicomponents_after: after.bicomponents,
        invariant_before: inv.of_summary(before),
        invariant_after: inv.of_summary(after),
        qualifies: qualifies(inv, before, after),
    }
}

pub fn arc_effect(g: &Digraph, arc: Arc, inv: Invariant) -> Result<ArcEffect, CriticalityError> {
    let grown = g.with_arc(arc.0, arc.1)?;
    let mut scratch = Scratch::new(g);
    let before = scratch.summary(g);
    let after = scratch.summary(&grown);
    Ok(effect(inv, arc, &before, &after))
}

/// Evaluates every missing arc. A digraph without missing arcs is
/// vacuously critical.
pub fn is_critical(g: &Digraph, inv: Invariant) -> CriticalityVerdict {
    let mut probe = CompletionProbe::new(g);
    let before = probe.scratch.summary(g);
    let mut effects = Vec::new();
    probe.for_each_completion(g, |arc, after| {
        effects.push(effect(inv, arc, &before, after));
        true
    });
    CriticalityVerdict {
        invariant: inv,
        critical: effects.iter().all(|e| e.qualifies),
        effects,
    }
}

/// Reusable state for testing all single-arc completions of many digraphs
/// of one order without allocating.
#[derive(Clone, Debug)]
pub struct CompletionProbe {
    scratch: Scratch,
    work: Digraph,
}

impl CompletionProbe {
    pub fn new(g: &Digraph) -> Self {
        CompletionProbe {
            scratch: Scratch::new(g),
            work: g.clone(),
        }
    }

    pub fn summary(&mut self, g: &Digraph) -> Summary {
        self.scratch.summary(g)
    }

    /// Calls `f` with each missing arc and the summary of `g` plus that arc,
    /// in lexicographic arc order. Stops early when `f` returns false; the
    /// return value says whether every call returned true.
    pub fn for_each_completion(
        &mut self,
        g: &Digraph,
        mut f: impl FnMut(Arc, &Summary) -> bool,
    ) -> bool {
        self.work.clone_from(g);
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                if u == v || g.has(u, v) {
                    continue;
                }
                self.work.set(u, v);
                let after = self.scratch.summary(&self.work);
                self.work.clear(u, v);
                if !f((u + 1, v + 1), &after) {
                    return false;
                }
            }
        }
        true
    }

    /// Short-circuiting criticality test against a precomputed summary.
    pub fn is_critical(&mut self, g: &Digraph, inv: Invariant, before: &Summary) -> bool {
        let before = *before;
        self.for_each_completion(g, |_, after| qualifies(inv, &before, after))
    }
}

/// Where `is_maximal` takes the maximum arc count from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxArcsSource {
    ClosedForm,
    /// Exhaustive search; only available for `2 <= n <= 5`.
    Oracle(ScanConfig),
}

/// Whether `g` has the largest arc count among digraphs of its order with
/// the same finite radius (`R`) or quasi-diameter (`DM`).
pub fn is_maximal(
    g: &Digraph,
    inv: Invariant,
    source: MaxArcsSource,
) -> Result<bool, CriticalityError> {
    if !matches!(inv, Invariant::R | Invariant::DM) {
        return Err(CriticalityError::UnsupportedInvariant(inv));
    }
    let value = inv.of_profile(&metric_profile(g));
    let Distance::Finite(k) = value else {
        return Err(CriticalityError::InfiniteInvariant(inv));
    };
    let n = g.n();
    let best = match source {
        MaxArcsSource::ClosedForm => {
            let formula = if inv == Invariant::R {
                BoundFormula::G
            } else {
                BoundFormula::F
            };
            let v = bound_closed_form(formula, n as u64, k as u64)?;
            usize::try_from(v).expect("arc bounds are nonnegative")
        }
        MaxArcsSource::Oracle(cfg) => {
            let atom = if inv == Invariant::R {
                Atom::Radius(value)
            } else {
                Atom::QuasiDiameter(value)
            };
            max_arcs_where(n, &Predicate::new(vec![atom])?, cfg)?.0
        }
    };
    Ok(g.arc_count() == best)
}
